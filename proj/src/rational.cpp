#include "oscalg/rational.hpp"

#include <cctype>

namespace oscalg {

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rat rat_parse(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_token(text)) {
      throw std::invalid_argument("not a rational: '" + text + "'");
    }
    return Rat(Int(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den)) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
  Int d(den);
  if (d == 0) {
    throw std::invalid_argument("zero denominator in '" + text + "'");
  }
  // The two-argument constructor canonicalizes (the string constructor does not).
  return Rat(Int(num), d);
}

std::string rat_str(const Rat& a) {
  if (denominator(a) == 1) return numerator(a).str();
  return numerator(a).str() + "/" + denominator(a).str();
}

Rat rat_inv(const Rat& a) {
  if (a == 0) throw std::domain_error("inverse of zero");
  return Rat(denominator(a), numerator(a));
}

Rat rat_div(const Rat& a, const Rat& b) {
  if (b == 0) throw std::domain_error("division by zero");
  return a / b;
}

}  // namespace oscalg

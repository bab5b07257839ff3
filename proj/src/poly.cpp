#include "oscalg/poly.hpp"

#include <algorithm>
#include <sstream>

namespace oscalg {

namespace {

// Descending graded-lex: larger total degree first, ties broken by the
// lexicographically larger exponent vector (variables in name order).
bool grlex_greater(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
  unsigned ta = 0, tb = 0;
  for (unsigned e : a) ta += e;
  for (unsigned e : b) tb += e;
  if (ta != tb) return ta > tb;
  return a > b;
}

Rat rat_pow(const Rat& base, unsigned e) {
  Rat r(1);
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

Poly::Poly(const Rat& constant) {
  if (constant != 0) terms_.push_back(Term{{}, constant});
}

Poly::Poly(long constant) : Poly(Rat(constant)) {}

Poly Poly::variable(const std::string& name) {
  Poly p;
  p.vars_ = {name};
  p.terms_.push_back(Term{{1u}, Rat(1)});
  return p;
}

Rat Poly::constant_value() const {
  if (terms_.empty()) return Rat(0);
  if (!vars_.empty()) throw std::domain_error("polynomial is not constant: " + str());
  return terms_.front().coeff;
}

int Poly::degree() const {
  int d = -1;
  for (const Term& t : terms_) {
    int td = 0;
    for (unsigned e : t.exps) td += static_cast<int>(e);
    d = std::max(d, td);
  }
  return d;
}

Poly Poly::make(std::vector<std::string> vars, std::map<std::vector<unsigned>, Rat> acc) {
  const std::size_t nv = vars.size();
  std::vector<bool> used(nv, false);
  for (auto it = acc.begin(); it != acc.end();) {
    if (it->second == 0) {
      it = acc.erase(it);
      continue;
    }
    for (std::size_t v = 0; v < nv; ++v) {
      if (it->first[v] > 0) used[v] = true;
    }
    ++it;
  }

  std::vector<std::size_t> keep;
  for (std::size_t v = 0; v < nv; ++v) {
    if (used[v]) keep.push_back(v);
  }

  Poly out;
  for (std::size_t v : keep) out.vars_.push_back(std::move(vars[v]));
  for (auto& [exps, coeff] : acc) {
    Term t;
    t.exps.reserve(keep.size());
    for (std::size_t v : keep) t.exps.push_back(exps[v]);
    t.coeff = coeff;
    out.terms_.push_back(std::move(t));
  }
  std::sort(out.terms_.begin(), out.terms_.end(),
            [](const Term& a, const Term& b) { return grlex_greater(a.exps, b.exps); });
  return out;
}

namespace {

// Maps each of p's exponent vectors onto the merged variable list.
std::vector<std::size_t> var_positions(const std::vector<std::string>& sub,
                                       const std::vector<std::string>& merged) {
  std::vector<std::size_t> pos(sub.size());
  for (std::size_t i = 0; i < sub.size(); ++i) {
    pos[i] = static_cast<std::size_t>(
        std::lower_bound(merged.begin(), merged.end(), sub[i]) - merged.begin());
  }
  return pos;
}

std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
  std::vector<std::string> m;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(m));
  return m;
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
  std::vector<std::string> merged = merge_vars(vars_, o.vars_);
  const auto pa = var_positions(vars_, merged);
  const auto pb = var_positions(o.vars_, merged);
  std::map<std::vector<unsigned>, Rat> acc;
  for (const Term& t : terms_) {
    std::vector<unsigned> e(merged.size(), 0);
    for (std::size_t i = 0; i < pa.size(); ++i) e[pa[i]] = t.exps[i];
    acc[std::move(e)] += t.coeff;
  }
  for (const Term& t : o.terms_) {
    std::vector<unsigned> e(merged.size(), 0);
    for (std::size_t i = 0; i < pb.size(); ++i) e[pb[i]] = t.exps[i];
    acc[std::move(e)] += t.coeff;
  }
  *this = make(std::move(merged), std::move(acc));
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly Poly::operator-() const {
  Poly p(*this);
  for (Term& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Poly& Poly::operator*=(const Poly& o) {
  if (is_zero() || o.is_zero()) {
    *this = Poly();
    return *this;
  }
  std::vector<std::string> merged = merge_vars(vars_, o.vars_);
  const auto pa = var_positions(vars_, merged);
  const auto pb = var_positions(o.vars_, merged);
  std::map<std::vector<unsigned>, Rat> acc;
  for (const Term& ta : terms_) {
    std::vector<unsigned> ea(merged.size(), 0);
    for (std::size_t i = 0; i < pa.size(); ++i) ea[pa[i]] = ta.exps[i];
    for (const Term& tb : o.terms_) {
      std::vector<unsigned> e = ea;
      for (std::size_t i = 0; i < pb.size(); ++i) e[pb[i]] += tb.exps[i];
      acc[std::move(e)] += ta.coeff * tb.coeff;
    }
  }
  *this = make(std::move(merged), std::move(acc));
  return *this;
}

Poly& Poly::operator*=(const Rat& s) {
  if (s == 0) {
    *this = Poly();
    return *this;
  }
  for (Term& t : terms_) t.coeff *= s;
  return *this;
}

Rat Poly::eval(const std::map<std::string, Rat>& assignment) const {
  std::vector<Rat> values(vars_.size());
  for (std::size_t v = 0; v < vars_.size(); ++v) {
    auto it = assignment.find(vars_[v]);
    if (it == assignment.end()) {
      throw std::invalid_argument("unassigned variable '" + vars_[v] + "'");
    }
    values[v] = it->second;
  }
  Rat sum(0);
  for (const Term& t : terms_) {
    Rat m = t.coeff;
    for (std::size_t v = 0; v < vars_.size(); ++v) m *= rat_pow(values[v], t.exps[v]);
    sum += m;
  }
  return sum;
}

Poly Poly::subst(const std::map<std::string, Poly>& assignment) const {
  Poly sum;
  for (const Term& t : terms_) {
    Poly m(t.coeff);
    for (std::size_t v = 0; v < vars_.size(); ++v) {
      if (t.exps[v] == 0) continue;
      auto it = assignment.find(vars_[v]);
      const Poly factor = (it != assignment.end()) ? it->second : variable(vars_[v]);
      for (unsigned e = 0; e < t.exps[v]; ++e) m *= factor;
    }
    sum += m;
  }
  return sum;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms_) {
    Rat c = t.coeff;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;

    std::string mono;
    for (std::size_t v = 0; v < vars_.size(); ++v) {
      if (t.exps[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[v];
      if (t.exps[v] > 1) mono += "^" + std::to_string(t.exps[v]);
    }
    if (mono.empty()) {
      os << rat_str(c);
    } else if (c == 1) {
      os << mono;
    } else {
      os << rat_str(c) << "*" << mono;
    }
  }
  return os.str();
}

Poly operator+(Poly a, const Poly& b) { return a += b; }
Poly operator-(Poly a, const Poly& b) { return a -= b; }
Poly operator*(Poly a, const Poly& b) { return a *= b; }
Poly operator*(Poly a, const Rat& s) { return a *= s; }
Poly operator*(const Rat& s, Poly a) { return a *= s; }

}  // namespace oscalg

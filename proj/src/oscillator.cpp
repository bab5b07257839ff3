#include "oscalg/oscillator.hpp"

#include <sstream>
#include <stdexcept>

namespace oscalg {

Lambda make_lambda(std::vector<Rat> values) {
  if (values.empty()) throw std::invalid_argument("lambda: at least one frequency required");
  for (size_t i = 0; i < values.size(); ++i) {
    if (values[i] <= 0) throw std::invalid_argument("lambda: frequencies must be positive");
    if (i > 0 && values[i] < values[i - 1])
      throw std::invalid_argument("lambda: frequencies must be nondecreasing");
  }
  return Lambda{std::move(values)};
}

Lambda lambda_parse(const std::string& text) {
  std::vector<Rat> vals;
  std::string tok;
  std::istringstream is(text);
  while (std::getline(is, tok, ',')) vals.push_back(rat_parse(tok));
  if (vals.empty()) throw std::invalid_argument("lambda: empty list");
  return make_lambda(std::move(vals));
}

Basis oscillator_basis(int n) {
  if (n < 1) throw std::invalid_argument("oscillator_basis: n must be >= 1");
  std::vector<std::string> labels = {"e-1", "e0"};
  for (int i = 1; i <= n; ++i) {
    labels.push_back("e" + std::to_string(i));
    labels.push_back("ê" + std::to_string(i));  // ê
  }
  return make_basis(labels);
}

BilinearMap build_oscillator(const Lambda& lambda) {
  const int n = lambda.n();
  BilinearMap b(oscillator_basis(n));
  for (int i = 1; i <= n; ++i) {
    Poly li(lambda.values[i - 1]);
    b.set(idx_em1(), idx_e(i), idx_ec(i), li);
    b.set(idx_e(i), idx_em1(), idx_ec(i), -li);
    b.set(idx_em1(), idx_ec(i), idx_e(i), -li);
    b.set(idx_ec(i), idx_em1(), idx_e(i), li);
    b.set(idx_e(i), idx_ec(i), idx_e0(), Poly(Rat(1)));
    b.set(idx_ec(i), idx_e(i), idx_e0(), Poly(Rat(-1)));
  }
  return b;
}

BilinearForm build_k_lambda(const Lambda& lambda) {
  const int n = lambda.n();
  Basis basis = oscillator_basis(n);
  MatQ m(basis.dim(), basis.dim());
  m.at(idx_em1(), idx_e0()) = Rat(1);
  m.at(idx_e0(), idx_em1()) = Rat(1);
  for (int i = 1; i <= n; ++i) {
    Rat inv = rat_inv(lambda.values[i - 1]);
    m.at(idx_e(i), idx_e(i)) = inv;
    m.at(idx_ec(i), idx_ec(i)) = inv;
  }
  return BilinearForm(basis, m, FormSymmetry::symmetric);
}

BilinearForm build_omega(int n) {
  Basis basis = oscillator_basis(n);
  MatQ m(basis.dim(), basis.dim());
  for (int i = 1; i <= n; ++i) {
    m.at(idx_e(i), idx_ec(i)) = Rat(1);
    m.at(idx_ec(i), idx_e(i)) = Rat(-1);
  }
  return BilinearForm(basis, m, FormSymmetry::skew);
}

LinearMap build_J_mu(int n, const std::vector<Poly>& mu) {
  if ((int)mu.size() != n) throw std::invalid_argument("build_J_mu: need n entries");
  Basis basis = oscillator_basis(n);
  MatP m(basis.dim(), basis.dim());
  for (int i = 1; i <= n; ++i) {
    m.at(idx_ec(i), idx_e(i)) = mu[i - 1];   // J(e_i) = μ_i ê_i
    m.at(idx_e(i), idx_ec(i)) = -mu[i - 1];  // J(ê_i) = −μ_i e_i
  }
  return LinearMap(basis, m);
}

LinearMap build_J_mu(int n, const std::vector<Rat>& mu) {
  std::vector<Poly> p;
  p.reserve(mu.size());
  for (const Rat& q : mu) p.emplace_back(q);
  return build_J_mu(n, p);
}

bool is_generic(const Lambda& lambda) {
  const auto& v = lambda.values;
  const int n = (int)v.size();
  for (int i = 1; i < n; ++i)
    if (!(v[i - 1] < v[i])) return false;
  for (int k = 2; k < n; ++k)
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (v[k] == v[i] + v[j]) return false;
  return true;
}

BilinearMap poisson_product(int n, const Poly& c) {
  BilinearMap p(oscillator_basis(n));
  p.set(idx_em1(), idx_em1(), idx_e0(), c);
  return p;
}

BilinearMap leibniz_product(const Lambda& lambda, const Poly& c) {
  return build_oscillator(lambda) + poisson_product(lambda.n(), c);
}

}  // namespace oscalg

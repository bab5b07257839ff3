#include "oscalg/bialgebra.hpp"

#include "oscalg/checks.hpp"
#include "oscalg/serial_ref.hpp"

#include <sstream>
#include <stdexcept>

namespace oscalg {

namespace {

MatP scaled_mat(MatP m, const Poly& s) {
  for (int j = 0; j < m.rows(); ++j)
    for (int k = 0; k < m.cols(); ++k) m.at(j, k) *= s;
  return m;
}

// derivation extension of an endomorphism to ⊗²: A·T + T·Aᵀ
MatP ext2(const MatP& A, const MatP& T) { return A * T + T * A.transpose(); }

}  // namespace

RTensor::RTensor(Basis basis, MatP m) : basis_(std::move(basis)), m_(std::move(m)) {
  const int d = basis_.dim();
  if (m_.rows() != d || m_.cols() != d) throw std::invalid_argument("RTensor: shape mismatch");
  for (int j = 0; j < d; ++j)
    for (int k = j; k < d; ++k)
      if (!(m_.at(j, k) + m_.at(k, j)).is_zero())
        throw std::invalid_argument("RTensor: matrix is not skew");
}

RTensor RTensor::zero(const Basis& basis) {
  return RTensor(basis, MatP(basis.dim(), basis.dim()));
}

std::vector<Poly> RTensor::sharp(const std::vector<Poly>& alpha) const {
  if ((int)alpha.size() != basis_.dim()) throw std::invalid_argument("RTensor::sharp: size");
  return m_.transpose().apply(alpha);
}

bool RTensor::in_wedge2_S() const {
  const int d = basis_.dim();
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < 2 && k < d; ++k)
      if (!m_.at(j, k).is_zero() || !m_.at(k, j).is_zero()) return false;
  return true;
}

RTensor omega_r1_r2(const BilinearForm& omega, const RTensor& r1, const RTensor& r2) {
  if (!(omega.basis() == r1.basis()) || !(r1.basis() == r2.basis()))
    throw std::invalid_argument("omega_r1_r2: basis mismatch");
  const int d = omega.dim();
  MatP out(d, d);
  const Poly half{Rat(1, 2)};
  for (int p = 0; p < d; ++p) {
    std::vector<Poly> a1 = r1.sharp(basis_vector(d, p));
    std::vector<Poly> a2 = r2.sharp(basis_vector(d, p));
    for (int q = 0; q < d; ++q) {
      std::vector<Poly> b1 = r1.sharp(basis_vector(d, q));
      std::vector<Poly> b2 = r2.sharp(basis_vector(d, q));
      out.at(p, q) = (omega.eval(a1, b2) + omega.eval(a2, b1)) * half;
    }
  }
  return RTensor(omega.basis(), std::move(out));
}

RTensor check_r_condition(const Lambda& lambda, const RTensor& r, const std::vector<Poly>& mu) {
  if (!r.in_wedge2_S())
    throw std::invalid_argument("check_r_condition: r must live in the symplectic block");
  const int n = lambda.n();
  BilinearMap bracket = build_oscillator(lambda);
  if (!(bracket.basis() == r.basis()))
    throw std::invalid_argument("check_r_condition: basis mismatch");
  const int d = r.basis().dim();

  MatP ad_r = ad_on_tensor(bracket, basis_vector(d, idx_em1()), r.matrix());
  MatP jm = build_J_mu(n, mu).matrix();
  MatP term1 = omega_r1_r2(build_omega(n), r, RTensor(r.basis(), ad_r)).matrix();
  MatP term2 = ext2(jm, ad_r);
  return RTensor(r.basis(), term1 - term2);
}

Coproduct build_delta_lie(const Lambda& lambda, const RTensor& r, const std::vector<Poly>& u0,
                          const std::vector<Poly>& mu) {
  const int n = lambda.n();
  BilinearMap bracket = build_oscillator(lambda);
  const int d = bracket.dim();
  if (!r.in_wedge2_S()) throw std::invalid_argument("build_delta_lie: r outside symplectic block");
  if ((int)u0.size() != d || !u0[idx_em1()].is_zero() || !u0[idx_e0()].is_zero())
    throw std::invalid_argument("build_delta_lie: u0 must lie in the symplectic block");
  LinearMap J = build_J_mu(n, mu);
  std::vector<Poly> e0 = basis_vector(d, idx_e0());

  Coproduct delta(bracket.basis());
  for (int i = 0; i < d; ++i) {
    std::vector<Poly> bi = basis_vector(d, i);
    std::vector<Poly> w = vec_add(J.apply(bi), bracket.apply(u0, bi));
    MatP comp = ad_on_tensor(bracket, bi, r.matrix()) +
                scaled_mat(tensor_wedge(e0, w), Poly(Rat(2)));
    delta.set_comp(i, std::move(comp));
  }
  return delta;
}

LeibnizDelta build_delta_leibniz(const Lambda& lambda, const Poly& gamma, const RTensor& r,
                                 const std::vector<Poly>& u0, const std::vector<Poly>& mu) {
  const int d = 2 * lambda.n() + 2;
  Coproduct delta = build_delta_lie(lambda, r, u0, mu);
  std::vector<Poly> e0 = basis_vector(d, idx_e0());
  delta.set_comp(idx_em1(),
                 delta.comp(idx_em1()) + scaled_mat(tensor_odot(e0, e0), gamma));
  bool ok = check_r_condition(lambda, r, mu).is_zero();
  return LeibnizDelta{std::move(delta), ok};
}

BilinearMap build_phi(const BilinearMap& product_on_A, const Coproduct& delta) {
  if (!(product_on_A.basis() == delta.basis()))
    throw std::invalid_argument("build_phi: basis mismatch");
  const int D = product_on_A.dim();
  Basis big = doubled_basis(product_on_A.basis());
  BilinearMap phi(big);

  // A * A: the given product
  for (const auto& [i, j, k, c] : product_on_A.entries()) phi.add(i, j, k, c);
  // A* * A*: the dual product read off the coproduct
  for (const auto& [i, j, k, c] : delta.entries()) phi.add(D + j, D + k, D + i, c);
  // b_i * b_j^*: pairing-dual right action into A, left action into A*
  for (int i = 0; i < D; ++i)
    for (int j = 0; j < D; ++j) {
      for (int m = 0; m < D; ++m) {
        const Poly& q = delta.coeff(i, j, m);  // Δ(b_i) coefficient at (j,m)
        if (!q.is_zero()) phi.add(i, D + j, m, q);
        const Poly& p = product_on_A.coeff(m, i, j);
        if (!p.is_zero()) phi.add(i, D + j, D + m, p);
      }
    }
  // b_i^* * b_j
  for (int i = 0; i < D; ++i)
    for (int j = 0; j < D; ++j)
      for (int m = 0; m < D; ++m) {
        const Poly& q = delta.coeff(j, m, i);  // Δ(b_j) coefficient at (m,i)
        if (!q.is_zero()) phi.add(D + i, j, m, q);
        const Poly& p = product_on_A.coeff(j, m, i);
        if (!p.is_zero()) phi.add(D + i, j, D + m, p);
      }
  return phi;
}

CheckReport check_phi_pairing_invariance(const BilinearMap& phi) {
  const int dd = phi.dim();
  if (dd % 2 != 0) throw std::invalid_argument("check_phi_pairing_invariance: odd dimension");
  const int D = dd / 2;
  MatQ b(dd, dd);
  for (int i = 0; i < D; ++i) {
    b.at(i, D + i) = Rat(1);
    b.at(D + i, i) = Rat(1);
  }
  BilinearForm pairing(phi.basis(), std::move(b), FormSymmetry::symmetric);
  CheckReport rep = check_form_invariance(pairing, phi, InvarianceMode::product);
  rep.check = "phi_pairing_invariance";
  return rep;
}

namespace {

void push_tensor_violations(CheckReport& rep, const Basis& basis, const std::string& identity,
                            std::vector<int> at, const MatP& m) {
  if (m.is_zero()) return;
  Violation v;
  v.identity = identity;
  v.at_text = triple_text(basis, at);
  v.at = std::move(at);
  std::ostringstream os;
  bool first = true;
  for (int j = 0; j < m.rows(); ++j)
    for (int k = 0; k < m.cols(); ++k) {
      if (m.at(j, k).is_zero()) continue;
      if (!first) os << " + ";
      os << "(" << m.at(j, k).str() << ")*" << basis.labels[j] << "⊗" << basis.labels[k];
      first = false;
      v.residual.push_back(m.at(j, k));
    }
  v.residual_text = os.str();
  rep.violations.push_back(std::move(v));
}

}  // namespace

LeibnizBialgebraReport check_leibniz_bialgebra(const BilinearMap& L_product,
                                               const Coproduct& delta) {
  if (!check_symmetric_leibniz(L_product).pass())
    throw std::invalid_argument("check_leibniz_bialgebra: product is not symmetric Leibniz");
  const Basis& basis = L_product.basis();
  const int d = basis.dim();

  AdmissibleSplit split = split_admissible(L_product);
  BilinearMap half_bracket = split.bracket.scaled(Rat(1, 2));
  const BilinearMap& circ = split.circ;
  auto [dL, da] = twist_split(delta);

  LeibnizBialgebraReport out;
  out.details.check = "leibniz_bialgebra";
  CheckReport& rep = out.details;

  // 1: Lie bialgebra for (half bracket, skew half)
  {
    CheckReport coc = check_cocycle(half_bracket, dL);
    for (auto& v : coc.violations) {
      v.identity = "1-cocycle";
      rep.violations.push_back(std::move(v));
    }
    CheckReport dj = check_jacobi(dual_product(dL));
    for (auto& v : dj.violations) {
      v.identity = "1-dual-jacobi";
      rep.violations.push_back(std::move(v));
    }
    out.condition_ok[0] = coc.pass() && dj.pass();
  }

  // 2: (split' ⊗ I) ∘ split'' = 0 for the three mixed/symmetric choices.
  // Component (p,q,k) of ((Δ'⊗I)∘Δ'')(b_i) is Σ_j Δ''(i)[j][k]·Δ'(j)[p][q].
  auto cond2 = [&](const Coproduct& outer, const Coproduct& inner, const std::string& name) {
    bool ok = true;
    for (int i = 0; i < d; ++i) {
      MatP acc(d * d, d);  // rows flatten (p,q), cols k
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
          const Poly& cjk = inner.comp(i).at(j, k);
          if (cjk.is_zero()) continue;
          for (int p = 0; p < d; ++p)
            for (int q = 0; q < d; ++q) {
              const Poly& o = outer.comp(j).at(p, q);
              if (!o.is_zero()) acc.at(p * d + q, k) += o * cjk;
            }
        }
      if (!acc.is_zero()) {
        ok = false;
        Violation v;
        v.identity = name;
        v.at = {i};
        v.at_text = "(" + basis.labels[i] + ")";
        std::ostringstream os;
        for (int p = 0; p < d; ++p)
          for (int q = 0; q < d; ++q)
            for (int k = 0; k < d; ++k)
              if (!acc.at(p * d + q, k).is_zero()) {
                if (!v.residual.empty()) os << " + ";
                os << "(" << acc.at(p * d + q, k).str() << ")*" << basis.labels[p] << "⊗"
                   << basis.labels[q] << "⊗" << basis.labels[k];
                v.residual.push_back(acc.at(p * d + q, k));
              }
        v.residual_text = os.str();
        rep.violations.push_back(std::move(v));
      }
    }
    return ok;
  };
  {
    bool a = cond2(da, da, "2-sym-sym");
    bool b = cond2(da, dL, "2-sym-skew");
    bool c = cond2(dL, da, "2-skew-sym");
    out.condition_ok[1] = a && b && c;
  }

  // 3: Δ_a(x•y) = Δ_L(x•y) = Δ_a([x,y]) = 0
  {
    bool ok = true;
    auto vanish_on = [&](const BilinearMap& prod, const Coproduct& half,
                         const std::string& name) {
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          MatP acc(d, d);
          for (const auto& [k, c] : prod.pair_row(i, j)) acc = acc + scaled_mat(half.comp(k), c);
          if (!acc.is_zero()) {
            ok = false;
            push_tensor_violations(rep, basis, name, {i, j}, acc);
          }
        }
    };
    vanish_on(circ, da, "3-sym-of-circ");
    vanish_on(circ, dL, "3-skew-of-circ");
    vanish_on(half_bracket, da, "3-sym-of-bracket");
    out.condition_ok[2] = ok;
  }

  // Module actions: x ·_a T = (x•−)⊗I on the first slot, T ·_a x = I⊗(−•x),
  // same with the half bracket for ·_L.
  auto left_act = [&](const BilinearMap& prod, int x, const MatP& T) {
    return prod.left_mul_matrix(basis_vector(d, x)) * T;
  };
  auto right_act = [&](const MatP& T, const BilinearMap& prod, int x) {
    return T * prod.swapped_args().left_mul_matrix(basis_vector(d, x)).transpose();
  };

  // 4: y ·_a Δ_a(x) + Δ_a(y) ·_a x = 0
  {
    bool ok = true;
    for (int x = 0; x < d; ++x)
      for (int y = 0; y < d; ++y) {
        MatP m = left_act(circ, y, da.comp(x)) + right_act(da.comp(y), circ, x);
        if (!m.is_zero()) {
          ok = false;
          push_tensor_violations(rep, basis, "4-sym-action", {x, y}, m);
        }
      }
    out.condition_ok[3] = ok;
  }
  // 5: x ·_a Δ_L(y) − Δ_a(x) ·_L y = 0
  {
    bool ok = true;
    for (int x = 0; x < d; ++x)
      for (int y = 0; y < d; ++y) {
        MatP m = left_act(circ, x, dL.comp(y)) - right_act(da.comp(x), half_bracket, y);
        if (!m.is_zero()) {
          ok = false;
          push_tensor_violations(rep, basis, "5-mixed-action", {x, y}, m);
        }
      }
    out.condition_ok[4] = ok;
  }
  // 6: x ·_L Δ_a(y) − Δ_L(x) ·_a y = 0
  {
    bool ok = true;
    for (int x = 0; x < d; ++x)
      for (int y = 0; y < d; ++y) {
        MatP m = left_act(half_bracket, x, da.comp(y)) - right_act(dL.comp(x), circ, y);
        if (!m.is_zero()) {
          ok = false;
          push_tensor_violations(rep, basis, "6-mixed-action", {x, y}, m);
        }
      }
    out.condition_ok[5] = ok;
  }
  return out;
}

BilinearMap expected_dual_bracket(const Lambda& lambda, const RTensor& r,
                                  const std::vector<Poly>& u0, const std::vector<Poly>& mu) {
  const int n = lambda.n();
  BilinearMap bracket = build_oscillator(lambda);
  const int d = bracket.dim();
  BilinearForm omega = build_omega(n);
  LinearMap J = build_J_mu(n, mu);
  MatP ad_r = ad_on_tensor(bracket, basis_vector(d, idx_em1()), r.matrix());
  std::vector<Poly> Du0 = bracket.apply(basis_vector(d, idx_em1()), u0);

  BilinearMap out(dual_basis(bracket.basis()));
  // symplectic-block duals bracket to multiples of e-1*
  for (int p = 2; p < d; ++p)
    for (int q = 2; q < d; ++q)
      if (!ad_r.at(p, q).is_zero()) out.set(p, q, idx_em1(), ad_r.at(p, q));
  // e0* against a symplectic-block dual α:
  //   2·(α ∘ J) − 2·α([e-1,u0])·e-1* + ω(r_#α, ·)
  for (int p = 2; p < d; ++p) {
    std::vector<Poly> alpha = basis_vector(d, p);
    std::vector<Poly> jstar(d);  // α∘J as dual coefficients: (Jᵀ α)
    for (int m = 0; m < d; ++m)
      for (int t = 0; t < d; ++t) jstar[m] += alpha[t] * J.matrix().at(t, m);
    std::vector<Poly> w = r.sharp(alpha);
    for (int m = 0; m < d; ++m) {
      Poly c = Poly(Rat(2)) * jstar[m];
      c += omega.eval(w, basis_vector(d, m));
      if (m == idx_em1()) c -= Poly(Rat(2)) * Du0[p];
      if (!c.is_zero()) {
        out.set(idx_e0(), p, m, c);
        out.set(p, idx_e0(), m, -c);
      }
    }
  }
  return out;
}

}  // namespace oscalg

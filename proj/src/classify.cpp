#include "oscalg/classify.hpp"

#include "oscalg/checks.hpp"
#include "oscalg/oscillator.hpp"
#include "oscalg/sampling.hpp"
#include "oscalg/solvers.hpp"

#include <map>
#include <optional>
#include <stdexcept>

namespace oscalg {

UnknownProduct::UnknownProduct(Basis basis) : basis_(std::move(basis)) {
  const int d = basis_.dim();
  names_.resize(num_unknowns());
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j)
      for (int k = 0; k < d; ++k)
        names_[unknown_index(i, j, k)] = "u" + std::to_string(i) + "_" + std::to_string(j) +
                                         "_" + std::to_string(k);
}

int UnknownProduct::num_unknowns() const {
  const int d = basis_.dim();
  return d * (d + 1) / 2 * d;
}

int UnknownProduct::unknown_index(int i, int j, int k) const {
  return sym_coord_index(basis_.dim(), i, j) * basis_.dim() + k;
}

std::string UnknownProduct::unknown_name(int i, int j, int k) const {
  return names_[unknown_index(i, j, k)];
}

Poly UnknownProduct::unknown(int i, int j, int k) const {
  return Poly::variable(unknown_name(i, j, k));
}

BilinearMap UnknownProduct::materialize(const std::vector<Rat>& coords) const {
  std::vector<Poly> p;
  p.reserve(coords.size());
  for (const Rat& q : coords) p.emplace_back(q);
  return materialize_symbolic(p);
}

BilinearMap UnknownProduct::materialize_symbolic(const std::vector<Poly>& coords) const {
  if ((int)coords.size() != num_unknowns())
    throw std::invalid_argument("materialize: wrong coordinate count");
  const int d = basis_.dim();
  BilinearMap p(basis_);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        const Poly& c = coords[unknown_index(i, j, k)];
        if (!c.is_zero()) p.set(i, j, k, c);
      }
  return p;
}

ConstraintSystem generate_constraints(const BilinearMap& bracket) {
  if (!bracket.is_scalar())
    throw std::invalid_argument("generate_constraints: bracket must be scalar");
  if (!check_jacobi(bracket).pass())
    throw std::invalid_argument("generate_constraints: bracket is not a Lie bracket");
  const int d = bracket.dim();
  UnknownProduct up(bracket.basis());
  const int nu = up.num_unknowns();

  auto cq = [&](int i, int j, int k) {
    const Poly& c = bracket.coeff(i, j, k);
    return c.is_zero() ? Rat(0) : c.constant_value();
  };

  // [b_a, b_b∘b_c] − [b_a,b_b]∘b_c − b_b∘[b_a,b_c] = 0, component m
  MatQ A(d * d * d * d, nu);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c)
        for (int m = 0; m < d; ++m) {
          const int row = ((a * d + b) * d + c) * d + m;
          for (int k = 0; k < d; ++k) {
            Rat q = cq(a, k, m);
            if (q != 0) A.at(row, up.unknown_index(b, c, k)) += q;
            q = cq(a, b, k);
            if (q != 0) A.at(row, up.unknown_index(k, c, m)) -= q;
            q = cq(a, c, k);
            if (q != 0) A.at(row, up.unknown_index(b, k, m)) -= q;
          }
        }

  // associator components (b_a∘b_b)∘b_c − b_a∘(b_b∘b_c)
  std::vector<Poly> quad;
  quad.reserve((size_t)d * d * d * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c)
        for (int m = 0; m < d; ++m) {
          Poly r;
          for (int k = 0; k < d; ++k) {
            r += up.unknown(a, b, k) * up.unknown(k, c, m);
            r -= up.unknown(b, c, k) * up.unknown(a, k, m);
          }
          quad.push_back(std::move(r));
        }

  return ConstraintSystem{std::move(up), std::move(A), std::vector<Rat>((size_t)d * d * d * d),
                          d * d * d, std::move(quad)};
}

AffineSolutionSpace solve_linear_stage(const ConstraintSystem& cs) {
  auto sol = solve_linear(cs.linear, cs.rhs);
  // homogeneous: zero product always solves
  return *sol;
}

std::vector<Poly> quadratic_residuals(const ConstraintSystem& cs,
                                      const AffineSolutionSpace& space) {
  std::vector<Poly> point = space.symbolic_point();
  std::map<std::string, Poly> assign;
  for (int idx = 0; idx < cs.unknowns.num_unknowns(); ++idx)
    assign[cs.unknowns.names()[idx]] = point[idx];
  std::vector<Poly> out(cs.quadratic.size());
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic)
#endif
  for (int i = 0; i < (int)cs.quadratic.size(); ++i) out[i] = cs.quadratic[i].subst(assign);
  return out;
}

namespace {

// standard-layout detection: labels match and bracket equals the rebuilt one
std::optional<Lambda> detect_oscillator(const BilinearMap& bracket) {
  const int d = bracket.dim();
  if (d < 4 || d % 2 != 0) return std::nullopt;
  const int n = (d - 2) / 2;
  if (!(bracket.basis() == oscillator_basis(n))) return std::nullopt;
  std::vector<Rat> lam;
  for (int i = 1; i <= n; ++i) {
    const Poly& c = bracket.coeff(idx_em1(), idx_e(i), idx_ec(i));
    if (!c.is_constant()) return std::nullopt;
    lam.push_back(c.is_zero() ? Rat(0) : c.constant_value());
  }
  try {
    Lambda lambda = make_lambda(lam);
    if (bracket == build_oscillator(lambda)) return lambda;
  } catch (const std::invalid_argument&) {
  }
  return std::nullopt;
}

bool strictly_increasing(const Lambda& lambda) {
  for (size_t i = 1; i < lambda.values.size(); ++i)
    if (!(lambda.values[i - 1] < lambda.values[i])) return false;
  return true;
}

std::vector<Rat> eval_residuals_nonzero(const std::vector<Poly>& residuals,
                                        const std::map<std::string, Rat>& assign) {
  std::vector<Rat> out;
  for (const Poly& r : residuals) {
    if (r.is_zero()) continue;
    Rat v = r.eval(assign);
    if (v != 0) {
      out.push_back(v);
      break;  // one witness suffices
    }
  }
  return out;
}

}  // namespace

ClassifyReport classify_report(const BilinearMap& bracket, std::uint64_t seed, int samples) {
  ClassifyReport rep;
  rep.seed = seed;

  ConstraintSystem cs = generate_constraints(bracket);
  AffineSolutionSpace space = solve_linear_stage(cs);
  rep.linear_dim = space.dim();
  std::vector<Poly> residuals = quadratic_residuals(cs, space);

  const int nu = cs.unknowns.num_unknowns();
  std::optional<Lambda> osc = detect_oscillator(bracket);
  rep.completeness_asserted = osc && strictly_increasing(*osc);

  // family: scalar multiples of the central slot of (first basis)^2
  std::optional<int> family_slot;
  if (osc) family_slot = cs.unknowns.unknown_index(idx_em1(), idx_em1(), idx_e0());

  if (family_slot) {
    std::vector<Rat> e(nu, Rat(0));
    e[*family_slot] = Rat(1);
    bool in_space = space.contains(e);
    bool residuals_vanish = true;
    if (in_space) {
      std::map<std::string, Poly> assign;
      Poly cvar = Poly::variable("c");
      for (int idx = 0; idx < nu; ++idx)
        assign[cs.unknowns.names()[idx]] = (idx == *family_slot) ? cvar : Poly();
      for (const Poly& q : cs.quadratic)
        if (!q.subst(assign).is_zero()) {
          residuals_vanish = false;
          break;
        }
    }
    rep.family_contained = in_space && residuals_vanish;
  } else {
    rep.family_contained = true;  // only the zero product is claimed
  }

  // exclusion sampling: random space points off the family must violate
  // some associator residual
  bool any_residual = false;
  for (const Poly& r : residuals)
    if (!r.is_zero()) {
      any_residual = true;
      break;
    }
  if (space.dim() > 0 && any_residual) {
    int total = 0, excluded = 0;
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic) reduction(+ : total, excluded)
#endif
    for (int s = 0; s < samples; ++s) {
      SampleRng rng(SampleRng::substream(seed, (std::uint64_t)s));
      for (int attempt = 0; attempt < 32; ++attempt) {
        std::vector<Rat> t(space.dim());
        for (auto& v : t) v = rng.rational();
        std::vector<Rat> x = space.point(t);
        bool off_family = false;
        for (int idx = 0; idx < nu; ++idx) {
          if (family_slot && idx == *family_slot) continue;
          if (x[idx] != 0) {
            off_family = true;
            break;
          }
        }
        if (!off_family) continue;
        std::map<std::string, Rat> assign;
        for (int p = 0; p < space.dim(); ++p) assign[space.param_names()[p]] = t[p];
        total += 1;
        if (!eval_residuals_nonzero(residuals, assign).empty()) excluded += 1;
        break;
      }
    }
    rep.samples_total = total;
    rep.samples_excluded = excluded;
  }

  // proof checkpoints for the smallest oscillator
  if (osc && osc->n() == 1) {
    const Lambda& lambda = *osc;
    const Rat lam = lambda.values[0];
    const auto& up = cs.unknowns;
    auto slot = [&](int i, int j, int k) { return up.unknown_index(i, j, k); };

    // central-column coordinate vanishes on the whole space
    {
      bool ok = space.particular()[slot(1, 1, 1)] == 0;
      for (const auto& v : space.basis()) ok = ok && v[slot(1, 1, 1)] == 0;
      rep.checkpoints.push_back({"central-square-coefficient-vanishes", ok});
    }

    // remaining checkpoints hold pointwise; evaluate on random space points
    bool ok_a1 = true, ok_e0 = true, ok_em1 = true, ok_da = true;
    BilinearForm k_form = build_k_lambda(lambda);
    for (int probe = 0; probe < 5; ++probe) {
      SampleRng rng(SampleRng::substream(seed, 1000 + (std::uint64_t)probe));
      std::vector<Rat> t(space.dim());
      for (auto& v : t) v = rng.rational();
      std::vector<Rat> x = space.point(t);

      // the first-slot form lies in span{invariant form, square of the
      // first dual vector}
      {
        std::vector<Rat> a1;
        std::vector<Rat> kf, e00;
        for (int i = 0; i < 4; ++i)
          for (int j = i; j < 4; ++j) {
            a1.push_back(x[slot(i, j, 0)]);
            kf.push_back(k_form.at(i, j));
            e00.push_back(i == 0 && j == 0 ? Rat(1) : Rat(0));
          }
        ok_a1 = ok_a1 && in_span({kf, e00}, a1);
      }
      // e0 ∘ w = (e0∘e0 central coefficient)·w on the symplectic block
      {
        Rat c = x[slot(1, 1, 1)];
        for (int w = 2; w < 4; ++w)
          for (int m = 0; m < 4; ++m) {
            Rat want = (m == w) ? c : Rat(0);
            if (x[slot(1, w, m)] != want) ok_e0 = false;
          }
      }
      // e-1 ∘ w = ½·(first-slot square coefficient)·w on the block
      {
        Rat half_a = x[slot(0, 0, 0)] / 2;
        for (int w = 2; w < 4; ++w)
          for (int m = 0; m < 4; ++m) {
            Rat want = (m == w) ? half_a : Rat(0);
            if (x[slot(0, w, m)] != want) ok_em1 = false;
          }
      }
      // D·A is the predicted scalar multiple of the identity on the block
      {
        MatQ M(2, 2);
        M.at(0, 0) = x[slot(2, 2, 1)];
        M.at(0, 1) = x[slot(2, 3, 1)];
        M.at(1, 0) = x[slot(2, 3, 1)];
        M.at(1, 1) = x[slot(3, 3, 1)];
        MatQ W(2, 2);
        W.at(0, 1) = Rat(1);
        W.at(1, 0) = Rat(-1);
        MatQ D(2, 2);
        D.at(0, 1) = -lam;
        D.at(1, 0) = lam;
        MatQ DA = D * (W * M);
        Rat kappa = x[slot(0, 1, 1)] - x[slot(0, 0, 0)] / 2;
        ok_da = ok_da && DA.at(0, 0) == kappa && DA.at(1, 1) == kappa && DA.at(0, 1) == 0 &&
                DA.at(1, 0) == 0;
      }
    }
    rep.checkpoints.push_back({"first-slot-form-in-invariant-span", ok_a1});
    rep.checkpoints.push_back({"central-action-scalar-on-block", ok_e0});
    rep.checkpoints.push_back({"first-vector-action-scalar-on-block", ok_em1});
    rep.checkpoints.push_back({"block-form-compatibility-scalar", ok_da});
  }

  return rep;
}

}  // namespace oscalg

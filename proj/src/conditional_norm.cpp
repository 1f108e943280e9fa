// Copyright 2026 The subentropy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <limits>

#include "optimizer.hpp"
#include "subentropy/error.hpp"
#include "subentropy/projection.hpp"
#include "subentropy/random.hpp"

namespace subentropy {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Parameters of an element of `alg`: column-major blocks, interleaved re/im.
int parameter_count(const DirectSumAlgebra& alg) { return 2 * alg.vectorized_dim(); }

AlgebraElement unpack(const DirectSumAlgebra& alg, const double* x) {
  AlgebraElement out = AlgebraElement::zero(alg);
  for (int l = 0; l < alg.num_blocks(); ++l) {
    Matrix& m = out.block(l);
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      for (Eigen::Index i = 0; i < m.rows(); ++i, x += 2) m(i, j) = cplx(x[0], x[1]);
  }
  return out;
}

void pack(const AlgebraElement& e, double* x) {
  for (const Matrix& m : e.blocks())
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      for (Eigen::Index i = 0; i < m.rows(); ++i, x += 2) {
        x[0] = m(i, j).real();
        x[1] = m(i, j).imag();
      }
}

// Packs s_l·A_l^† where A is the complex derivative: dF = Re Σ_l tr(A_l da_l).
void pack_gradient(const DirectSumAlgebra& alg, const std::vector<Matrix>& a, double* g) {
  for (int l = 0; l < alg.num_blocks(); ++l) {
    const Matrix m = alg.weight(l) * a[l].adjoint();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      for (Eigen::Index i = 0; i < m.rows(); ++i, g += 2) {
        g[0] = m(i, j).real();
        g[1] = m(i, j).imag();
      }
  }
}

// log ‖a‖_{2q}^{2q} per the weighted trace of N, with the derivative factor
// (a*a)^{q−1}a* per block.
double weighted_power_sum(const AlgebraElement& a, double q, std::vector<Matrix>* derivative) {
  double total = 0.0;
  for (int k = 0; k < a.num_blocks(); ++k) {
    const EigenSystem es = herm_eig(hermitian_part(a.block(k).adjoint() * a.block(k)));
    const RealVector lam = es.eigenvalues.cwiseMax(0.0);
    total += a.algebra().weight(k) * lam.array().pow(q).sum();
    if (derivative != nullptr) {
      const RealVector lp = lam.unaryExpr([q](double v) { return q == 1.0 ? 1.0 : std::pow(v, q - 1.0); });
      derivative->push_back(es.frame * lp.asDiagonal() * es.frame.adjoint() * a.block(k).adjoint());
    }
  }
  return total;
}

struct SymmetricEvaluation {
  double value;                  // log ‖ι(a)xι(a)*‖_q − 2 log ‖a‖_{2q}
  std::vector<Matrix> grad_a;    // complex derivative per sub block
  AlgebraElement grad_x;         // tr_M(grad_x · dx) = d value
};

bool evaluate_symmetric(const AlgebraElement& x, const Inclusion& inc, double q, const AlgebraElement& a,
                        SymmetricEvaluation* out, bool want_gradient) {
  const AlgebraElement ia = embed(inc, a);
  double zq = 0.0;
  std::vector<Matrix> w_blocks;
  for (int l = 0; l < x.num_blocks(); ++l) {
    const Matrix z = hermitian_part(ia.block(l) * x.block(l) * ia.block(l).adjoint());
    const EigenSystem es = herm_eig(z);
    zq += inc.amb().weight(l) * es.eigenvalues.cwiseAbs().array().pow(q).sum();
    if (want_gradient) {
      const RealVector w = es.eigenvalues.unaryExpr([q](double v) {
        if (v == 0.0) return 0.0;
        return (v > 0.0 ? 1.0 : -1.0) * std::pow(std::abs(v), q - 1.0);
      });
      w_blocks.push_back(es.frame * w.asDiagonal() * es.frame.adjoint());
    }
  }
  std::vector<Matrix> da;
  const double aq = weighted_power_sum(a, q, want_gradient ? &da : nullptr);
  if (!(zq > 0.0) || !(aq > 0.0) || !std::isfinite(zq) || !std::isfinite(aq)) return false;
  out->value = std::log(zq) / q - std::log(aq) / q;
  if (!want_gradient) return true;
  const AlgebraElement w(inc.amb(), w_blocks);
  const AlgebraElement e = conditional_expectation(inc, x * ia.adjoint() * w);
  out->grad_a.clear();
  for (int k = 0; k < a.num_blocks(); ++k) out->grad_a.push_back(2.0 * e.block(k) / zq - 2.0 * da[k] / aq);
  out->grad_x = ia.adjoint() * w * ia * (1.0 / zq);
  return true;
}

struct SymmetricMax {
  double value = -kInf;  // log of the norm
  AlgebraElement a;
  AlgebraElement grad_x;
};

SymmetricMax symmetric_search(const AlgebraElement& x, const Inclusion& inc, double q, int starts,
                              std::uint64_t seed, int max_iterations) {
  const DirectSumAlgebra& sub = inc.sub();
  const int n = parameter_count(sub);
  const detail::GradientFunction fn = [&](const double* p, double* v, double* g) {
    SymmetricEvaluation ev;
    if (!evaluate_symmetric(x, inc, q, unpack(sub, p), &ev, g != nullptr)) return false;
    *v = -ev.value;
    if (g != nullptr) {
      pack_gradient(sub, ev.grad_a, g);
      for (int i = 0; i < n; ++i) g[i] = -g[i];
    }
    return true;
  };
  SymmetricMax best;
  for (int s = 0; s < std::max(1, starts); ++s) {
    std::vector<double> x0(static_cast<std::size_t>(n));
    const AlgebraElement a0 = s == 0 ? AlgebraElement::identity(sub)
                                     : AlgebraElement::identity(sub) + random_element(sub, derive_seed(seed, s)) * 0.7;
    pack(a0, x0.data());
    const detail::MinimizeResult r = detail::minimize_lbfgs(fn, n, std::move(x0), max_iterations, 1e-12);
    SymmetricEvaluation ev;
    const AlgebraElement a = unpack(sub, r.x.data());
    if (evaluate_symmetric(x, inc, q, a, &ev, true) && ev.value > best.value + 1e-14) {
      best.value = ev.value;
      best.a = a;
      best.grad_x = ev.grad_x;
    }
  }
  return best;
}

double log_asymmetric(const AlgebraElement& x, const Inclusion& inc, double q, const AlgebraElement& a,
                      const AlgebraElement& b) {
  const double z = schatten_norm(embed(inc, a) * x * embed(inc, b), q);
  const double na = std::pow(weighted_power_sum(a, q, nullptr), 1.0 / (2.0 * q));
  const double nb = std::pow(weighted_power_sum(b, q, nullptr), 1.0 / (2.0 * q));
  if (!(z > 0.0) || !(na > 0.0) || !(nb > 0.0)) return -kInf;
  return std::log(z) - std::log(na) - std::log(nb);
}

double asymmetric_search(const AlgebraElement& x, const Inclusion& inc, double q, const AlgebraElement& a0,
                         const AlgebraElement& b0, int max_iterations) {
  const DirectSumAlgebra& sub = inc.sub();
  const int half = parameter_count(sub);
  detail::ValueFunction value = [&](const double* p, double* v) {
    const double r = log_asymmetric(x, inc, q, unpack(sub, p), unpack(sub, p + half));
    if (!std::isfinite(r)) return false;
    *v = -r;
    return true;
  };
  std::vector<double> x0(static_cast<std::size_t>(2 * half));
  pack(a0, x0.data());
  pack(b0, x0.data() + half);
  const detail::MinimizeResult r =
      detail::minimize_lbfgs(detail::numeric_gradient(value, 2 * half), 2 * half, std::move(x0), max_iterations, 1e-10);
  return log_asymmetric(x, inc, q, unpack(sub, r.x.data()), unpack(sub, r.x.data() + half));
}

}  // namespace

double conditional_linf_norm(const AlgebraElement& x, const Inclusion& inc, double q, const SolverBudget& budget) {
  require_same_algebra(x.algebra(), inc.amb(), "conditional_linf_norm");
  if (!(q >= 1.0)) fail(ErrorKind::InvalidArgument, "conditional norm exponent must be at least 1");
  if (x.max_abs() == 0.0) return 0.0;
  if (std::isinf(q)) return schatten_norm(x, q);
  const int starts = std::max(1, budget.starts);
  const AlgebraElement one = AlgebraElement::identity(inc.sub());
  double best = -kInf;
  AlgebraElement a_best = one;
  AlgebraElement b_best = one;
  if (x.is_hermitian()) {
    const SymmetricMax sym = symmetric_search(x, inc, q, starts, budget.seed, budget.max_iterations);
    best = sym.value;
    if (std::isfinite(best)) {
      a_best = sym.a;
      b_best = sym.a.adjoint();
    }
    const AlgebraElement kick = random_element(inc.sub(), derive_seed(budget.seed, 1000)) * 0.05;
    best = std::max(best, asymmetric_search(x, inc, q, a_best, b_best + kick * b_best.max_abs(), budget.max_iterations));
  } else {
    for (int s = 0; s < starts; ++s) {
      const AlgebraElement a0 = s == 0 ? one : one + random_element(inc.sub(), derive_seed(budget.seed, 2 * s)) * 0.7;
      const AlgebraElement b0 = s == 0 ? one : one + random_element(inc.sub(), derive_seed(budget.seed, 2 * s + 1)) * 0.7;
      best = std::max(best, asymmetric_search(x, inc, q, a0, b0, budget.max_iterations));
    }
  }
  if (!std::isfinite(best)) fail(ErrorKind::SolverBudgetExceeded, "conditional norm search found no feasible pair");
  return std::exp(best);
}

double dual_amalgamated_norm(const Density& rho, const Inclusion& inc, RenyiOrder order, const SolverBudget& budget) {
  require_same_algebra(rho.algebra(), inc.amb(), "dual_amalgamated_norm");
  if (!(order.p() > 1.0)) fail(ErrorKind::InvalidOrder, "duality needs p > 1");
  const double q = order.conjugate();
  const DirectSumAlgebra& amb = inc.amb();
  const int n = parameter_count(amb);
  const int inner_starts = std::max(1, budget.starts);
  // Maximize log tr(xρ) − log ‖x‖_{L∞^q} over x = v·v*.
  const detail::GradientFunction fn = [&](const double* p, double* v, double* g) {
    const AlgebraElement vv = unpack(amb, p);
    const AlgebraElement x = vv * vv.adjoint();
    const double pairing = inner_product(x, rho.element()).real();
    if (!(pairing > 0.0)) return false;
    const SymmetricMax inner = symmetric_search(x, inc, q, inner_starts, budget.seed, budget.max_iterations);
    if (!std::isfinite(inner.value)) return false;
    *v = -(std::log(pairing) - inner.value);
    if (g != nullptr) {
      // dF = tr(H dx), H = ρ/tr(xρ) − ∂ log N; dx = dv v* + v dv*.
      const AlgebraElement h = rho.element() * (1.0 / pairing) - inner.grad_x;
      const AlgebraElement hv = h * vv;
      std::vector<Matrix> a;
      for (int l = 0; l < amb.num_blocks(); ++l) a.push_back(-2.0 * hv.block(l).adjoint());
      pack_gradient(amb, a, g);
    }
    return true;
  };
  std::vector<AlgebraElement> seeds;
  seeds.push_back(AlgebraElement::identity(amb));
  // Certificate suggested by the primal minimizer: x* = σ^{−γ}X^{p−1}σ^{−γ}.
  const SubalgebraDivergenceResult primal = divergence_to_subalgebra(rho, inc, order, budget);
  const AlgebraElement sigma = embed(inc, primal.minimizer.element());
  const double gamma = order.is_infinite() ? 0.5 : 0.5 * (1.0 - 1.0 / order.p());
  AlgebraElement xstar = AlgebraElement::zero(amb);
  for (int l = 0; l < amb.num_blocks(); ++l) {
    const Matrix s = support_power(herm_eig(sigma.block(l)), -gamma);
    const Matrix core = hermitian_part(s * rho.block(l) * s);
    const Matrix xl = order.is_infinite() ? support_projection(herm_eig(core)) : support_power(herm_eig(core), order.p() - 1.0);
    xstar.block(l) = support_power(herm_eig(hermitian_part(s * xl * s)), 0.5);
  }
  seeds.push_back(xstar);
  for (int s = 0; s < std::max(0, budget.starts - 2); ++s) seeds.push_back(random_element(amb, derive_seed(budget.seed, 500 + s)));
  double best = -kInf;
  for (const AlgebraElement& s : seeds) {
    std::vector<double> x0(static_cast<std::size_t>(n));
    pack(s, x0.data());
    const detail::MinimizeResult r = detail::minimize_lbfgs(fn, n, std::move(x0), 200, 1e-9);
    double v = 0.0;
    if (fn(r.x.data(), &v, nullptr)) best = std::max(best, -v);
  }
  if (!std::isfinite(best)) fail(ErrorKind::SolverBudgetExceeded, "dual search found no feasible point");
  return std::exp(best);
}

}  // namespace subentropy

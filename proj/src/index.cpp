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

#include "subentropy/index.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <optional>

#include "optimizer.hpp"
#include "subentropy/error.hpp"
#include "subentropy/projection.hpp"
#include "subentropy/random.hpp"

namespace subentropy {

namespace {

using Rational = boost::multiprecision::cpp_rational;

constexpr std::int64_t kMaxDenominator = 10'000'000;
constexpr double kRationalMatch = 1e-14;
constexpr double kSelfCheck = 1e-12;

// Continued-fraction recovery of a positive weight.
std::optional<Rational> as_rational(double w) {
  if (!(w > 0.0) || !std::isfinite(w)) return std::nullopt;
  std::int64_t h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double x = w;
  for (int it = 0; it < 64; ++it) {
    const double fl = std::floor(x);
    if (fl > 1e15) break;
    const auto a = static_cast<std::int64_t>(fl);
    const std::int64_t h2 = a * h1 + h0;
    const std::int64_t k2 = a * k1 + k0;
    if (k2 > kMaxDenominator) break;
    h0 = h1, h1 = h2, k0 = k1, k1 = k2;
    if (std::abs(static_cast<double>(h1) / static_cast<double>(k1) - w) <= kRationalMatch * w) {
      return Rational(h1, k1);
    }
    const double frac = x - fl;
    if (frac <= 0.0) break;
    x = 1.0 / frac;
  }
  return std::nullopt;
}

// Σ_k c_kl·s_k/t_l per block, with c_kl = min(a_kl, cap·n_k) (cap ≤ 0: a_kl).
std::vector<std::pair<int, double>> block_terms(const Inclusion& inc, int cap) {
  const DirectSumAlgebra& sub = inc.sub();
  const DirectSumAlgebra& amb = inc.amb();
  std::vector<std::optional<Rational>> s, t;
  bool exact = true;
  for (int k = 0; k < sub.num_blocks(); ++k) {
    s.push_back(as_rational(sub.weight(k)));
    exact = exact && s.back().has_value();
  }
  for (int l = 0; l < amb.num_blocks(); ++l) {
    t.push_back(as_rational(amb.weight(l)));
    exact = exact && t.back().has_value();
  }
  std::vector<std::pair<int, double>> out;
  for (int l = 0; l < amb.num_blocks(); ++l) {
    Rational acc = 0;
    double approx = 0.0;
    for (int k = 0; k < sub.num_blocks(); ++k) {
      const int a = inc.multiplicity(k, l);
      const int c = cap > 0 ? std::min(a, cap * sub.dim(k)) : a;
      if (c == 0) continue;
      if (exact) acc += Rational(c) * *s[k] / *t[l];
      approx += c * sub.weight(k) / amb.weight(l);
    }
    out.emplace_back(l, exact ? acc.convert_to<double>() : approx);
  }
  return out;
}

double log_max(const std::vector<std::pair<int, double>>& terms) {
  double best = 0.0;
  for (const auto& [l, v] : terms) best = std::max(best, v);
  return std::log(best);
}

}  // namespace

double pimsner_popa_index(const Inclusion& inc) { return log_max(block_terms(inc, 1)); }

int dcb_stabilization_level(const Inclusion& inc) {
  int n = 1;
  for (int k = 0; k < inc.num_sub_blocks(); ++k)
    for (int l = 0; l < inc.num_amb_blocks(); ++l) {
      const int nk = inc.sub().dim(k);
      n = std::max(n, (inc.multiplicity(k, l) + nk - 1) / nk);
    }
  return n;
}

double dcb_index(const Inclusion& inc) {
  const double value = log_max(block_terms(inc, 0));
  const double amplified = pimsner_popa_index(amplify(inc, dcb_stabilization_level(inc)));
  if (std::abs(value - amplified) > kSelfCheck) {
    fail(ErrorKind::Internal, "stabilized dcb formula disagrees with the amplified index");
  }
  return value;
}

IndexReport index_report(const Inclusion& inc) {
  IndexReport r;
  r.per_block = block_terms(inc, 1);
  double best = -1.0;
  for (const auto& [l, v] : r.per_block)
    if (v > best) {
      best = v;
      r.argmax_block = l;
    }
  r.neg_log_lambda = std::log(best);
  r.dcb = dcb_index(inc);
  return r;
}

Density optimal_density(const Inclusion& inc) {
  const IndexReport report = index_report(inc);
  const int l = report.argmax_block;
  const DirectSumAlgebra& sub = inc.sub();
  double total = 0.0;
  for (int k = 0; k < sub.num_blocks(); ++k) total += std::min(inc.multiplicity(k, l), sub.dim(k)) * sub.weight(k);
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(inc.amb().dim(l));
  for (int k = 0; k < sub.num_blocks(); ++k) {
    const int n = sub.dim(k);
    const double amplitude = std::sqrt(sub.weight(k) / total);
    for (int i = 0; i < std::min(inc.multiplicity(k, l), n); ++i) psi(inc.slot_offset(k, l) + i * n + i) = amplitude;
  }
  AlgebraElement x = AlgebraElement::zero(inc.amb());
  x.block(l) = psi * psi.adjoint();
  return Density::from_unnormalized(x);
}

namespace {

// Umegaki divergence to N of the normalized pure state of `v` in block l,
// with its gradient in (re, im) coordinates. For pure ρ, D(ρ‖N) =
// H(E(ρ)) − log t_l and dH(E(ρ)) = −tr(ι(log E(ρ))·dρ).
bool pure_state_divergence(const Inclusion& inc, int l, const double* v, double* value, double* gradient) {
  const int m = inc.amb().dim(l);
  Eigen::VectorXcd psi(m);
  for (int i = 0; i < m; ++i) psi(i) = cplx(v[2 * i], v[2 * i + 1]);
  const double norm = psi.squaredNorm();
  if (!(norm > 1e-300)) return false;
  AlgebraElement x = AlgebraElement::zero(inc.amb());
  x.block(l) = psi * psi.adjoint() / (norm * inc.amb().weight(l));
  const Density rho(x);
  const AlgebraElement e = conditional_expectation(inc, rho.element());
  AlgebraElement log_e = AlgebraElement::zero(inc.sub());
  double entropy = 0.0;
  for (int k = 0; k < e.num_blocks(); ++k) {
    const EigenSystem es = herm_eig(hermitian_part(e.block(k)));
    log_e.block(k) = matrix_fn(es, [](double t) { return std::log(t); }, true);
    const double cut = support_threshold(es.eigenvalues.maxCoeff());
    for (Eigen::Index i = 0; i < es.eigenvalues.size(); ++i) {
      const double t = es.eigenvalues(i);
      if (t > cut) entropy -= inc.sub().weight(k) * t * std::log(t);
    }
  }
  *value = entropy - std::log(inc.amb().weight(l));
  if (gradient != nullptr) {
    const Matrix g = embed(inc, log_e).block(l);
    const Eigen::VectorXcd g_psi = g * psi;
    const double quad = psi.dot(g_psi).real() / norm;
    const Eigen::VectorXcd w = (g_psi - quad * psi) / norm;
    // Gradient of D = −ψ*Gψ/‖ψ‖² + const.
    for (int i = 0; i < m; ++i) {
      gradient[2 * i] = -2.0 * w(i).real();
      gradient[2 * i + 1] = -2.0 * w(i).imag();
    }
  }
  return std::isfinite(*value);
}

Density pure_state(const Inclusion& inc, int l, const std::vector<double>& v) {
  AlgebraElement x = AlgebraElement::zero(inc.amb());
  const int m = inc.amb().dim(l);
  Eigen::VectorXcd psi(m);
  for (int i = 0; i < m; ++i) psi(i) = cplx(v[2 * i], v[2 * i + 1]);
  x.block(l) = psi * psi.adjoint();
  return Density::from_unnormalized(x);
}

}  // namespace

double max_divergence_numeric(const Inclusion& inc, RenyiOrder order, int starts, const SolverBudget& budget) {
  std::vector<Density> candidates{optimal_density(inc)};
  double best_d1 = -1.0;
  std::optional<Density> best_pure;
  for (int s = 0; s < starts; ++s) {
    const int l = s % inc.num_amb_blocks();
    const int m = inc.amb().dim(l);
    const detail::GradientFunction fn = [&inc, l, m](const double* v, double* out, double* grad) {
      double d = 0.0;
      if (!pure_state_divergence(inc, l, v, &d, grad)) return false;
      *out = -d;
      if (grad != nullptr)
        for (int i = 0; i < 2 * m; ++i) grad[i] = -grad[i];
      return true;
    };
    GaussianSource source(derive_seed(budget.seed, 7000 + static_cast<std::uint64_t>(s)));
    std::vector<double> x0(static_cast<std::size_t>(2 * m));
    for (double& v : x0) v = source.normal();
    const detail::MinimizeResult r =
        detail::minimize_lbfgs(fn, 2 * m, std::move(x0), 500, 1e-10);
    double d = 0.0;
    if (pure_state_divergence(inc, l, r.x.data(), &d, nullptr) && d > best_d1) {
      best_d1 = d;
      best_pure = pure_state(inc, l, r.x);
    }
  }
  if (best_pure) candidates.push_back(*best_pure);
  double best = 0.0;
  for (const Density& rho : candidates) best = std::max(best, divergence_to_subalgebra(rho, inc, order, budget).value.value());
  return best;
}

double cs_entropy_lower_bound(const Inclusion& inc, const std::vector<AlgebraElement>& partition) {
  if (partition.empty()) fail(ErrorKind::NotPartition, "empty partition");
  AlgebraElement sum = AlgebraElement::zero(inc.amb());
  for (const AlgebraElement& x : partition) {
    require_same_algebra(x.algebra(), inc.amb(), "cs_entropy_lower_bound");
    if (!x.is_hermitian(1e-9) || !is_psd(x, 1e-9)) fail(ErrorKind::NotPartition, "partition element is not PSD");
    sum += x;
  }
  if ((sum - AlgebraElement::identity(inc.amb())).max_abs() > 1e-9) {
    fail(ErrorKind::NotPartition, "partition does not sum to the identity");
  }
  const auto xlogx = [](double v) { return v * std::log(v); };
  double total = 0.0;
  for (const AlgebraElement& x : partition) {
    const AlgebraElement e = conditional_expectation(inc, x);
    const AlgebraElement ie = embed(inc, e);
    for (int l = 0; l < x.num_blocks(); ++l) {
      const Matrix h = hermitian_part(x.block(l));
      const Matrix log_e = matrix_fn(herm_eig(hermitian_part(ie.block(l))), [](double v) { return std::log(v); }, true);
      const Matrix x_log_x = matrix_fn(herm_eig(h), xlogx, true);
      total += inc.amb().weight(l) * (x_log_x.trace().real() - (h * log_e).trace().real());
    }
  }
  return total;
}

}  // namespace subentropy

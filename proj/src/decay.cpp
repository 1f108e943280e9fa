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
#include <unsupported/Eigen/KroneckerProduct>

#include "markov_detail.hpp"
#include "subentropy/divergence.hpp"
#include "subentropy/error.hpp"
#include "subentropy/index.hpp"
#include "subentropy/projection.hpp"

namespace subentropy {

namespace {

double d2_to(const FixedPointAlgebra& fp, const Density& rho, const SolverBudget& budget) {
  return divergence_to_subalgebra(fp.to_standard(rho), fp.inclusion, RenyiOrder(2.0), budget).value.value();
}

double d1_to(const FixedPointAlgebra& fp, const Density& rho) {
  return umegaki(rho, fp.expectation(rho)).value();
}

}  // namespace

DecayReport decay_experiment(const Semigroup& sg, const Density& rho, const std::vector<double>& t_grid,
                             int amplify_n, const SolverBudget& budget) {
  if (amplify_n < 1) fail(ErrorKind::InvalidArgument, "amplification level must be positive");
  std::shared_ptr<const Semigroup> lifted;
  const Semigroup* s = &sg;
  if (amplify_n > 1) {
    lifted = sg.amplify(amplify_n);
    s = lifted.get();
  }
  require_same_algebra(rho.algebra(), s->algebra(), "decay_experiment");
  const FixedPointAlgebra& fp = s->fixed_points();
  DecayReport r;
  r.gap = sg.spectral_gap();
  r.t_grid = t_grid;
  const double d2_0 = d2_to(fp, rho, budget);
  const Density e_rho = fp.expectation(rho);
  r.refined_slack = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    const double t = t_grid[i];
    const Density rho_t = s->evolve(rho, t);
    const double d1 = d1_to(fp, rho_t);
    const double d2 = d2_to(fp, rho_t, budget);
    const double bound = 2.0 * std::exp(-r.gap * t + d2_0 / 2.0);
    r.d1_curve.push_back(d1);
    r.d2_curve.push_back(d2);
    r.bound_curve.push_back(bound);
    r.trace_dist_curve.push_back(trace_distance(rho_t, e_rho));
    if (d1 > bound + defaults::kViolationTolerance) r.violations.push_back(static_cast<int>(i));
    r.refined_slack =
        std::min(r.refined_slack, 1.0 + std::exp(-r.gap * t) * std::exp(d2_0 / 2.0) - std::exp(d2 / 2.0));
  }
  return r;
}

double decoherence_time_bound(const Inclusion& inc, double gap, double epsilon, bool complete) {
  if (!(gap > 0.0)) fail(ErrorKind::NoGap, "decoherence time needs a positive gap");
  if (!(epsilon > 0.0 && epsilon < 2.0)) fail(ErrorKind::InvalidArgument, "epsilon must lie in (0, 2)");
  const double k = complete ? dcb_index(inc) : pimsner_popa_index(inc);
  return (2.0 * std::log(2.0 / epsilon) + k / 2.0) / gap;
}

int discrete_threshold_step(const SchurMap& map, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 2.0)) fail(ErrorKind::InvalidArgument, "epsilon must lie in (0, 2)");
  const double mu = map.mu();
  if (!(mu < 1.0)) fail(ErrorKind::MuNotContractive, "Schur map needs max off-diagonal |a_ij| < 1");
  if (mu == 0.0) return 0;
  const double k = dcb_index(validate_inclusion({std::vector<Block>(static_cast<std::size_t>(map.dim()),
                                                                    Block{1, 1.0 / map.dim()}),
                                                 {{map.dim(), 1.0 / map.dim()}},
                                                 IntMatrix(static_cast<std::size_t>(map.dim()), std::vector<int>{1}),
                                                 true}));
  return static_cast<int>(std::ceil((std::log(4.0 / (epsilon * epsilon)) + k / 2.0) / std::log(1.0 / mu)));
}

DecayReport discrete_decay_experiment(const SchurMap& map, const Density& rho, int steps, int amplify_n,
                                      double epsilon, const SolverBudget& budget) {
  const double mu = map.mu();
  if (!(mu < 1.0)) fail(ErrorKind::MuNotContractive, "Schur map needs max off-diagonal |a_ij| < 1");
  if (amplify_n < 1) fail(ErrorKind::InvalidArgument, "amplification level must be positive");
  if (steps < 0) fail(ErrorKind::InvalidArgument, "step count must be nonnegative");
  const RealMatrix a = Eigen::kroneckerProduct(RealMatrix::Ones(amplify_n, amplify_n), map.a()).eval();
  const int m = static_cast<int>(a.rows());
  require_same_algebra(rho.algebra(), DirectSumAlgebra::matrix_algebra(m), "discrete_decay_experiment");
  // Multiplicative domain: span{e_ij : |a_ij| = 1}.
  std::vector<std::vector<bool>> related(static_cast<std::size_t>(m), std::vector<bool>(static_cast<std::size_t>(m)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) related[i][j] = std::abs(a(i, j)) >= 1.0 - 1e-12;
  const FixedPointAlgebra fp = detail::class_algebra(related);
  const auto apply = [&a](const AlgebraElement& x) {
    AlgebraElement out = x;
    out.block(0).array() *= a.array().cast<cplx>();
    return out;
  };
  DecayReport r;
  r.gap = mu;
  r.threshold_step = discrete_threshold_step(map, epsilon);
  const double d2_0 = d2_to(fp, rho, budget);
  const Density e_rho = fp.expectation(rho);
  const Density te_rho(apply(e_rho.element()));
  r.refined_slack = std::numeric_limits<double>::infinity();
  AlgebraElement current = rho.element();
  for (int k = 0; k <= steps; ++k) {
    if (k > 0) current = apply(current);
    const Density rho_k(current);
    const double d1 = d1_to(fp, rho_k);
    const double d2 = d2_to(fp, rho_k, budget);
    const double muk = std::pow(mu, k);
    const double bound = 2.0 * muk * std::exp(d2_0 / 2.0);
    r.t_grid.push_back(k);
    r.d1_curve.push_back(d1);
    r.d2_curve.push_back(d2);
    r.bound_curve.push_back(bound);
    const double dist = trace_distance(rho_k, k % 2 == 0 ? e_rho : te_rho);
    r.trace_dist_curve.push_back(dist);
    if (d1 > bound + defaults::kViolationTolerance) r.violations.push_back(k);
    if (k >= r.threshold_step && dist > epsilon) r.target_violations.push_back(k);
    r.refined_slack = std::min(r.refined_slack, 1.0 + muk * std::exp(d2_0 / 2.0) - std::exp(d2 / 2.0));
  }
  return r;
}

}  // namespace subentropy

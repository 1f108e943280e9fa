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

#include "subentropy/projection.hpp"

#include <cmath>
#include <limits>

#include "objective.hpp"
#include "optimizer.hpp"
#include "sdp.hpp"
#include "subentropy/error.hpp"
#include "subentropy/random.hpp"

namespace subentropy {

namespace {

constexpr double kValueAgreement = 1e-7;
constexpr double kMinimizerAgreement = 1e-5;

SubalgebraDivergenceResult finalize(const Density& rho, const Inclusion& inc, RenyiOrder order,
                                    const AlgebraElement& sigma, SolverReport report) {
  const Density s = Density::from_unnormalized(sigma);
  return {sandwiched_renyi(rho, embed(inc, s), order), s, report};
}

SubalgebraDivergenceResult closed_form(const Density& rho, const Inclusion& inc) {
  const Density e = conditional_expectation(inc, rho);
  return {DivergenceValue(vn_entropy(e) - vn_entropy(rho)), e, {0, 0.0, 1}};
}

SubalgebraDivergenceResult barrier_start(const Density& rho, const Inclusion& inc, std::uint64_t seed) {
  const detail::BarrierResult b = detail::solve_linf_sdp(rho, inc, defaults::kBarrierRelativeGap, seed);
  return finalize(rho, inc, RenyiOrder::infinity(), b.y * (1.0 / b.objective),
                  {b.iterations, b.gap / b.objective, 1});
}

SubalgebraDivergenceResult descent_start(const detail::SandwichedObjective& obj, const Density& rho,
                                         const Inclusion& inc, RenyiOrder order, std::vector<double> x,
                                         const SolverBudget& budget) {
  const detail::GradientFunction fn = [&obj](const double* p, double* v, double* g) { return obj.evaluate(p, v, g); };
  int iterations = 0;
  double residual = std::numeric_limits<double>::infinity();
  for (int round = 0; round < 4; ++round) {
    const detail::MinimizeResult r =
        detail::minimize_lbfgs(fn, obj.num_parameters(), std::move(x), budget.max_iterations);
    x = r.x;
    iterations += r.iterations;
    obj.normalize(x);
    const double next = obj.residual(x);
    const bool stalled = next >= 0.5 * residual;
    residual = next;
    if (residual <= 1e-3 * budget.stationarity_tolerance || stalled || iterations >= budget.max_iterations) break;
  }
  return finalize(rho, inc, order, obj.sigma(x.data()), {iterations, residual, 1});
}

}  // namespace

std::vector<SubalgebraDivergenceResult> divergence_to_subalgebra_starts(const Density& rho, const Inclusion& inc,
                                                                        RenyiOrder order, const SolverBudget& budget) {
  require_same_algebra(rho.algebra(), inc.amb(), "divergence_to_subalgebra");
  const int starts = std::max(1, budget.starts);
  std::vector<SubalgebraDivergenceResult> out;
  if (order.is_umegaki()) {
    out.push_back(closed_form(rho, inc));
    return out;
  }
  if (order.is_infinite()) {
    for (int i = 0; i < starts; ++i)
      out.push_back(barrier_start(rho, inc, i == 0 ? 0 : derive_seed(budget.seed, static_cast<std::uint64_t>(i))));
    return out;
  }
  const detail::SandwichedObjective obj(rho, inc, order.p());
  const AlgebraElement e = conditional_expectation(inc, rho.element());
  for (int i = 0; i < starts; ++i) {
    std::vector<double> x0 =
        i == 0 ? obj.sqrt_start(e) : obj.random_start(derive_seed(budget.seed, static_cast<std::uint64_t>(i)));
    out.push_back(descent_start(obj, rho, inc, order, std::move(x0), budget));
  }
  return out;
}

SubalgebraDivergenceResult divergence_to_subalgebra(const Density& rho, const Inclusion& inc, RenyiOrder order,
                                                    const SolverBudget& budget) {
  if (order.is_umegaki()) {
    require_same_algebra(rho.algebra(), inc.amb(), "divergence_to_subalgebra");
    return closed_form(rho, inc);
  }
  SolverBudget local = budget;
  if (order.is_infinite()) local.starts = 1;
  std::vector<SubalgebraDivergenceResult> all = divergence_to_subalgebra_starts(rho, inc, order, local);
  std::size_t best = 0;
  int iterations = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    iterations += all[i].report.iterations;
    if (all[i].value.value() < all[best].value.value()) best = i;
  }
  SubalgebraDivergenceResult result = all[best];
  result.report.iterations = iterations;
  result.report.starts_used = static_cast<int>(all.size());
  if (!(result.report.residual <= budget.stationarity_tolerance)) {
    fail(ErrorKind::SolverBudgetExceeded,
         "stationarity residual " + std::to_string(result.report.residual) + " above tolerance");
  }
  return result;
}

double amalgamated_l1p_norm(const Density& rho, const Inclusion& inc, RenyiOrder order, const SolverBudget& budget) {
  if (!(order.p() > 1.0)) fail(ErrorKind::InvalidOrder, "amalgamated L_1^p norm needs p > 1");
  const SubalgebraDivergenceResult r = divergence_to_subalgebra(rho, inc, order, budget);
  return std::exp(r.value.value() / order.conjugate());
}

bool minimizer_multistart_check(const Density& rho, const Inclusion& inc, RenyiOrder order, int starts,
                                const SolverBudget& budget) {
  if (order.is_umegaki()) return true;
  SolverBudget local = budget;
  local.starts = starts;
  const std::vector<SubalgebraDivergenceResult> all = divergence_to_subalgebra_starts(rho, inc, order, local);
  for (const SubalgebraDivergenceResult& r : all) {
    if (!(r.report.residual <= budget.stationarity_tolerance)) {
      fail(ErrorKind::SolverBudgetExceeded, "a start finished with residual " + std::to_string(r.report.residual));
    }
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (std::abs(all[i].value.value() - all[j].value.value()) > kValueAgreement) return false;
      if (!order.is_infinite() && trace_distance(all[i].minimizer, all[j].minimizer) > kMinimizerAgreement) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace subentropy

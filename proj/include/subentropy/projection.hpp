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

#pragma once

#include <vector>

#include "subentropy/algebra.hpp"
#include "subentropy/config.hpp"
#include "subentropy/divergence.hpp"

namespace subentropy {

struct SolverReport {
  int iterations = 0;
  double residual = 0.0;
  int starts_used = 0;
};

struct SubalgebraDivergenceResult {
  DivergenceValue value;
  Density minimizer;  // density of inc.sub()
  SolverReport report;
};

/// D_p(ρ‖N) = inf over densities σ of N of D_p(ρ‖ι(σ)).
///
/// p = 1 uses the closed form with minimizer E(ρ). Finite p ≠ 1 runs
/// multi-start L-BFGS over σ = w·w*/tr(w·w*) on the support of E(ρ) with an
/// analytic gradient. p = ∞ solves min{tr(Y) : ι(Y) ≥ ρ} by a log-barrier
/// method. The value is always the divergence re-evaluated at the returned
/// minimizer. Throws SolverBudgetExceeded when the best start has residual
/// above budget.stationarity_tolerance.
SubalgebraDivergenceResult divergence_to_subalgebra(const Density& rho, const Inclusion& inc, RenyiOrder order,
                                                    const SolverBudget& budget = {});

/// All starts, in start order (solver-based orders only).
std::vector<SubalgebraDivergenceResult> divergence_to_subalgebra_starts(const Density& rho, const Inclusion& inc,
                                                                        RenyiOrder order, const SolverBudget& budget);

/// exp(D_p(ρ‖N)/p′) for p ∈ (1, ∞].
double amalgamated_l1p_norm(const Density& rho, const Inclusion& inc, RenyiOrder order,
                            const SolverBudget& budget = {});

/// sup ‖ι(a)·x·ι(b)‖_q over a, b in N with ‖a‖_{2q} = ‖b‖_{2q} = 1. For
/// Hermitian x the search first takes b = a*, then perturbs asymmetrically.
double conditional_linf_norm(const AlgebraElement& x, const Inclusion& inc, double q,
                             const SolverBudget& budget = {});

/// sup{tr(xρ) : x ≥ 0, ‖x‖_{L∞^{p′}} ≤ 1}, each norm evaluated by
/// conditional_linf_norm. p ∈ (1, ∞).
double dual_amalgamated_norm(const Density& rho, const Inclusion& inc, RenyiOrder order,
                             const SolverBudget& budget = {});

/// Runs `starts` seeded starts; true iff values agree within 1e-7 and (for
/// finite p) minimizers agree pairwise within 1e-5 in trace distance.
bool minimizer_multistart_check(const Density& rho, const Inclusion& inc, RenyiOrder order, int starts,
                                const SolverBudget& budget = {});

}  // namespace subentropy

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

#include <utility>
#include <vector>

#include "subentropy/algebra.hpp"
#include "subentropy/config.hpp"
#include "subentropy/divergence.hpp"

namespace subentropy {

struct IndexReport {
  double neg_log_lambda = 0.0;
  double dcb = 0.0;
  std::vector<std::pair<int, double>> per_block;  // (l, Σ_k min(a_kl, n_k)·s_k/t_l)
  int argmax_block = 0;
};

/// −log λ(M:N) = log max_l Σ_k min(a_kl, n_k)·s_k/t_l. Weights that are
/// rationals with denominator ≤ 10⁷ are summed exactly.
double pimsner_popa_index(const Inclusion& inc);

/// log max_l Σ_k a_kl·s_k/t_l. Checked against
/// pimsner_popa_index(amplify(inc, dcb_stabilization_level(inc))) to 1e-12.
double dcb_index(const Inclusion& inc);

/// Smallest n with n·n_k ≥ a_kl for all k, l.
int dcb_stabilization_level(const Inclusion& inc);

IndexReport index_report(const Inclusion& inc);

/// Pure state in the argmax block whose components in the first
/// min(a_kl, n_k) copies of each block k are orthogonal with squared norm
/// s_k/Σ_k min(a_kl, n_k)·s_k. Its Umegaki divergence to N is the index.
Density optimal_density(const Inclusion& inc);

/// sup over densities of D_p(ρ‖N), searched over block-local pure states
/// (D_1 ascent from `starts` seeded points) plus optimal_density(inc).
double max_divergence_numeric(const Inclusion& inc, RenyiOrder order, int starts, const SolverBudget& budget = {});

/// Σ_i tr(x_i log x_i − x_i log E(x_i)) for a partition of unity into PSD
/// elements. Throws NotPartition.
double cs_entropy_lower_bound(const Inclusion& inc, const std::vector<AlgebraElement>& partition);

}  // namespace subentropy

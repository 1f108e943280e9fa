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

#include <cstdint>

#include "subentropy/algebra.hpp"

namespace subentropy::detail {

struct BarrierResult {
  AlgebraElement y;   // optimal Y in N with ι(Y) ≥ ρ
  double objective;   // tr_N(Y)
  double gap;         // duality gap estimate ν/t
  int iterations;     // Newton steps
};

/// min tr_N(Y) subject to ι(Y) − ρ ≥ 0, by a primal log-barrier method.
/// seed = 0 starts from a multiple of the identity; other seeds perturb the
/// start. Stops once ν/t ≤ relative_gap·tr_N(Y).
BarrierResult solve_linf_sdp(const Density& rho, const Inclusion& inc, double relative_gap, std::uint64_t seed = 0);

}  // namespace subentropy::detail

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

#include <string>
#include <string_view>
#include <vector>

#include "subentropy/algebra.hpp"

namespace subentropy {

/// C^m ⊂ M_m (diagonal subalgebra).
Inclusion diagonal_inclusion(int m);
/// M_n ⊗ 1 ⊂ M_n ⊗ M_m.
Inclusion matrix_tensor_inclusion(int n, int m);
/// C ⊂ M_m.
Inclusion scalar_inclusion(int m);
/// (M_2 ⊗ 1_3) ⊕ (M_3 ⊗ 1_2) ⊂ M_12.
Inclusion m12_inclusion();

/// Named fixtures: c2m2 … c6m6, cm2, m2m4, m2m6, m3m6, m6m36, m12, m12sq,
/// z4z2, s3z3. Also "cm<m>", "mn<n>x<m>" and "group:<G>:<H>".
Inclusion fixture_inclusion(std::string_view name);
std::vector<std::string> inclusion_fixture_names();

/// Density of the unit vector (√a, √(1−a)) on M_2 with normalized trace.
Density pure_state_fixture(double a);
/// Normalized |Ω⟩⟨Ω| of Ω = Σ_i e_i ⊗ e_i on M_n ⊗ M_n (Kronecker layout).
Density maximally_entangled_density(int n);

}  // namespace subentropy

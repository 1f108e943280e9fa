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

#include "subentropy/fixtures.hpp"

#include <cmath>

#include "subentropy/error.hpp"

namespace subentropy {

Inclusion diagonal_inclusion(int m) {
  RawInclusion raw;
  raw.sub.assign(static_cast<std::size_t>(m), Block{1, 1.0 / m});
  raw.amb = {{m, 1.0 / m}};
  raw.a.assign(static_cast<std::size_t>(m), std::vector<int>{1});
  return validate_inclusion(raw);
}

Inclusion matrix_tensor_inclusion(int n, int m) {
  return validate_inclusion({{{n, 1.0 / n}}, {{n * m, 1.0 / (n * m)}}, {{m}}, true});
}

Inclusion scalar_inclusion(int m) { return validate_inclusion({{{1, 1.0}}, {{m, 1.0 / m}}, {{m}}, true}); }

Inclusion m12_inclusion() {
  return validate_inclusion({{{2, 1.0 / 4}, {3, 1.0 / 6}}, {{12, 1.0 / 12}}, {{3}, {2}}, true});
}

namespace {

bool parse_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  int v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
    v = v * 10 + (c - '0');
    if (v > 1000) return false;
  }
  out = v;
  return v > 0;
}

}  // namespace

Inclusion fixture_inclusion(std::string_view name) {
  if (name == "c2m2") return diagonal_inclusion(2);
  if (name == "c3m3") return diagonal_inclusion(3);
  if (name == "c4m4") return diagonal_inclusion(4);
  if (name == "c5m5") return diagonal_inclusion(5);
  if (name == "c6m6") return diagonal_inclusion(6);
  if (name == "cm2") return scalar_inclusion(2);
  if (name == "m2m4") return matrix_tensor_inclusion(2, 2);
  if (name == "m2m6") return matrix_tensor_inclusion(2, 3);
  if (name == "m3m6") return matrix_tensor_inclusion(3, 2);
  if (name == "m6m36") return matrix_tensor_inclusion(6, 6);
  if (name == "m12") return m12_inclusion();
  if (name == "m12sq") return tensor_inclusion(m12_inclusion(), m12_inclusion());
  if (name == "z4z2") return group_inclusion("Z4", "Z2");
  if (name == "s3z3") return group_inclusion("S3", "Z3");
  int m = 0;
  int n = 0;
  if (name.starts_with("cm") && parse_int(name.substr(2), m)) return scalar_inclusion(m);
  if (name.starts_with("mn")) {
    const auto x = name.find('x');
    if (x != std::string_view::npos && parse_int(name.substr(2, x - 2), n) && parse_int(name.substr(x + 1), m)) {
      return matrix_tensor_inclusion(n, m);
    }
  }
  if (name.starts_with("group:")) {
    const auto rest = name.substr(6);
    const auto colon = rest.find(':');
    if (colon != std::string_view::npos) return group_inclusion(rest.substr(0, colon), rest.substr(colon + 1));
  }
  fail(ErrorKind::InvalidArgument, "unknown fixture: " + std::string(name));
}

std::vector<std::string> inclusion_fixture_names() {
  return {"c2m2", "c3m3", "c4m4", "c5m5", "c6m6", "cm2",  "m2m4", "m2m6",
          "m3m6", "m6m36", "m12", "m12sq", "z4z2", "s3z3"};
}

Density pure_state_fixture(double a) {
  if (!(a >= 0.0 && a <= 1.0)) fail(ErrorKind::InvalidArgument, "a must lie in [0, 1]");
  Matrix psi(2, 1);
  psi << std::sqrt(a), std::sqrt(1.0 - a);
  return Density(AlgebraElement(DirectSumAlgebra::matrix_algebra(2), {2.0 * psi * psi.adjoint()}));
}

Density maximally_entangled_density(int n) {
  Matrix omega = Matrix::Zero(n * n, 1);
  for (int i = 0; i < n; ++i) omega(i * n + i) = 1.0;
  return Density::from_unnormalized(AlgebraElement(DirectSumAlgebra::matrix_algebra(n * n), {omega * omega.adjoint()}));
}

}  // namespace subentropy

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
#include <random>

#include "subentropy/linalg.hpp"

namespace subentropy {

/// Portable Gaussian stream: std::mt19937_64 (output fixed by the C++
/// standard), uniforms from the top 53 bits, Box–Muller pairs.
class GaussianSource {
 public:
  explicit GaussianSource(std::uint64_t seed) : engine_(seed) {}

  double uniform();  // in (0, 1)
  double normal();
  cplx complex_normal();  // E|z|^2 = 1
  Matrix complex_matrix(int rows, int cols);

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Seed for stream `index` derived from a base seed (splitmix64 step).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

}  // namespace subentropy

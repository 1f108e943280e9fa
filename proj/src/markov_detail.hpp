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

#include <functional>
#include <vector>

#include "subentropy/markov.hpp"

namespace subentropy::detail {

/// Fixed-point algebra ⊕_c M_{|C_c|} ⊂ M_m for an equivalence relation on
/// {0…m−1} given as a boolean matrix. Throws NotEquivalence.
FixedPointAlgebra class_algebra(const std::vector<std::vector<bool>>& related);

/// Weighted-trace inner product weights per vectorized coordinate.
RealVector vector_weights(const DirectSumAlgebra& algebra);

void require_nonnegative_time(double t);

/// Spectral data of W^{1/2}·A·W^{−1/2} (Hermitian), W = vector_weights.
struct GeneratorSpectrum {
  RealVector eigenvalues;
  Matrix frame;
  RealVector sqrt_weights;

  /// e^{−tA} on vectorized elements.
  Matrix evolution(double t) const;
  /// Orthogonal projection onto ker A on vectorized elements.
  Matrix kernel_projection() const;
  double cutoff() const;
};

GeneratorSpectrum generator_spectrum(const DirectSumAlgebra& algebra, const Matrix& superoperator);

/// Columns are the vectorized images of the matrix units E^l_ij.
Matrix superoperator_of(const DirectSumAlgebra& algebra, const std::function<AlgebraElement(const AlgebraElement&)>& f);

}  // namespace subentropy::detail

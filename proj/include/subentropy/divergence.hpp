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

#include <cmath>
#include <limits>

#include "subentropy/algebra.hpp"

namespace subentropy {

/// p ∈ [1/2, ∞]. p = 1 denotes the Umegaki case; 0 < |p − 1| ≤ 1e-9 is
/// rejected.
class RenyiOrder {
 public:
  explicit RenyiOrder(double p);
  static RenyiOrder infinity() { return RenyiOrder(std::numeric_limits<double>::infinity()); }

  double p() const { return p_; }
  bool is_infinite() const { return std::isinf(p_); }
  bool is_umegaki() const { return p_ == 1.0; }
  /// 1/p + 1/p′ = 1 (p′ < 0 for p < 1; 1 at p = ∞).
  double conjugate() const;
  /// p/(2p − 1); 1/2 at p = ∞.
  double q() const;
  /// 1/(2p) = 1/r + 1/2, for p < 1.
  double r() const;

 private:
  double p_;
};

/// Nonnegative divergence value or +∞. Values in [−1e-9, 0) clamp to 0.
class DivergenceValue {
 public:
  static DivergenceValue infinite() { return DivergenceValue(std::numeric_limits<double>::infinity()); }
  explicit DivergenceValue(double v);

  bool is_finite() const { return std::isfinite(v_); }
  double value() const { return v_; }

 private:
  double v_;
};

DivergenceValue sandwiched_renyi(const Density& rho, const Density& sigma, RenyiOrder order);
DivergenceValue umegaki(const Density& rho, const Density& sigma);
DivergenceValue petz_renyi(const Density& rho, const Density& sigma, RenyiOrder order);
double trace_distance(const Density& rho, const Density& sigma);
double vn_entropy(const Density& rho);

/// support(ρ) ≤ support(σ) with the linalg cutoff.
bool support_contained(const Density& rho, const Density& sigma);

}  // namespace subentropy

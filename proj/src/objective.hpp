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
#include <vector>

#include "subentropy/algebra.hpp"

namespace subentropy::detail {

/// F(w) = (1/(p−1))·log tr((ρ^{1/2} ι(σ)^{−β} ρ^{1/2})^p), β = 1 − 1/p, with
/// σ = w·w*/tr(w·w*) restricted to the support of E(ρ). Parameters are the
/// reduced blocks w_k (column-major, interleaved re/im).
class SandwichedObjective {
 public:
  SandwichedObjective(const Density& rho, const Inclusion& inc, double p);

  int num_parameters() const { return num_parameters_; }
  bool evaluate(const double* x, double* value, double* gradient) const;

  /// σ in sub coordinates, unit trace.
  AlgebraElement sigma(const double* x) const;
  /// w with w·w* proportional to the compression of sigma_sub.
  std::vector<double> sqrt_start(const AlgebraElement& sigma_sub) const;
  std::vector<double> random_start(std::uint64_t seed) const;
  /// Rescales x so that tr(w·w*) = 1.
  void normalize(std::vector<double>& x) const;
  /// max |∂F| at the normalized point.
  double residual(std::vector<double> x) const;

 private:
  struct SubBlock {
    int n = 0;
    int r = 0;
    double s = 0.0;
    Matrix basis;  // n × r
    int offset = 0;
  };
  struct Slot {
    int k;
    int offset;  // row offset in the reduced amb coordinates
  };
  struct AmbBlock {
    double t = 0.0;
    Matrix c;  // ρ_l^{1/2}·J_l, m_l × reduced_dim
    int reduced_dim = 0;
    std::vector<Slot> slots;
  };

  Matrix block_of(const double* x, const SubBlock& b) const;
  double trace_weight(const double* x) const;

  Inclusion inc_;
  double p_;
  double beta_;
  std::vector<SubBlock> sub_;
  std::vector<AmbBlock> amb_;
  int num_parameters_ = 0;
};

/// Divided differences of f on the eigenvalues lam.
RealMatrix divided_differences(const RealVector& lam, double (*f)(double, double), double (*df)(double, double),
                               double param);

}  // namespace subentropy::detail

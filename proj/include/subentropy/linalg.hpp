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

#include <Eigen/Dense>
#include <complex>
#include <functional>

namespace subentropy {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kSupportCutoff = 1e-10;

/// Complex Hermitian matrix; the constructor checks symmetry relative to the
/// largest entry and stores the exactly symmetrized matrix.
class HermMatrix {
 public:
  explicit HermMatrix(const Matrix& m);
  static HermMatrix symmetrized(const Matrix& m);
  static HermMatrix identity(int d);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Matrix& matrix() const { return m_; }

 private:
  struct Unchecked {};
  HermMatrix(Unchecked, Matrix m) : m_(std::move(m)) {}
  Matrix m_;
};

/// Eigenvalues ascending; frame columns are the eigenvectors.
struct EigenSystem {
  RealVector eigenvalues;
  Matrix frame;
};

bool is_hermitian(const Matrix& m, double tol = kHermitianTolerance);

EigenSystem herm_eig(const HermMatrix& h);
/// Uses the lower triangle of h without a symmetry check.
EigenSystem herm_eig(const Matrix& h);

/// Eigenvalues at or below this value count as zero.
double support_threshold(double lambda_max);

/// frame·diag(f(λ))·frame*. With support_only, eigenvalues below the cutoff
/// map to 0 and f is not evaluated there. Throws DomainError if f returns a
/// non-finite value on an evaluated eigenvalue.
HermMatrix matrix_fn(const HermMatrix& h, const std::function<double(double)>& f,
                     bool support_only = false);
Matrix matrix_fn(const EigenSystem& es, const std::function<double(double)>& f,
                 bool support_only = false);

/// Power on the support (generalized inverse for negative exponents).
Matrix support_power(const EigenSystem& es, double exponent);
Matrix support_projection(const EigenSystem& es);

bool is_psd(const HermMatrix& h, double tol);
bool is_psd(const Matrix& hermitian, double tol);

/// (m + m*)/2.
Matrix hermitian_part(const Matrix& m);

double max_abs(const Matrix& m);

}  // namespace subentropy

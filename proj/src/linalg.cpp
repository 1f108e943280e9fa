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

#include "subentropy/linalg.hpp"

#include <cmath>

#include "subentropy/error.hpp"

namespace subentropy {

namespace {

constexpr std::string_view kErrorNames[] = {
    "NonHermitian",       "DomainError",      "DimensionMismatch", "TraceMismatch",
    "NonUnital",          "AlgebraMismatch",  "UnsupportedGroup",  "NotDensity",
    "InvalidOrder",       "SolverBudgetExceeded", "NotPartition",  "NotCND",
    "BadDiagonal",        "Asymmetric",       "NotEquivalence",    "NoGap",
    "NegativeTime",       "MuNotContractive", "InvalidSchurMap",   "InvalidGenerator",
    "InvalidArgument",    "ParseError",       "Internal",
};

}  // namespace

std::string_view to_string(ErrorKind kind) { return kErrorNames[static_cast<int>(kind)]; }

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

bool is_hermitian(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  const double scale = std::max(1.0, max_abs(m));
  return max_abs(m - m.adjoint()) <= tol * scale;
}

HermMatrix::HermMatrix(const Matrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    fail(ErrorKind::DimensionMismatch, "Hermitian matrix must be square and non-empty");
  }
  const double scale = max_abs(m);
  if (max_abs(m - m.adjoint()) > kHermitianTolerance * scale) {
    fail(ErrorKind::NonHermitian, "matrix differs from its adjoint");
  }
  m_ = hermitian_part(m);
}

HermMatrix HermMatrix::symmetrized(const Matrix& m) { return HermMatrix(Unchecked{}, hermitian_part(m)); }

HermMatrix HermMatrix::identity(int d) { return HermMatrix(Unchecked{}, Matrix::Identity(d, d)); }

Matrix hermitian_part(const Matrix& m) { return (m + m.adjoint()) * 0.5; }

EigenSystem herm_eig(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  return {solver.eigenvalues(), solver.eigenvectors()};
}

EigenSystem herm_eig(const HermMatrix& h) { return herm_eig(h.matrix()); }

double support_threshold(double lambda_max) { return kSupportCutoff * std::max(1.0, lambda_max); }

Matrix matrix_fn(const EigenSystem& es, const std::function<double(double)>& f, bool support_only) {
  const auto n = es.eigenvalues.size();
  const double cut = support_threshold(es.eigenvalues.maxCoeff());
  RealVector values(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double lambda = es.eigenvalues(i);
    if (support_only && lambda <= cut) {
      values(i) = 0.0;
      continue;
    }
    values(i) = f(lambda);
    if (!std::isfinite(values(i))) {
      fail(ErrorKind::DomainError, "function undefined at eigenvalue " + std::to_string(lambda));
    }
  }
  return es.frame * values.asDiagonal() * es.frame.adjoint();
}

HermMatrix matrix_fn(const HermMatrix& h, const std::function<double(double)>& f, bool support_only) {
  return HermMatrix::symmetrized(matrix_fn(herm_eig(h), f, support_only));
}

Matrix support_power(const EigenSystem& es, double exponent) {
  return matrix_fn(es, [exponent](double x) { return std::pow(x, exponent); }, true);
}

Matrix support_projection(const EigenSystem& es) {
  return matrix_fn(es, [](double) { return 1.0; }, true);
}

bool is_psd(const Matrix& hermitian, double tol) {
  const RealVector ev = Eigen::SelfAdjointEigenSolver<Matrix>(hermitian, Eigen::EigenvaluesOnly).eigenvalues();
  return ev.minCoeff() >= -tol * std::max(1.0, ev.maxCoeff());
}

bool is_psd(const HermMatrix& h, double tol) { return is_psd(h.matrix(), tol); }

}  // namespace subentropy

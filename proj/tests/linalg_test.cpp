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

#include "test_util.hpp"

namespace subentropy {
namespace {

using testing::random_hermitian_matrix;
using testing::random_psd_matrix;

Matrix diag(std::initializer_list<double> v) {
  RealVector d(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) d(i++) = x;
  return d.cast<cplx>().asDiagonal();
}

TEST(HermEig, Identity) {
  const EigenSystem es = herm_eig(HermMatrix::identity(2));
  EXPECT_NEAR(es.eigenvalues(0), 1.0, 1e-14);
  EXPECT_NEAR(es.eigenvalues(1), 1.0, 1e-14);
  EXPECT_LE(max_abs(es.frame.adjoint() * es.frame - Matrix::Identity(2, 2)), 1e-12);
}

TEST(HermEig, DiagonalKeepsStandardBasis) {
  const EigenSystem es = herm_eig(HermMatrix(diag({0.0, 3.0})));
  EXPECT_NEAR(es.eigenvalues(0), 0.0, 1e-14);
  EXPECT_NEAR(es.eigenvalues(1), 3.0, 1e-14);
  EXPECT_NEAR(std::abs(es.frame(0, 0)), 1.0, 1e-12);
  EXPECT_NEAR(std::abs(es.frame(1, 1)), 1.0, 1e-12);
}

TEST(HermEig, PauliX) {
  Matrix x(2, 2);
  x << 0.0, 1.0, 1.0, 0.0;
  const EigenSystem es = herm_eig(HermMatrix(x));
  EXPECT_NEAR(es.eigenvalues(0), -1.0, 1e-14);
  EXPECT_NEAR(es.eigenvalues(1), 1.0, 1e-14);
}

TEST(HermEig, ReconstructsRandomInputs) {
  for (int d : {1, 3, 8, 24, 64}) {
    const Matrix h = random_hermitian_matrix(d, 100 + d);
    const EigenSystem es = herm_eig(HermMatrix(h));
    const Matrix back = es.frame * es.eigenvalues.cast<cplx>().asDiagonal() * es.frame.adjoint();
    EXPECT_LE(max_abs(back - h), 1e-10 * max_abs(h)) << "d=" << d;
    EXPECT_LE(max_abs(es.frame.adjoint() * es.frame - Matrix::Identity(d, d)), 1e-10) << "d=" << d;
    for (int i = 1; i < d; ++i) EXPECT_LE(es.eigenvalues(i - 1), es.eigenvalues(i));
  }
}

TEST(HermMatrix, RejectsNonHermitian) {
  Matrix m(2, 2);
  m << 1.0, 2.0, 0.0, 1.0;
  EXPECT_ERROR_KIND(HermMatrix{m}, ErrorKind::NonHermitian);
}

TEST(HermMatrix, ToleranceIsRelativeToLargestEntry) {
  Matrix m(2, 2);
  m << 1e6, 1.0, 1.0 + 1e-7, 2e6;
  EXPECT_NO_THROW(HermMatrix{m});
  m(1, 0) = 1.0 + 1e-4;
  EXPECT_ERROR_KIND(HermMatrix{m}, ErrorKind::NonHermitian);
}

TEST(MatrixFn, SquareRootOfDiagonal) {
  const HermMatrix r = matrix_fn(HermMatrix(diag({4.0, 9.0})), [](double v) { return std::sqrt(v); });
  EXPECT_LE(max_abs(r.matrix() - diag({2.0, 3.0})), 1e-12);
}

TEST(MatrixFn, SupportOnlyGeneralizedInverse) {
  const HermMatrix r =
      matrix_fn(HermMatrix(diag({0.0, 2.0})), [](double v) { return std::pow(v, -0.5); }, true);
  EXPECT_LE(max_abs(r.matrix() - diag({0.0, 1.0 / std::sqrt(2.0)})), 1e-12);
}

TEST(MatrixFn, ExpOfProjection) {
  Matrix p(2, 2);
  p << 0.5, 0.5, 0.5, 0.5;
  const HermMatrix r = matrix_fn(HermMatrix(p), [](double v) { return std::exp(v); });
  EXPECT_LE(max_abs(r.matrix() - (Matrix::Identity(2, 2) + (std::exp(1.0) - 1.0) * p)), 1e-12);
}

TEST(MatrixFn, IdentityFunctionReproducesInput) {
  const Matrix h = random_hermitian_matrix(10, 7);
  EXPECT_LE(max_abs(matrix_fn(HermMatrix(h), [](double v) { return v; }).matrix() - h), 1e-10 * max_abs(h));
}

TEST(MatrixFn, LogOfNegativeEigenvalueIsDomainError) {
  EXPECT_ERROR_KIND(matrix_fn(HermMatrix(diag({-1.0, 2.0})), [](double v) { return std::log(v); }),
                    ErrorKind::DomainError);
}

TEST(MatrixFn, ProductRule) {
  for (int s = 0; s < 20; ++s) {
    const HermMatrix h(random_psd_matrix(6, 300 + s));
    const auto f = [](double v) { return std::sqrt(std::max(v, 0.0)); };
    const auto g = [](double v) { return std::exp(-v); };
    const Matrix lhs = matrix_fn(h, f).matrix() * matrix_fn(h, g).matrix();
    const Matrix rhs = matrix_fn(h, [&](double v) { return f(v) * g(v); }).matrix();
    EXPECT_LE(max_abs(lhs - rhs), 1e-9);
  }
}

TEST(MatrixFn, IntegerRootsComposeBackOnSupport) {
  for (int p : {2, 3, 5}) {
    GaussianSource g(40 + p);
    const Matrix v = g.complex_matrix(6, 3);
    const HermMatrix h(Matrix(v * v.adjoint()));
    const Matrix root = matrix_fn(h, [p](double x) { return std::pow(x, 1.0 / p); }, true).matrix();
    Matrix acc = Matrix::Identity(6, 6);
    for (int i = 0; i < p; ++i) acc = acc * root;
    EXPECT_LE(max_abs(acc - h.matrix()), 1e-8 * std::max(1.0, max_abs(h.matrix()))) << "p=" << p;
  }
}

TEST(SupportPower, InverseOnSupport) {
  GaussianSource g(5);
  const Matrix v = g.complex_matrix(5, 2);
  const Matrix h = v * v.adjoint();
  const EigenSystem es = herm_eig(HermMatrix(h));
  const Matrix inv = support_power(es, -1.0);
  EXPECT_LE(max_abs(h * inv * h - h), 1e-9);
  EXPECT_LE(max_abs(h * inv - support_projection(es)), 1e-9);
}

TEST(SupportCutoff, RelativeToLargestEigenvalue) {
  EXPECT_DOUBLE_EQ(support_threshold(0.5), 1e-10);
  EXPECT_DOUBLE_EQ(support_threshold(1e4), 1e-6);
  const EigenSystem es = herm_eig(HermMatrix(diag({1e-11, 1.0})));
  const Matrix proj = support_projection(es);
  EXPECT_NEAR(proj(0, 0).real(), 0.0, 1e-14);
  EXPECT_NEAR(proj(1, 1).real(), 1.0, 1e-14);
}

TEST(IsPsd, Examples) {
  EXPECT_TRUE(is_psd(HermMatrix::identity(3), 1e-12));
  EXPECT_FALSE(is_psd(HermMatrix(diag({1.0, -1.0})), 1e-12));
  Matrix ones(2, 2);
  ones << 1.0, 1.0, 1.0, 1.0;
  EXPECT_TRUE(is_psd(HermMatrix(ones), 1e-12));
}

TEST(HermitianPart, Symmetrizes) {
  GaussianSource g(9);
  const Matrix m = g.complex_matrix(4, 4);
  const Matrix h = hermitian_part(m);
  EXPECT_LE(max_abs(h - h.adjoint()), 1e-15);
  EXPECT_LE(max_abs(h - (m + m.adjoint()) / 2.0), 1e-15);
}

}  // namespace
}  // namespace subentropy

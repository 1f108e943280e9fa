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

#include <cmath>
#include <limits>
#include <unsupported/Eigen/KroneckerProduct>

#include "markov_detail.hpp"
#include "subentropy/error.hpp"

namespace subentropy {

namespace {

constexpr double kEntryTolerance = 1e-12;
constexpr double kCndTolerance = 1e-10;

double entry_scale(const RealMatrix& m) { return std::max(1.0, m.cwiseAbs().maxCoeff()); }

void require_square(const RealMatrix& m, const char* what) {
  if (m.rows() == 0 || m.rows() != m.cols()) fail(ErrorKind::DimensionMismatch, std::string(what) + " must be square");
  if (!m.allFinite()) fail(ErrorKind::InvalidArgument, std::string(what) + " has non-finite entries");
}

// Orthonormal basis of {c : Σ c_i = 0} as columns.
RealMatrix helmert_basis(int m) {
  RealMatrix h = RealMatrix::Zero(m, m - 1);
  for (int j = 1; j < m; ++j) {
    const double norm = std::sqrt(static_cast<double>(j) * (j + 1));
    for (int i = 0; i < j; ++i) h(i, j - 1) = 1.0 / norm;
    h(j, j - 1) = -static_cast<double>(j) / norm;
  }
  return h;
}

// Scales so the smallest nonzero |entry| is 1 and the first nonzero entry is
// positive; snaps near-integers.
std::vector<double> normalize_witness(const RealVector& v) {
  const double top = v.cwiseAbs().maxCoeff();
  double smallest = top;
  double sign = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) <= 1e-9 * top) continue;
    smallest = std::min(smallest, std::abs(v(i)));
    if (sign == 0.0) sign = v(i) > 0.0 ? 1.0 : -1.0;
  }
  std::vector<double> out;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    double x = std::abs(v(i)) <= 1e-9 * top ? 0.0 : sign * v(i) / smallest;
    if (std::abs(x - std::round(x)) < 1e-6) x = std::round(x);
    out.push_back(x);
  }
  return out;
}

class SchurSemigroup final : public Semigroup {
 public:
  explicit SchurSemigroup(SchurGenerator gen)
      : gen_(std::move(gen)),
        algebra_(DirectSumAlgebra::matrix_algebra(gen_.dim())),
        fixed_(decoherence_free_subalgebra(gen_)) {}

  const DirectSumAlgebra& algebra() const override { return algebra_; }

  AlgebraElement evolve(const AlgebraElement& x, double t) const override {
    require_same_algebra(x.algebra(), algebra_, "evolve");
    detail::require_nonnegative_time(t);
    AlgebraElement out = x;
    out.block(0).array() *= (-gen_.b().array() * t).exp().cast<cplx>();
    return out;
  }

  AlgebraElement generate(const AlgebraElement& x) const override {
    require_same_algebra(x.algebra(), algebra_, "generate");
    AlgebraElement out = x;
    out.block(0).array() *= gen_.b().array().cast<cplx>();
    return out;
  }

  double spectral_gap() const override { return subentropy::spectral_gap(gen_); }
  const FixedPointAlgebra& fixed_points() const override { return fixed_; }

  std::shared_ptr<const Semigroup> amplify(int n) const override {
    if (n < 1) fail(ErrorKind::InvalidArgument, "amplification level must be positive");
    if (n == 1) return std::make_shared<SchurSemigroup>(gen_);
    return std::make_shared<SchurSemigroup>(
        SchurGenerator(Eigen::kroneckerProduct(RealMatrix::Ones(n, n), gen_.b()).eval()));
  }

 private:
  SchurGenerator gen_;
  DirectSumAlgebra algebra_;
  FixedPointAlgebra fixed_;
};

}  // namespace

SchurGenerator::SchurGenerator(RealMatrix b) : b_(std::move(b)) {
  require_square(b_, "Schur generator");
  const int m = dim();
  const double scale = entry_scale(b_);
  for (int i = 0; i < m; ++i)
    if (std::abs(b_(i, i)) > kEntryTolerance * scale) fail(ErrorKind::BadDiagonal, "Schur generator needs b_ii = 0");
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (std::abs(b_(i, j) - b_(j, i)) > kEntryTolerance * scale) {
        fail(ErrorKind::Asymmetric, "Schur generator must be symmetric");
      }
  b_ = 0.5 * (b_ + b_.transpose()).eval();
  b_.diagonal().setZero();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (std::abs(b_(i, j)) <= kEntryTolerance * scale) b_(i, j) = 0.0;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (b_(i, j) < 0.0) {
        std::vector<double> c(static_cast<std::size_t>(m), 0.0);
        c[i] = 1.0;
        c[j] = -1.0;
        throw Error(ErrorKind::NotCND, "negative off-diagonal entry").with_witness(c);
      }
  if (m < 2) return;
  const RealMatrix h = helmert_basis(m);
  const RealMatrix q = h.transpose() * b_ * h;
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(0.5 * (q + q.transpose()));
  if (es.eigenvalues()(m - 2) > kCndTolerance * scale) {
    throw Error(ErrorKind::NotCND, "quadratic form is positive on a zero-sum vector")
        .with_witness(normalize_witness(h * es.eigenvectors().col(m - 2)));
  }
}

SchurMap::SchurMap(RealMatrix a) : a_(std::move(a)) {
  require_square(a_, "Schur map");
  const int m = dim();
  for (int i = 0; i < m; ++i) {
    if (std::abs(a_(i, i) - 1.0) > kEntryTolerance) fail(ErrorKind::InvalidSchurMap, "Schur map needs a_ii = 1");
    for (int j = i + 1; j < m; ++j)
      if (std::abs(a_(i, j) - a_(j, i)) > kEntryTolerance) fail(ErrorKind::InvalidSchurMap, "Schur map must be symmetric");
  }
  a_ = 0.5 * (a_ + a_.transpose()).eval();
  a_.diagonal().setOnes();
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(a_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues()(0) < -kEntryTolerance * m) fail(ErrorKind::InvalidSchurMap, "Schur map must be PSD");
}

double SchurMap::mu() const {
  double mu = 0.0;
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j)
      if (i != j) mu = std::max(mu, std::abs(a_(i, j)));
  return mu;
}

FixedPointAlgebra decoherence_free_subalgebra(const SchurGenerator& gen) {
  const int m = gen.dim();
  std::vector<std::vector<bool>> related(static_cast<std::size_t>(m), std::vector<bool>(static_cast<std::size_t>(m)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) related[i][j] = gen.b()(i, j) == 0.0;
  return detail::class_algebra(related);
}

double spectral_gap(const SchurGenerator& gen) {
  double gap = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < gen.b().size(); ++i) {
    const double v = gen.b().data()[i];
    if (v > 0.0) gap = std::min(gap, v);
  }
  if (std::isinf(gap)) fail(ErrorKind::NoGap, "generator is zero");
  return gap;
}

std::shared_ptr<const Semigroup> schur_semigroup(const SchurGenerator& gen) {
  return std::make_shared<SchurSemigroup>(gen);
}

SchurGenerator tensor_sum(const SchurGenerator& g1, const SchurGenerator& g2) {
  const RealMatrix j1 = RealMatrix::Ones(g1.dim(), g1.dim());
  const RealMatrix j2 = RealMatrix::Ones(g2.dim(), g2.dim());
  return SchurGenerator(Eigen::kroneckerProduct(g1.b(), j2) + Eigen::kroneckerProduct(j1, g2.b()));
}

SchurGenerator dephasing_generator(int m) {
  return SchurGenerator(RealMatrix::Ones(m, m) - RealMatrix::Identity(m, m));
}

SchurGenerator block_dephasing_generator() {
  RealMatrix b = RealMatrix::Ones(4, 4);
  b.block(0, 0, 2, 2).setZero();
  b.block(2, 2, 2, 2).setZero();
  return SchurGenerator(b);
}

SchurGenerator squared_distance_generator(int m) {
  RealMatrix b(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) b(i, j) = static_cast<double>((i - j) * (i - j));
  return SchurGenerator(b);
}

namespace detail {

FixedPointAlgebra class_algebra(const std::vector<std::vector<bool>>& related) {
  const int m = static_cast<int>(related.size());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (!related[i][j]) continue;
      for (int k = 0; k < m; ++k)
        if (related[j][k] && !related[i][k]) {
          throw Error(ErrorKind::NotEquivalence, "zero pattern is not transitive")
              .with_witness({static_cast<double>(i), static_cast<double>(j), static_cast<double>(k)});
        }
    }
  std::vector<int> label(static_cast<std::size_t>(m), -1);
  std::vector<std::vector<int>> classes;
  for (int i = 0; i < m; ++i) {
    if (label[i] >= 0) continue;
    classes.emplace_back();
    for (int j = i; j < m; ++j)
      if (label[j] < 0 && related[i][j]) {
        label[j] = static_cast<int>(classes.size()) - 1;
        classes.back().push_back(j);
      }
  }
  RawInclusion raw;
  raw.amb = {{m, 1.0 / m}};
  Matrix v = Matrix::Zero(m, m);
  int col = 0;
  for (const std::vector<int>& c : classes) {
    raw.sub.push_back({static_cast<int>(c.size()), 1.0 / m});
    raw.a.push_back({1});
    for (int i : c) v(i, col++) = 1.0;
  }
  return {validate_inclusion(raw), {v}};
}

RealVector vector_weights(const DirectSumAlgebra& algebra) {
  RealVector w(algebra.vectorized_dim());
  Eigen::Index pos = 0;
  for (const Block& b : algebra.blocks()) {
    w.segment(pos, b.dim * b.dim).setConstant(b.weight);
    pos += b.dim * b.dim;
  }
  return w;
}

void require_nonnegative_time(double t) {
  if (!(t >= 0.0)) fail(ErrorKind::NegativeTime, "evolution time must be nonnegative");
}

}  // namespace detail

}  // namespace subentropy

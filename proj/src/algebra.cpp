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

#include "subentropy/algebra.hpp"

#include <cmath>
#include <numeric>

#include "subentropy/error.hpp"
#include "subentropy/random.hpp"

namespace subentropy {

namespace {

constexpr double kDensityTolerance = 1e-9;
constexpr double kTraceCompatibility = 1e-9;

}  // namespace

DirectSumAlgebra::DirectSumAlgebra(std::vector<Block> blocks, bool normalize) : blocks_(std::move(blocks)) {
  if (blocks_.empty()) fail(ErrorKind::InvalidArgument, "algebra needs at least one block");
  for (const Block& b : blocks_) {
    if (b.dim <= 0) fail(ErrorKind::InvalidArgument, "block dimensions must be positive");
    if (!(b.weight > 0.0) || !std::isfinite(b.weight)) {
      fail(ErrorKind::InvalidArgument, "trace weights must be positive and finite");
    }
  }
  if (normalize) {
    const double total = total_trace();
    for (Block& b : blocks_) b.weight /= total;
  }
}

DirectSumAlgebra DirectSumAlgebra::matrix_algebra(int m) { return DirectSumAlgebra({{m, 1.0}}); }

DirectSumAlgebra DirectSumAlgebra::commutative(int m) {
  return DirectSumAlgebra(std::vector<Block>(static_cast<std::size_t>(m), Block{1, 1.0}));
}

double DirectSumAlgebra::total_trace() const {
  double total = 0.0;
  for (const Block& b : blocks_) total += b.weight * b.dim;
  return total;
}

int DirectSumAlgebra::total_dim() const {
  int total = 0;
  for (const Block& b : blocks_) total += b.dim;
  return total;
}

int DirectSumAlgebra::vectorized_dim() const {
  int total = 0;
  for (const Block& b : blocks_) total += b.dim * b.dim;
  return total;
}

bool DirectSumAlgebra::same_as(const DirectSumAlgebra& other, double rel_tol) const {
  if (blocks_.size() != other.blocks_.size()) return false;
  for (std::size_t l = 0; l < blocks_.size(); ++l) {
    if (blocks_[l].dim != other.blocks_[l].dim) return false;
    const double w = blocks_[l].weight;
    if (std::abs(w - other.blocks_[l].weight) > rel_tol * std::max(w, other.blocks_[l].weight)) return false;
  }
  return true;
}

void require_same_algebra(const DirectSumAlgebra& a, const DirectSumAlgebra& b, std::string_view what) {
  if (!a.same_as(b)) fail(ErrorKind::AlgebraMismatch, std::string(what) + ": elements live in different algebras");
}

AlgebraElement::AlgebraElement(DirectSumAlgebra algebra, std::vector<Matrix> blocks)
    : algebra_(std::move(algebra)), blocks_(std::move(blocks)) {
  if (static_cast<int>(blocks_.size()) != algebra_.num_blocks()) {
    fail(ErrorKind::AlgebraMismatch, "number of blocks does not match the algebra");
  }
  for (int l = 0; l < algebra_.num_blocks(); ++l) {
    if (blocks_[l].rows() != algebra_.dim(l) || blocks_[l].cols() != algebra_.dim(l)) {
      fail(ErrorKind::AlgebraMismatch, "block " + std::to_string(l) + " has the wrong dimension");
    }
  }
}

AlgebraElement AlgebraElement::zero(const DirectSumAlgebra& algebra) {
  std::vector<Matrix> blocks;
  for (const Block& b : algebra.blocks()) blocks.push_back(Matrix::Zero(b.dim, b.dim));
  return AlgebraElement(algebra, std::move(blocks));
}

AlgebraElement AlgebraElement::identity(const DirectSumAlgebra& algebra) {
  std::vector<Matrix> blocks;
  for (const Block& b : algebra.blocks()) blocks.push_back(Matrix::Identity(b.dim, b.dim));
  return AlgebraElement(algebra, std::move(blocks));
}

cplx AlgebraElement::trace() const {
  cplx total = 0.0;
  for (int l = 0; l < num_blocks(); ++l) total += algebra_.weight(l) * blocks_[l].trace();
  return total;
}

AlgebraElement AlgebraElement::adjoint() const {
  AlgebraElement out = *this;
  for (Matrix& m : out.blocks_) m.adjointInPlace();
  return out;
}

bool AlgebraElement::is_hermitian(double tol) const {
  for (const Matrix& m : blocks_)
    if (!subentropy::is_hermitian(m, tol)) return false;
  return true;
}

double AlgebraElement::max_abs() const {
  double best = 0.0;
  for (const Matrix& m : blocks_) best = std::max(best, subentropy::max_abs(m));
  return best;
}

Eigen::VectorXcd AlgebraElement::vectorize() const {
  Eigen::VectorXcd v(algebra_.vectorized_dim());
  Eigen::Index pos = 0;
  for (const Matrix& m : blocks_) {
    v.segment(pos, m.size()) = Eigen::Map<const Eigen::VectorXcd>(m.data(), m.size());
    pos += m.size();
  }
  return v;
}

AlgebraElement AlgebraElement::unvectorize(const DirectSumAlgebra& algebra, const Eigen::VectorXcd& v) {
  if (v.size() != algebra.vectorized_dim()) fail(ErrorKind::DimensionMismatch, "vector length mismatch");
  std::vector<Matrix> blocks;
  Eigen::Index pos = 0;
  for (const Block& b : algebra.blocks()) {
    blocks.push_back(Eigen::Map<const Matrix>(v.data() + pos, b.dim, b.dim));
    pos += b.dim * b.dim;
  }
  return AlgebraElement(algebra, std::move(blocks));
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  require_same_algebra(algebra_, o.algebra_, "sum");
  for (int l = 0; l < num_blocks(); ++l) blocks_[l] += o.blocks_[l];
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  require_same_algebra(algebra_, o.algebra_, "difference");
  for (int l = 0; l < num_blocks(); ++l) blocks_[l] -= o.blocks_[l];
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(cplx c) {
  for (Matrix& m : blocks_) m *= c;
  return *this;
}

AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
AlgebraElement operator*(AlgebraElement a, cplx c) { return a *= c; }
AlgebraElement operator*(cplx c, AlgebraElement a) { return a *= c; }

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_algebra(a.algebra(), b.algebra(), "product");
  std::vector<Matrix> blocks;
  for (int l = 0; l < a.num_blocks(); ++l) blocks.push_back(a.block(l) * b.block(l));
  return AlgebraElement(a.algebra(), std::move(blocks));
}

double schatten_norm(const AlgebraElement& x, double p) {
  double total = 0.0;
  for (int l = 0; l < x.num_blocks(); ++l) {
    const RealVector sv = Eigen::BDCSVD<Matrix>(x.block(l)).singularValues();
    if (std::isinf(p)) {
      total = std::max(total, sv.size() ? sv.maxCoeff() : 0.0);
    } else {
      total += x.algebra().weight(l) * sv.array().pow(p).sum();
    }
  }
  return std::isinf(p) ? total : std::pow(total, 1.0 / p);
}

double trace_norm(const AlgebraElement& x) { return schatten_norm(x, 1.0); }

cplx inner_product(const AlgebraElement& x, const AlgebraElement& y) {
  require_same_algebra(x.algebra(), y.algebra(), "inner product");
  cplx total = 0.0;
  for (int l = 0; l < x.num_blocks(); ++l) total += x.algebra().weight(l) * (x.block(l).adjoint() * y.block(l)).trace();
  return total;
}

bool is_psd(const AlgebraElement& x, double tol) {
  for (const Matrix& m : x.blocks())
    if (!is_psd(hermitian_part(m), tol)) return false;
  return true;
}

Density::Density(const AlgebraElement& x) {
  if (!x.is_hermitian(kDensityTolerance)) fail(ErrorKind::NotDensity, "density must be Hermitian");
  std::vector<Matrix> blocks;
  for (const Matrix& m : x.blocks()) blocks.push_back(hermitian_part(m));
  x_ = AlgebraElement(x.algebra(), std::move(blocks));
  if (!is_psd(x_, kDensityTolerance)) fail(ErrorKind::NotDensity, "density must be positive semidefinite");
  if (std::abs(x_.trace() - 1.0) > kDensityTolerance) fail(ErrorKind::NotDensity, "density must have unit trace");
}

Density Density::from_unnormalized(const AlgebraElement& x) {
  const double tr = x.trace().real();
  if (!(tr > 0.0)) fail(ErrorKind::NotDensity, "element has non-positive trace");
  return Density(x * (1.0 / tr));
}

Density Density::maximally_mixed(const DirectSumAlgebra& algebra) {
  return Density(AlgebraElement::identity(algebra) * (1.0 / algebra.total_trace()));
}

Density mix(const Density& a, const Density& b, double w) {
  return Density(a.element() * (1.0 - w) + b.element() * w);
}

RawInclusion Inclusion::raw() const { return {sub_.blocks(), amb_.blocks(), a_, false}; }

Inclusion validate_inclusion(const RawInclusion& raw) {
  const auto K = raw.sub.size();
  const auto L = raw.amb.size();
  if (K == 0 || L == 0) fail(ErrorKind::InvalidArgument, "inclusion needs non-empty block lists");
  if (raw.a.size() != K) fail(ErrorKind::DimensionMismatch, "inclusion matrix must have one row per sub block");
  for (const auto& row : raw.a) {
    if (row.size() != L) fail(ErrorKind::DimensionMismatch, "inclusion matrix must have one column per amb block");
    for (int v : row)
      if (v < 0) fail(ErrorKind::InvalidArgument, "inclusion multiplicities must be nonnegative");
  }
  for (std::size_t l = 0; l < L; ++l) {
    bool any = false;
    for (std::size_t k = 0; k < K; ++k) any = any || raw.a[k][l] > 0;
    if (!any) fail(ErrorKind::NonUnital, "amb block " + std::to_string(l) + " receives no sub block");
  }
  for (std::size_t l = 0; l < L; ++l) {
    int m = 0;
    for (std::size_t k = 0; k < K; ++k) m += raw.a[k][l] * raw.sub[k].dim;
    if (m != raw.amb[l].dim) {
      fail(ErrorKind::DimensionMismatch, "amb block " + std::to_string(l) + " has dimension " +
                                             std::to_string(raw.amb[l].dim) + " but Aᵀn gives " + std::to_string(m));
    }
  }
  std::vector<Block> sub = raw.sub;
  for (std::size_t k = 0; k < K; ++k) {
    double s = 0.0;
    for (std::size_t l = 0; l < L; ++l) s += raw.a[k][l] * raw.amb[l].weight;
    const double given = raw.sub[k].weight;
    if (!(std::abs(s - given) <= kTraceCompatibility * std::max(std::abs(s), std::abs(given)))) {
      fail(ErrorKind::TraceMismatch, "sub block " + std::to_string(k) + " has weight " + std::to_string(given) +
                                         " but At gives " + std::to_string(s));
    }
    sub[k].weight = s;
  }
  Inclusion inc;
  inc.amb_ = DirectSumAlgebra(raw.amb, false);
  const double total = raw.normalize ? inc.amb_.total_trace() : 1.0;
  std::vector<Block> amb = raw.amb;
  for (Block& b : amb) b.weight /= total;
  for (Block& b : sub) b.weight /= total;
  inc.amb_ = DirectSumAlgebra(amb, false);
  inc.sub_ = DirectSumAlgebra(sub, false);
  inc.a_ = raw.a;
  inc.offsets_.assign(K, std::vector<int>(L, 0));
  for (std::size_t l = 0; l < L; ++l) {
    int offset = 0;
    for (std::size_t k = 0; k < K; ++k) {
      inc.offsets_[k][l] = offset;
      offset += raw.a[k][l] * raw.sub[k].dim;
    }
  }
  return inc;
}

AlgebraElement embed(const Inclusion& inc, const AlgebraElement& x) {
  require_same_algebra(x.algebra(), inc.sub(), "embed");
  std::vector<Matrix> blocks;
  for (int l = 0; l < inc.num_amb_blocks(); ++l) {
    Matrix out = Matrix::Zero(inc.amb().dim(l), inc.amb().dim(l));
    for (int k = 0; k < inc.num_sub_blocks(); ++k) {
      const int n = inc.sub().dim(k);
      for (int i = 0; i < inc.multiplicity(k, l); ++i) {
        const int r = inc.slot_offset(k, l) + i * n;
        out.block(r, r, n, n) = x.block(k);
      }
    }
    blocks.push_back(std::move(out));
  }
  return AlgebraElement(inc.amb(), std::move(blocks));
}

Density embed(const Inclusion& inc, const Density& rho) { return Density(embed(inc, rho.element())); }

AlgebraElement conditional_expectation(const Inclusion& inc, const AlgebraElement& x) {
  require_same_algebra(x.algebra(), inc.amb(), "conditional expectation");
  std::vector<Matrix> blocks;
  for (int k = 0; k < inc.num_sub_blocks(); ++k) {
    const int n = inc.sub().dim(k);
    Matrix acc = Matrix::Zero(n, n);
    for (int l = 0; l < inc.num_amb_blocks(); ++l) {
      const double t = inc.amb().weight(l);
      for (int i = 0; i < inc.multiplicity(k, l); ++i) {
        const int r = inc.slot_offset(k, l) + i * n;
        acc += t * x.block(l).block(r, r, n, n);
      }
    }
    blocks.push_back(acc / inc.sub().weight(k));
  }
  return AlgebraElement(inc.sub(), std::move(blocks));
}

Density conditional_expectation(const Inclusion& inc, const Density& rho) {
  return Density(conditional_expectation(inc, rho.element()));
}

Inclusion trivial_inclusion(int n) {
  const double w = 1.0 / n;
  return validate_inclusion({{{n, w}}, {{n, w}}, {{1}}, true});
}

Inclusion tensor_inclusion(const Inclusion& i1, const Inclusion& i2) {
  RawInclusion raw;
  for (const Block& b1 : i1.sub().blocks())
    for (const Block& b2 : i2.sub().blocks()) raw.sub.push_back({b1.dim * b2.dim, b1.weight * b2.weight});
  for (const Block& b1 : i1.amb().blocks())
    for (const Block& b2 : i2.amb().blocks()) raw.amb.push_back({b1.dim * b2.dim, b1.weight * b2.weight});
  for (int k1 = 0; k1 < i1.num_sub_blocks(); ++k1) {
    for (int k2 = 0; k2 < i2.num_sub_blocks(); ++k2) {
      std::vector<int> row;
      for (int l1 = 0; l1 < i1.num_amb_blocks(); ++l1)
        for (int l2 = 0; l2 < i2.num_amb_blocks(); ++l2) row.push_back(i1.multiplicity(k1, l1) * i2.multiplicity(k2, l2));
      raw.a.push_back(std::move(row));
    }
  }
  raw.normalize = false;
  return validate_inclusion(raw);
}

Inclusion amplify(const Inclusion& inc, int n) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "amplification level must be at least 1");
  return tensor_inclusion(trivial_inclusion(n), inc);
}

namespace {

struct Slot {
  int k;
  int copy;
  int alpha;
};

Slot locate(const Inclusion& inc, int l, int r) {
  for (int k = 0; k < inc.num_sub_blocks(); ++k) {
    const int n = inc.sub().dim(k);
    const int begin = inc.slot_offset(k, l);
    const int end = begin + inc.multiplicity(k, l) * n;
    if (r >= begin && r < end) return {k, (r - begin) / n, (r - begin) % n};
  }
  fail(ErrorKind::Internal, "row index outside the embed layout");
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace

std::vector<int> tensor_layout(const Inclusion& i1, const Inclusion& i2, int l1, int l2) {
  const int m1 = i1.amb().dim(l1);
  const int m2 = i2.amb().dim(l2);
  const int K2 = i2.num_sub_blocks();
  const int K1 = i1.num_sub_blocks();
  // Offsets of the product blocks inside amb block (l1, l2).
  std::vector<int> offset(static_cast<std::size_t>(K1 * K2));
  int acc = 0;
  for (int k1 = 0; k1 < K1; ++k1) {
    for (int k2 = 0; k2 < K2; ++k2) {
      offset[k1 * K2 + k2] = acc;
      acc += i1.multiplicity(k1, l1) * i2.multiplicity(k2, l2) * i1.sub().dim(k1) * i2.sub().dim(k2);
    }
  }
  std::vector<int> perm(static_cast<std::size_t>(m1 * m2));
  for (int r1 = 0; r1 < m1; ++r1) {
    const Slot s1 = locate(i1, l1, r1);
    for (int r2 = 0; r2 < m2; ++r2) {
      const Slot s2 = locate(i2, l2, r2);
      const int n1 = i1.sub().dim(s1.k);
      const int n2 = i2.sub().dim(s2.k);
      const int a2 = i2.multiplicity(s2.k, l2);
      perm[r1 * m2 + r2] =
          offset[s1.k * K2 + s2.k] + (s1.copy * a2 + s2.copy) * (n1 * n2) + s1.alpha * n2 + s2.alpha;
    }
  }
  return perm;
}

AlgebraElement tensor_amb_element(const Inclusion& i1, const Inclusion& i2, const AlgebraElement& x1,
                                  const AlgebraElement& x2) {
  require_same_algebra(x1.algebra(), i1.amb(), "tensor element");
  require_same_algebra(x2.algebra(), i2.amb(), "tensor element");
  const Inclusion t = tensor_inclusion(i1, i2);
  std::vector<Matrix> blocks;
  for (int l1 = 0; l1 < i1.num_amb_blocks(); ++l1) {
    for (int l2 = 0; l2 < i2.num_amb_blocks(); ++l2) {
      const Matrix k = kron(x1.block(l1), x2.block(l2));
      const std::vector<int> perm = tensor_layout(i1, i2, l1, l2);
      Matrix out(k.rows(), k.cols());
      for (Eigen::Index r = 0; r < k.rows(); ++r)
        for (Eigen::Index c = 0; c < k.cols(); ++c) out(perm[r], perm[c]) = k(r, c);
      blocks.push_back(std::move(out));
    }
  }
  return AlgebraElement(t.amb(), std::move(blocks));
}

AlgebraElement tensor_sub_element(const Inclusion& i1, const Inclusion& i2, const AlgebraElement& y1,
                                  const AlgebraElement& y2) {
  require_same_algebra(y1.algebra(), i1.sub(), "tensor element");
  require_same_algebra(y2.algebra(), i2.sub(), "tensor element");
  const Inclusion t = tensor_inclusion(i1, i2);
  std::vector<Matrix> blocks;
  for (int k1 = 0; k1 < i1.num_sub_blocks(); ++k1)
    for (int k2 = 0; k2 < i2.num_sub_blocks(); ++k2) blocks.push_back(kron(y1.block(k1), y2.block(k2)));
  return AlgebraElement(t.sub(), std::move(blocks));
}

Density random_density(const DirectSumAlgebra& algebra, std::uint64_t seed) {
  GaussianSource source(seed);
  std::vector<Matrix> blocks;
  for (const Block& b : algebra.blocks()) {
    const Matrix g = source.complex_matrix(b.dim, b.dim);
    blocks.push_back(g * g.adjoint());
  }
  return Density::from_unnormalized(AlgebraElement(algebra, std::move(blocks)));
}

Density random_pure_density(const DirectSumAlgebra& algebra, int block, std::uint64_t seed) {
  GaussianSource source(seed);
  const Matrix psi = source.complex_matrix(algebra.dim(block), 1);
  AlgebraElement x = AlgebraElement::zero(algebra);
  x.block(block) = psi * psi.adjoint();
  return Density::from_unnormalized(x);
}

AlgebraElement random_element(const DirectSumAlgebra& algebra, std::uint64_t seed) {
  GaussianSource source(seed);
  std::vector<Matrix> blocks;
  for (const Block& b : algebra.blocks()) blocks.push_back(source.complex_matrix(b.dim, b.dim));
  return AlgebraElement(algebra, std::move(blocks));
}

AlgebraElement random_hermitian(const DirectSumAlgebra& algebra, std::uint64_t seed) {
  AlgebraElement x = random_element(algebra, seed);
  for (int l = 0; l < x.num_blocks(); ++l) x.block(l) = hermitian_part(x.block(l));
  return x;
}

}  // namespace subentropy

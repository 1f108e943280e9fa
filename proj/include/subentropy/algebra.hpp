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
#include <string>
#include <string_view>
#include <vector>

#include "subentropy/linalg.hpp"

namespace subentropy {

/// Matrix block M_dim with trace weight per minimal projection.
struct Block {
  int dim = 1;
  double weight = 1.0;
};

/// ⊕_l M_{m_l} with trace tr(x) = Σ_l t_l Tr(x_l).
class DirectSumAlgebra {
 public:
  DirectSumAlgebra() = default;
  explicit DirectSumAlgebra(std::vector<Block> blocks, bool normalize = true);

  static DirectSumAlgebra matrix_algebra(int m);
  static DirectSumAlgebra commutative(int m);

  int num_blocks() const { return static_cast<int>(blocks_.size()); }
  const std::vector<Block>& blocks() const { return blocks_; }
  int dim(int l) const { return blocks_[l].dim; }
  double weight(int l) const { return blocks_[l].weight; }

  double total_trace() const;
  int total_dim() const;
  int vectorized_dim() const;  // Σ m_l²

  bool same_as(const DirectSumAlgebra& other, double rel_tol = 1e-12) const;

 private:
  std::vector<Block> blocks_;
};

class AlgebraElement {
 public:
  AlgebraElement() = default;
  AlgebraElement(DirectSumAlgebra algebra, std::vector<Matrix> blocks);

  static AlgebraElement zero(const DirectSumAlgebra& algebra);
  static AlgebraElement identity(const DirectSumAlgebra& algebra);

  const DirectSumAlgebra& algebra() const { return algebra_; }
  int num_blocks() const { return algebra_.num_blocks(); }
  const std::vector<Matrix>& blocks() const { return blocks_; }
  const Matrix& block(int l) const { return blocks_[l]; }
  Matrix& block(int l) { return blocks_[l]; }

  cplx trace() const;
  AlgebraElement adjoint() const;
  bool is_hermitian(double tol = kHermitianTolerance) const;
  double max_abs() const;

  /// Concatenated column-major block vectorizations, length Σ m_l².
  Eigen::VectorXcd vectorize() const;
  static AlgebraElement unvectorize(const DirectSumAlgebra& algebra, const Eigen::VectorXcd& v);

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(cplx c);

 private:
  DirectSumAlgebra algebra_;
  std::vector<Matrix> blocks_;
};

AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b);
AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b);
AlgebraElement operator*(AlgebraElement a, cplx c);
AlgebraElement operator*(cplx c, AlgebraElement a);
AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);

void require_same_algebra(const DirectSumAlgebra& a, const DirectSumAlgebra& b, std::string_view what);

/// Weighted Schatten norm (Σ_l t_l Σ s_i^p)^{1/p}; p = ∞ gives the largest
/// singular value.
double schatten_norm(const AlgebraElement& x, double p);
double trace_norm(const AlgebraElement& x);
/// tr(x* y).
cplx inner_product(const AlgebraElement& x, const AlgebraElement& y);
bool is_psd(const AlgebraElement& x, double tol);

/// Positive element with unit weighted trace.
class Density {
 public:
  explicit Density(const AlgebraElement& x);
  static Density from_unnormalized(const AlgebraElement& x);
  static Density maximally_mixed(const DirectSumAlgebra& algebra);

  const AlgebraElement& element() const { return x_; }
  operator const AlgebraElement&() const { return x_; }
  const DirectSumAlgebra& algebra() const { return x_.algebra(); }
  int num_blocks() const { return x_.num_blocks(); }
  const Matrix& block(int l) const { return x_.block(l); }

 private:
  AlgebraElement x_;
};

/// (1 − w)·a + w·b.
Density mix(const Density& a, const Density& b, double w);

using IntMatrix = std::vector<std::vector<int>>;

struct RawInclusion {
  std::vector<Block> sub;
  std::vector<Block> amb;
  IntMatrix a;  // K×L
  bool normalize = true;
};

/// Unital inclusion N ⊂ M. Block l of M holds, for k ascending, a_kl
/// consecutive copies of block k of N.
class Inclusion {
 public:
  const DirectSumAlgebra& sub() const { return sub_; }
  const DirectSumAlgebra& amb() const { return amb_; }
  const IntMatrix& inclusion_matrix() const { return a_; }
  int multiplicity(int k, int l) const { return a_[k][l]; }
  int num_sub_blocks() const { return sub_.num_blocks(); }
  int num_amb_blocks() const { return amb_.num_blocks(); }
  /// Row offset of the first copy of sub block k inside amb block l.
  int slot_offset(int k, int l) const { return offsets_[k][l]; }

  RawInclusion raw() const;

 private:
  friend Inclusion validate_inclusion(const RawInclusion& raw);
  DirectSumAlgebra sub_;
  DirectSumAlgebra amb_;
  IntMatrix a_;
  IntMatrix offsets_;
};

/// Checks, in order: zero columns (NonUnital), m = Aᵀn (DimensionMismatch),
/// s = At on the raw weights to relative 1e-9 (TraceMismatch). Then s is
/// reset to At and both algebras are rescaled by the common tr(1) unless
/// normalization is disabled.
Inclusion validate_inclusion(const RawInclusion& raw);

AlgebraElement embed(const Inclusion& inc, const AlgebraElement& x);
Density embed(const Inclusion& inc, const Density& rho);
AlgebraElement conditional_expectation(const Inclusion& inc, const AlgebraElement& x);
Density conditional_expectation(const Inclusion& inc, const Density& rho);

/// M_n ⊂ M_n with normalized trace.
Inclusion trivial_inclusion(int n);
Inclusion tensor_inclusion(const Inclusion& i1, const Inclusion& i2);
/// M_n(N) ⊂ M_n(M), i.e. tensor_inclusion(trivial_inclusion(n), inc).
Inclusion amplify(const Inclusion& inc, int n);

/// For amb block (l1, l2) of tensor_inclusion(i1, i2): maps the Kronecker
/// index r1·m2 + r2 to the embed-layout index of the tensor inclusion.
std::vector<int> tensor_layout(const Inclusion& i1, const Inclusion& i2, int l1, int l2);
/// x1 ⊗ x2 in the amb coordinates of tensor_inclusion(i1, i2).
AlgebraElement tensor_amb_element(const Inclusion& i1, const Inclusion& i2, const AlgebraElement& x1,
                                  const AlgebraElement& x2);
/// y1 ⊗ y2 in the sub coordinates (Kronecker blocks, lexicographic order).
AlgebraElement tensor_sub_element(const Inclusion& i1, const Inclusion& i2, const AlgebraElement& y1,
                                  const AlgebraElement& y2);

/// Blockwise G·G* with complex Gaussian G, normalized to unit trace.
Density random_density(const DirectSumAlgebra& algebra, std::uint64_t seed);
/// Random unit vector ψ in one seeded block, returned as normalized |ψ⟩⟨ψ|.
Density random_pure_density(const DirectSumAlgebra& algebra, int block, std::uint64_t seed);
AlgebraElement random_element(const DirectSumAlgebra& algebra, std::uint64_t seed);
AlgebraElement random_hermitian(const DirectSumAlgebra& algebra, std::uint64_t seed);

/// L(H) ⊂ L(G) for G ∈ {Z_n (n ≤ 12), S3, D4}. Subgroup ids: "1", the
/// group id itself, "Z<d>" for d | n; S3: "Z3", "Z2"; D4: "Z4", "Z2"
/// (center), "Z2r" (reflection), "V4".
Inclusion group_inclusion(std::string_view group, std::string_view subgroup);
std::vector<std::pair<std::string, std::string>> supported_subgroups();
int group_order(std::string_view group);
int subgroup_order(std::string_view group, std::string_view subgroup);

}  // namespace subentropy

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

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "subentropy/algebra.hpp"
#include "subentropy/config.hpp"

namespace subentropy {

/// Generator of T_t(x)_ij = e^{−b_ij t}·x_ij. The constructor checks b_ii = 0
/// (BadDiagonal), symmetry (Asymmetric) and conditional negative
/// definiteness on the zero-sum subspace (NotCND, with witness c).
class SchurGenerator {
 public:
  explicit SchurGenerator(RealMatrix b);
  int dim() const { return static_cast<int>(b_.rows()); }
  const RealMatrix& b() const { return b_; }

 private:
  RealMatrix b_;
};

/// T_a(x)_ij = a_ij·x_ij with a real symmetric PSD and a_ii = 1
/// (InvalidSchurMap otherwise).
class SchurMap {
 public:
  explicit SchurMap(RealMatrix a);
  int dim() const { return static_cast<int>(a_.rows()); }
  const RealMatrix& a() const { return a_; }
  /// max_{i≠j} |a_ij|.
  double mu() const;

 private:
  RealMatrix a_;
};

/// Superoperator A on vectorized elements (AlgebraElement::vectorize). The
/// constructor checks self-adjointness for the weighted trace, positivity,
/// A(1) = 0 and complete positivity of e^{−tA} at t ∈ {0.1, 1}
/// (InvalidGenerator otherwise).
class GeneralGenerator {
 public:
  GeneralGenerator(DirectSumAlgebra algebra, Matrix superoperator);
  const DirectSumAlgebra& algebra() const { return algebra_; }
  const Matrix& superoperator() const { return a_; }

 private:
  DirectSumAlgebra algebra_;
  Matrix a_;
};

/// N ⊂ M realized as x = V_l·ι(y)_l·V_l* for unitary frames V_l.
struct FixedPointAlgebra {
  Inclusion inclusion;
  std::vector<Matrix> frames;

  AlgebraElement to_standard(const AlgebraElement& x) const;
  AlgebraElement from_standard(const AlgebraElement& x) const;
  Density to_standard(const Density& rho) const;
  AlgebraElement expectation(const AlgebraElement& x) const;
  Density expectation(const Density& rho) const;
};

class Semigroup {
 public:
  virtual ~Semigroup() = default;
  virtual const DirectSumAlgebra& algebra() const = 0;
  /// T_t(x); throws NegativeTime for t < 0.
  virtual AlgebraElement evolve(const AlgebraElement& x, double t) const = 0;
  /// A(x).
  virtual AlgebraElement generate(const AlgebraElement& x) const = 0;
  /// Smallest nonzero eigenvalue of A; NoGap when A = 0.
  virtual double spectral_gap() const = 0;
  virtual const FixedPointAlgebra& fixed_points() const = 0;
  /// id_{M_n} ⊗ T_t on M_n(M) in Kronecker layout.
  virtual std::shared_ptr<const Semigroup> amplify(int n) const = 0;

  Density evolve(const Density& rho, double t) const;
};

std::shared_ptr<const Semigroup> schur_semigroup(const SchurGenerator& gen);
std::shared_ptr<const Semigroup> general_semigroup(const GeneralGenerator& gen);

/// N = span{e_ij : b_ij = 0} = ⊕_c M_{|C_c|} over the classes of the zero
/// pattern, in order of smallest member. Throws NotEquivalence with a
/// witness triple when the pattern is not transitive.
FixedPointAlgebra decoherence_free_subalgebra(const SchurGenerator& gen);

double spectral_gap(const SchurGenerator& gen);
double spectral_gap(const GeneralGenerator& gen);

/// Matrix of T_t on vectorized elements.
Matrix evolution_superoperator(const Semigroup& sg, double t);
/// ‖T_t − E‖ on L_2(M) with the weighted trace inner product.
double l2_distance_to_expectation(const Semigroup& sg, double t);

struct DecayReport {
  std::vector<double> t_grid;
  std::vector<double> d1_curve;
  std::vector<double> d2_curve;
  std::vector<double> bound_curve;
  std::vector<double> trace_dist_curve;
  double gap = 0.0;
  std::vector<int> violations;
  /// min over the grid of 1 + e^{−λt}·exp(d2(0)/2) − exp(d2(t)/2)
  /// (continuous) or its discrete analogue with μ^k.
  double refined_slack = 0.0;
  /// Discrete only: first step covered by the trace-distance threshold and
  /// the steps at or beyond it that missed ε.
  int threshold_step = -1;
  std::vector<int> target_violations;
};

/// ρ must be a density of sg.algebra() (amplify_n = 1) or of
/// sg.amplify(amplify_n)->algebra().
DecayReport decay_experiment(const Semigroup& sg, const Density& rho, const std::vector<double>& t_grid,
                             int amplify_n = 1, const SolverBudget& budget = {});

/// (1/gap)·(2 log(2/ε) + K/2), K = pimsner_popa_index(inc), or dcb_index(inc)
/// when complete. Throws NoGap for gap ≤ 0.
double decoherence_time_bound(const Inclusion& inc, double gap, double epsilon, bool complete);

/// Iterates T_a on ρ for k = 0…steps. Throws MuNotContractive for μ ≥ 1.
DecayReport discrete_decay_experiment(const SchurMap& map, const Density& rho, int steps, int amplify_n = 1,
                                      double epsilon = defaults::kEpsilon, const SolverBudget& budget = {});

/// Smallest k ≥ (log 1/μ)^{−1}·(log(4/ε²) + K/2) with K = dcb_index of the
/// diagonal inclusion.
int discrete_threshold_step(const SchurMap& map, double epsilon);

struct FixedPointExpectation {
  Matrix projection;  // on vectorized elements
  std::optional<FixedPointAlgebra> algebra;
  std::string note;
};

/// Orthogonal projection onto ker A, with its *-algebra structure when the
/// kernel is closed under multiplication.
FixedPointExpectation fixed_point_expectation(const GeneralGenerator& gen);

/// tr((Aρ)·log ρ), with log ρ on the support.
double entropy_production(const Semigroup& sg, const Density& rho);

/// b₁ ⊗ J + J ⊗ b₂: the generator of T¹_t ⊗ T²_t.
SchurGenerator tensor_sum(const SchurGenerator& g1, const SchurGenerator& g2);
GeneralGenerator to_superoperator(const SchurGenerator& gen);

/// b = J − I on M_m.
SchurGenerator dephasing_generator(int m);
/// m = 4 with classes {1,2} and {3,4}.
SchurGenerator block_dephasing_generator();
/// b_ij = (i − j)².
SchurGenerator squared_distance_generator(int m);
/// A(x) = x − tr(x)·1 on M_m.
GeneralGenerator depolarizing_generator(int m);
/// A(x) = [L, [L, x]] for L = diag(l) on M_{|l|}.
GeneralGenerator double_commutator_generator(const RealVector& l);

/// Named generator fixtures: dephasing<m>, block4, sqdist<m>, depolarizing<m>,
/// commutator112.
struct NamedGenerator {
  std::string name;
  std::shared_ptr<const Semigroup> semigroup;
};
std::vector<NamedGenerator> shipped_generators();

}  // namespace subentropy

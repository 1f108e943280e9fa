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

#include "subentropy/projection.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "objective.hpp"
#include "subentropy/fixtures.hpp"
#include "subentropy/markov.hpp"
#include "test_util.hpp"

namespace subentropy {
namespace {

using testing::kInf;

// D_p(2P‖diag(2s, 2(1−s))) on M_2 with normalized trace, computed directly.
double two_by_two_divergence(const Eigen::Matrix2d& p_density, double s, double p) {
  const double pc = std::isinf(p) ? 1.0 : p / (p - 1.0);
  const double gamma = 1.0 / (2.0 * pc);
  const Eigen::Vector2d g(std::pow(2 * s, -gamma), std::pow(2 * (1 - s), -gamma));
  const Eigen::Matrix2d x = g.asDiagonal() * (2.0 * p_density) * g.asDiagonal();
  const Eigen::Vector2d lam = Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d>(x).eigenvalues().cwiseMax(0.0);
  const double norm = std::isinf(p) ? lam.maxCoeff()
                                    : std::pow(0.5 * (std::pow(lam(0), p) + std::pow(lam(1), p)), 1.0 / p);
  return pc * std::log(norm);
}

// Grid search over s followed by golden-section refinement.
double two_by_two_infimum(const Eigen::Matrix2d& p_density, double p) {
  const auto f = [&](double s) { return two_by_two_divergence(p_density, s, p); };
  const int n = 20000;
  int best = 1;
  for (int i = 1; i < n; ++i)
    if (f(double(i) / n) < f(double(best) / n)) best = i;
  double lo = double(best - 1) / n + 1e-12;
  double hi = double(best + 1) / n - 1e-12;
  const double phi = (std::sqrt(5.0) - 1) / 2;
  for (int it = 0; it < 100; ++it) {
    const double a = hi - phi * (hi - lo);
    const double b = lo + phi * (hi - lo);
    if (f(a) < f(b)) hi = b; else lo = a;
  }
  return f((lo + hi) / 2);
}

Eigen::Matrix2d pure_projector(double a) {
  Eigen::Vector2d v(std::sqrt(a), std::sqrt(1 - a));
  return v * v.transpose();
}

Density sigma_p(const Inclusion& c2, double a, double p) {
  const double q = RenyiOrder(p).q();
  AlgebraElement s = AlgebraElement::zero(c2.sub());
  s.block(0)(0, 0) = std::pow(a, q);
  s.block(1)(0, 0) = std::pow(1 - a, q);
  return Density::from_unnormalized(s);
}

TEST(DivergenceToSubalgebra, ZeroOnSubalgebraStates) {
  for (const std::string& name : {"c3m3", "m12", "s3z3"}) {
    const Inclusion inc = fixture_inclusion(name);
    const Density sigma = random_density(inc.sub(), 3);
    const Density rho = embed(inc, sigma);
    for (double p : {0.5, 0.75, 1.0, 2.0, kInf}) {
      const auto r = divergence_to_subalgebra(rho, inc, RenyiOrder(p));
      EXPECT_NEAR(r.value.value(), 0.0, 1e-7) << name << " p=" << p;
      EXPECT_LT(trace_distance(r.minimizer, sigma), 1e-4) << name << " p=" << p;
    }
  }
}

TEST(DivergenceToSubalgebra, PureStateClosedForm) {
  const Inclusion c2 = diagonal_inclusion(2);
  for (double a : {0.1, 0.3, 0.5, 0.9}) {
    const Density rho = pure_state_fixture(a);
    for (double p : {1.5, 2.0, 5.0, kInf}) {
      const RenyiOrder order(p);
      const double q = order.q();
      const double expected = order.conjugate() / q * std::log(std::pow(a, q) + std::pow(1 - a, q));
      const auto r = divergence_to_subalgebra(rho, c2, order);
      EXPECT_NEAR(r.value.value(), expected, 1e-7) << "a=" << a << " p=" << p;
      EXPECT_LT(trace_distance(r.minimizer, sigma_p(c2, a, p)), 1e-4) << "a=" << a << " p=" << p;
    }
  }
  // At p = ∞ this equals log(1 + 2√(a(1−a))); a = 1/2 gives the index log 2.
  EXPECT_NEAR(divergence_to_subalgebra(pure_state_fixture(0.5), c2, RenyiOrder::infinity()).value.value(),
              std::log(2.0), 1e-8);
  EXPECT_NEAR(divergence_to_subalgebra(pure_state_fixture(0.3), c2, RenyiOrder::infinity()).value.value(),
              std::log(1 + 2 * std::sqrt(0.21)), 1e-8);
}

TEST(DivergenceToSubalgebra, MatchesGridOracle) {
  const Inclusion c2 = diagonal_inclusion(2);
  for (const auto& [a, p] : std::vector<std::pair<double, double>>{{0.3, 0.7}, {0.3, 0.5}, {0.2, 0.9}, {0.4, 3.0}}) {
    const double oracle = two_by_two_infimum(pure_projector(a), p);
    EXPECT_NEAR(divergence_to_subalgebra(pure_state_fixture(a), c2, RenyiOrder(p)).value.value(), oracle, 1e-4)
        << "a=" << a << " p=" << p;
  }
  // Mixed 2×2 state.
  Eigen::Matrix2d m;
  m << 0.6, 0.2, 0.2, 0.4;
  AlgebraElement x = AlgebraElement::zero(c2.amb());
  x.block(0) = (2.0 * m).cast<cplx>();
  for (double p : {0.5, 0.7, 2.0, kInf})
    EXPECT_NEAR(divergence_to_subalgebra(Density(x), c2, RenyiOrder(p)).value.value(), two_by_two_infimum(m, p), 1e-4)
        << "p=" << p;
}

TEST(DivergenceToSubalgebra, StrictlyBelowExpectationValue) {
  const Inclusion c2 = diagonal_inclusion(2);
  const Density rho = pure_state_fixture(0.3);
  const Density e = embed(c2, conditional_expectation(c2, rho));
  for (double p : {2.0, kInf}) {
    const RenyiOrder order(p);
    EXPECT_LT(divergence_to_subalgebra(rho, c2, order).value.value(), sandwiched_renyi(rho, e, order).value() - 1e-4);
  }
}

TEST(DivergenceToSubalgebra, ValueConsistency) {
  for (const std::string& name : {"m12", "z4z2", "m3m6", "c4m4"}) {
    const Inclusion inc = fixture_inclusion(name);
    for (std::uint64_t s = 0; s < 4; ++s) {
      const Density rho = random_density(inc.amb(), 40 + s);
      const Density e = embed(inc, conditional_expectation(inc, rho));
      for (double p : {0.5, 0.8, 1.0, 2.0, 5.0, kInf}) {
        const RenyiOrder order(p);
        const auto r = divergence_to_subalgebra(rho, inc, order);
        const double at_min = order.is_umegaki() ? umegaki(rho, embed(inc, r.minimizer)).value()
                                                 : sandwiched_renyi(rho, embed(inc, r.minimizer), order).value();
        EXPECT_NEAR(r.value.value(), at_min, 1e-9) << name << " p=" << p;
        const double at_e = order.is_umegaki() ? umegaki(rho, e).value() : sandwiched_renyi(rho, e, order).value();
        EXPECT_LE(r.value.value(), at_e + 1e-7) << name << " p=" << p;
        EXPECT_GE(r.value.value(), 0.0);
      }
    }
  }
}

TEST(DivergenceToSubalgebra, UmegakiClosedForm) {
  const Inclusion inc = fixture_inclusion("m12");
  const Density rho = random_density(inc.amb(), 9);
  const auto r = divergence_to_subalgebra(rho, inc, RenyiOrder(1.0));
  EXPECT_NEAR(r.value.value(), vn_entropy(conditional_expectation(inc, rho)) - vn_entropy(rho), 1e-12);
  EXPECT_LT(trace_distance(r.minimizer, conditional_expectation(inc, rho)), 1e-12);
}

TEST(DivergenceToSubalgebra, MonotoneInOrder) {
  for (const std::string& name : {"c3m3", "m2m4", "s3z3"}) {
    const Inclusion inc = fixture_inclusion(name);
    for (std::uint64_t s = 0; s < 5; ++s) {
      const Density rho = random_density(inc.amb(), 60 + s);
      double prev = -kInf;
      for (double p : {0.5, 0.8, 1.0, 1.5, 2.0, kInf}) {
        const double v = divergence_to_subalgebra(rho, inc, RenyiOrder(p)).value.value();
        EXPECT_GE(v, prev - 1e-7) << name << " p=" << p;
        prev = v;
      }
    }
  }
}

TEST(DivergenceToSubalgebra, DataProcessingUnderDephasing) {
  const auto sg = schur_semigroup(dephasing_generator(3));
  const Inclusion inc = diagonal_inclusion(3);
  for (std::uint64_t s = 0; s < 5; ++s) {
    const Density rho = random_density(sg->algebra(), 80 + s);
    for (double p : {0.75, 2.0, kInf}) {
      double prev = kInf;
      for (double t : {0.0, 0.2, 0.5, 1.0, 3.0}) {
        const double v = divergence_to_subalgebra(sg->evolve(rho, t), inc, RenyiOrder(p)).value.value();
        EXPECT_LE(v, prev + 1e-7) << "p=" << p << " t=" << t;
        prev = v;
      }
    }
  }
}

TEST(DivergenceToSubalgebra, ConvexityFailsAtInfinity) {
  // D_∞(ρ_a‖C²) = log(1 + 2√(a(1−a))). Mixing ρ_0.1 and ρ_0.5 averages the
  // off-diagonal entry, and log(1 + 2c) is concave in c.
  const Inclusion c2 = diagonal_inclusion(2);
  const RenyiOrder inf = RenyiOrder::infinity();
  const Density r1 = pure_state_fixture(0.1);
  const Density r2 = pure_state_fixture(0.5);
  const double mid = divergence_to_subalgebra(mix(r1, r2, 0.5), c2, inf).value.value();
  EXPECT_NEAR(mid, std::log(1.8), 1e-8);
  const double avg = 0.5 * (divergence_to_subalgebra(r1, c2, inf).value.value() +
                            divergence_to_subalgebra(r2, c2, inf).value.value());
  EXPECT_GT(mid, avg + 1e-3);
}

TEST(DivergenceToSubalgebra, Errors) {
  const Inclusion c2 = diagonal_inclusion(2);
  const Density wrong = random_density(DirectSumAlgebra::matrix_algebra(3), 1);
  EXPECT_ERROR_KIND(divergence_to_subalgebra(wrong, c2, RenyiOrder(2.0)), ErrorKind::AlgebraMismatch);
  const Inclusion m12 = fixture_inclusion("m12");
  SolverBudget tiny;
  tiny.starts = 1;
  tiny.max_iterations = 1;
  tiny.stationarity_tolerance = 1e-15;
  EXPECT_ERROR_KIND(divergence_to_subalgebra(random_density(m12.amb(), 2), m12, RenyiOrder(2.0), tiny),
                    ErrorKind::SolverBudgetExceeded);
}

TEST(SandwichedObjective, GradientMatchesFiniteDifferences) {
  const Inclusion inc = fixture_inclusion("m12");
  const Density rho = random_density(inc.amb(), 17);
  for (double p : {0.7, 2.0, 5.0}) {
    const detail::SandwichedObjective obj(rho, inc, p);
    std::vector<double> x = obj.random_start(5);
    const int n = obj.num_parameters();
    double f = 0.0;
    std::vector<double> grad(static_cast<std::size_t>(n));
    ASSERT_TRUE(obj.evaluate(x.data(), &f, grad.data()));
    for (int i = 0; i < n; i += 7) {
      const double h = 1e-6;
      std::vector<double> xp = x, xm = x;
      xp[i] += h;
      xm[i] -= h;
      double fp = 0.0, fm = 0.0;
      ASSERT_TRUE(obj.evaluate(xp.data(), &fp, nullptr));
      ASSERT_TRUE(obj.evaluate(xm.data(), &fm, nullptr));
      EXPECT_NEAR(grad[i], (fp - fm) / (2 * h), 1e-6 * std::max(1.0, std::abs(grad[i]))) << "p=" << p << " i=" << i;
    }
  }
}

TEST(AmalgamatedNorm, Values) {
  const Inclusion c2 = diagonal_inclusion(2);
  EXPECT_NEAR(amalgamated_l1p_norm(embed(c2, random_density(c2.sub(), 4)), c2, RenyiOrder(2.0)), 1.0, 1e-7);
  // exp(D_2/2) with D_2(ρ_{1/2}‖C²) = log 2.
  EXPECT_NEAR(amalgamated_l1p_norm(pure_state_fixture(0.5), c2, RenyiOrder(2.0)), std::sqrt(2.0), 1e-7);
  const Inclusion m12 = fixture_inclusion("m12");
  EXPECT_GT(amalgamated_l1p_norm(random_density(m12.amb(), 3), m12, RenyiOrder(3.0)), 1.0 + 1e-7);
  EXPECT_ERROR_KIND(amalgamated_l1p_norm(pure_state_fixture(0.5), c2, RenyiOrder(0.75)), ErrorKind::InvalidOrder);
}

TEST(AmalgamatedNorm, NonincreasingUnderDephasing) {
  const auto sg = schur_semigroup(dephasing_generator(2));
  const Inclusion c2 = diagonal_inclusion(2);
  double prev = kInf;
  for (double t : {0.0, 0.1, 0.3, 1.0, 2.0, 5.0}) {
    const double v = amalgamated_l1p_norm(sg->evolve(pure_state_fixture(0.3), t), c2, RenyiOrder(2.0));
    EXPECT_LE(v, prev + 1e-9) << "t=" << t;
    prev = v;
  }
}

TEST(ConditionalNorm, UnitAndSubalgebraElements) {
  const Inclusion m12 = fixture_inclusion("m12");
  EXPECT_NEAR(conditional_linf_norm(AlgebraElement::identity(m12.amb()), m12, 2.0), 1.0, 1e-6);
  const Inclusion c3 = diagonal_inclusion(3);
  AlgebraElement y = AlgebraElement::zero(c3.sub());
  y.block(0)(0, 0) = 0.5;
  y.block(1)(0, 0) = 2.0;
  y.block(2)(0, 0) = 1.0;
  const AlgebraElement x = embed(c3, y);
  for (double q : {1.0, 1.5, 3.0}) {
    const double v = conditional_linf_norm(x, c3, q);
    EXPECT_GE(v, schatten_norm(x, q) - 1e-9) << "q=" << q;
    EXPECT_NEAR(v, schatten_norm(x, kInf), 1e-4) << "q=" << q;
  }
  EXPECT_ERROR_KIND(conditional_linf_norm(x, c3, 0.5), ErrorKind::InvalidArgument);
}

TEST(ConditionalNorm, DualityWithAmalgamatedNorm) {
  const Inclusion c2 = diagonal_inclusion(2);
  for (std::uint64_t s = 0; s < 3; ++s) {
    const Density rho = random_density(c2.amb(), 300 + s);
    EXPECT_NEAR(dual_amalgamated_norm(rho, c2, RenyiOrder(2.0)), amalgamated_l1p_norm(rho, c2, RenyiOrder(2.0)),
                1e-3);
  }
  EXPECT_NEAR(dual_amalgamated_norm(pure_state_fixture(0.5), c2, RenyiOrder(3.0)),
              amalgamated_l1p_norm(pure_state_fixture(0.5), c2, RenyiOrder(3.0)), 1e-3);
}

TEST(MultistartCheck, AgreesAcrossStarts) {
  const Inclusion c2 = diagonal_inclusion(2);
  EXPECT_TRUE(minimizer_multistart_check(pure_state_fixture(0.3), c2, RenyiOrder(2.0), 8));
  EXPECT_TRUE(minimizer_multistart_check(pure_state_fixture(0.3), c2, RenyiOrder(1.0), 8));
  const Inclusion m12 = fixture_inclusion("m12");
  EXPECT_TRUE(minimizer_multistart_check(random_density(m12.amb(), 12), m12, RenyiOrder(2.0), 8));
  const auto starts = divergence_to_subalgebra_starts(pure_state_fixture(0.3), c2, RenyiOrder(2.0), {8, 4000, 1e-7, 0});
  ASSERT_EQ(starts.size(), 8U);
  for (const auto& r : starts) EXPECT_LT(trace_distance(r.minimizer, sigma_p(c2, 0.3, 2.0)), 1e-5);
}

TEST(DivergenceToSubalgebra, HalfOrderFidelityForm) {
  // D_{1/2}(ρ‖σ) = −2·log‖ρ^{1/2}σ^{1/2}‖₁; for ρ_a and diagonal σ the norm is
  // √(as + (1−a)(1−s)), so the infimum is −log max(a, 1−a).
  const Inclusion c2 = diagonal_inclusion(2);
  for (double a : {0.2, 0.5, 0.7}) {
    const double v = divergence_to_subalgebra(pure_state_fixture(a), c2, RenyiOrder(0.5)).value.value();
    EXPECT_NEAR(v, -std::log(std::max(a, 1 - a)), 1e-6) << "a=" << a;
    EXPECT_NEAR(v, two_by_two_infimum(pure_projector(a), 0.5), 1e-4) << "a=" << a;
  }
}

}  // namespace
}  // namespace subentropy

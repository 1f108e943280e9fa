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

#include "criteria.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "subentropy/algebra.hpp"
#include "subentropy/divergence.hpp"
#include "subentropy/error.hpp"
#include "subentropy/fixtures.hpp"
#include "subentropy/index.hpp"
#include "subentropy/markov.hpp"
#include "subentropy/projection.hpp"
#include "subentropy/random.hpp"

namespace subentropy::acceptance {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::uint64_t kSeed = 20260101;

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::string order_name(double p) { return std::isinf(p) ? "inf" : num(p); }

// Counts checks, keeps the worst error and the first few failures.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) {
      ++failures_;
      if (failed_.size() < 5) failed_.push_back(what);
    }
  }

  // |got − want| ≤ tol.
  void close(double got, double want, double tol, const std::string& what) {
    const double err = std::abs(got - want);
    worst_ = std::max(worst_, err);
    check(err <= tol, what + ": got " + num(got) + ", want " + num(want));
  }

  void error(const std::string& what, const std::exception& e) { check(false, what + " threw " + e.what()); }

  void worst(double err) { worst_ = std::max(worst_, err); }

  bool passed() const { return failures_ == 0 && checks_ > 0; }
  int checks() const { return checks_; }

  std::string summary() const {
    std::ostringstream out;
    out << checks_ - failures_ << "/" << checks_ << " checks";
    if (worst_ > 0.0) out << ", worst error " << num(worst_);
    for (const std::string& f : failed_) out << "; " << f;
    return out.str();
  }

 private:
  int checks_ = 0;
  int failures_ = 0;
  double worst_ = 0.0;
  std::vector<std::string> failed_;
};

// Fixtures small enough for the solver-based criteria.
std::vector<std::string> solver_fixtures() {
  std::vector<std::string> out;
  for (const std::string& name : inclusion_fixture_names())
    if (name != "m12sq") out.push_back(name);
  return out;
}

std::vector<std::string> small_fixtures() { return {"c2m2", "c3m3", "cm2", "m2m4", "z4z2", "s3z3", "m3m6"}; }

Density random_state(const DirectSumAlgebra& alg, std::uint64_t seed, bool pure) {
  if (!pure) return random_density(alg, seed);
  const int block = static_cast<int>(derive_seed(seed, 1) % static_cast<std::uint64_t>(alg.num_blocks()));
  return random_pure_density(alg, block, seed);
}

Outcome closed_form(Outcome o) {
  Tally tally;
  const Inclusion inc = diagonal_inclusion(2);
  for (double p : {2.0, kInf}) {
    const RenyiOrder order(p);
    const double q = order.q();
    const double pc = order.conjugate();
    for (double a : {0.1, 0.3, 0.5}) {
      const std::string tag = "a=" + num(a) + " p=" + order_name(p);
      try {
        const auto res = divergence_to_subalgebra(pure_state_fixture(a), inc, order);
        const double got = res.value.value();
        const double stated =
            pc * std::log(1.0 + std::pow(a, q) * std::pow(1 - a, 1 - q) + std::pow(1 - a, q) * std::pow(a, 1 - q));
        tally.close(got, stated, 1e-5, "value " + tag);
        const double w0 = std::pow(a, q);
        const double w1 = std::pow(1 - a, q);
        AlgebraElement s = AlgebraElement::zero(inc.sub());
        s.block(0)(0, 0) = w0;
        s.block(1)(0, 0) = w1;
        const double dist = trace_distance(res.minimizer, Density::from_unnormalized(s));
        tally.check(dist <= 1e-4, "minimizer " + tag + ": trace distance " + num(dist));
        const double corrected = pc / q * std::log(w0 + w1);
        o.notes.push_back(tag + ": solver " + num(got) + ", criterion formula " + num(stated) +
                          ", (p'/q)log(a^q+(1-a)^q) " + num(corrected));
      } catch (const std::exception& e) {
        tally.error(tag, e);
      }
    }
  }
  o.passed = tally.passed();
  o.detail = tally.summary();
  return o;
}

Outcome index_identities(Outcome o) {
  Tally tally;
  const std::vector<std::pair<std::string, double>> expected = {
      {"c2m2", 2}, {"m2m4", 4}, {"cm2", 2}, {"m2m6", 6}, {"m3m6", 4},
      {"m6m36", 36}, {"m12", 10}, {"z4z2", 2}, {"s3z3", 2}};
  for (const auto& [name, v] : expected) {
    try {
      tally.close(pimsner_popa_index(fixture_inclusion(name)), std::log(v), 1e-12, name);
    } catch (const std::exception& e) {
      tally.error(name, e);
    }
  }
  o.passed = tally.passed();
  o.detail = tally.summary();
  return o;
}

Outcome two_sided_index(Outcome o) {
  Tally tally;
  for (const std::string& name : solver_fixtures()) {
    const Inclusion inc = fixture_inclusion(name);
    const double idx = pimsner_popa_index(inc);
    for (double p : {0.5, 1.0, 2.0, kInf}) {
      const std::string tag = name + " p=" + order_name(p);
      try {
        SolverBudget budget;
        budget.starts = defaults::kMaxDivergenceStarts;
        tally.close(max_divergence_numeric(inc, RenyiOrder(p), 16, budget), idx, 1e-4, tag);
      } catch (const std::exception& e) {
        tally.error(tag, e);
      }
    }
    try {
      const Density opt = optimal_density(inc);
      tally.close(umegaki(opt, embed(inc, conditional_expectation(inc, opt))).value(), idx, 1e-9,
                  name + " optimal density");
    } catch (const std::exception& e) {
      tally.error(name + " optimal density", e);
    }
  }
  o.notes.push_back("fixtures: all except m12sq (dimension 144)");
  o.passed = tally.passed();
  o.detail = tally.summary();
  return o;
}

Outcome dcb(Outcome o) {
  Tally tally;
  const auto guarded = [&](const std::string& tag, auto&& f) {
    try {
      f();
    } catch (const std::exception& e) {
      tally.error(tag, e);
    }
  };
  guarded("m12", [&] { tally.close(dcb_index(fixture_inclusion("m12")), std::log(13.0), 1e-12, "m12"); });
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= 4; ++m) {
      const std::string tag = "M" + std::to_string(n) + "⊂M" + std::to_string(n * m);
      guarded(tag, [&] { tally.close(dcb_index(matrix_tensor_inclusion(n, m)), std::log(m * m), 1e-12, tag); });
    }
  for (int m = 2; m <= 6; ++m) {
    const std::string tag = "C^" + std::to_string(m);
    guarded(tag, [&] { tally.close(dcb_index(diagonal_inclusion(m)), std::log(m), 1e-12, tag); });
  }
  const std::vector<std::string> names = inclusion_fixture_names();
  for (const std::string& a : names)
    for (const std::string& b : names) {
      const std::string tag = a + "⊗" + b;
      guarded(tag, [&] {
        const Inclusion ia = fixture_inclusion(a);
        const Inclusion ib = fixture_inclusion(b);
        tally.close(dcb_index(tensor_inclusion(ia, ib)), dcb_index(ia) + dcb_index(ib), 1e-12, tag);
      });
    }
  guarded("m12sq", [&] { tally.close(pimsner_popa_index(fixture_inclusion("m12sq")), std::log(124.0), 1e-12, "m12sq"); });
  o.passed = tally.passed();
  o.detail = tally.summary();
  return o;
}

Outcome uniqueness(Outcome o) {
  Tally tally;
  std::uint64_t seed = derive_seed(kSeed, 5);
  for (const std::string& name : solver_fixtures()) {
    const Inclusion inc = fixture_inclusion(name);
    for (int i = 0; i < 20; ++i) {
      const Density rho = random_density(inc.amb(), ++seed);
      for (double p : {0.75, 2.0, 5.0}) {
        const std::string tag = name + " #" + std::to_string(i) + " p=" + order_name(p);
        try {
          SolverBudget budget;
          budget.seed = seed;
          tally.check(minimizer_multistart_check(rho, inc, RenyiOrder(p), 8, budget), tag);
        } catch (const std::exception& e) {
          tally.error(tag, e);
        }
      }
    }
  }
  o.passed = tally.passed();
  o.detail = tally.summary();
  return o;
}

Outcome duality(Outcome o) {
  Tally tally;
  std::uint64_t seed = derive_seed(kSeed, 6);
  for (const std::string& name : {"c2m2", "c3m3"}) {
    const Inclusion inc = fixture_inclusion(name);
    for (int i = 0; i < 10; ++i) {
      const Density rho = random_density(inc.amb(), ++seed);
      const std::string tag = std::string(name) + " #" + std::to_string(i);
      try {
        SolverBudget budget;
        budget.seed = seed;
        const double primal = amalgamated_l1p_norm(rho, inc, RenyiOrder(2.0), budget);
        const double dual = dual_amalgamated_norm(rho, inc, RenyiOrder(2.0), budget);
        tally.close(dual, primal, 1e-3, tag);
      } catch (const std::exception& e) {
        tally.error(tag, e);
      }
    }
  }
  o.passed = tally.passed();
  o.detail = tally.summary();
  return o;
}

Outcome semigroup_decay(Outcome o) {
  Tally tally;
  const std::vector<NamedGenerator> gens = shipped_generators();
  GaussianSource rng(derive_seed(kSeed, 7));
  double slack = kInf;
  for (int i = 0; i < 500; ++i) {
    const NamedGenerator& g = gens[static_cast<std::size_t>(i) % gens.size()];
    const int n = 1 + (i / static_cast<int>(gens.size())) % 3;
    const double t = rng.uniform() * defaults::kGridRelaxationTimes / g.semigroup->spectral_gap();
    const std::string tag = g.name + " n=" + std::to_string(n) + " t=" + num(t);
    try {
      const auto lifted = g.semigroup->amplify(n);
      const Density rho = random_state(lifted->algebra(), derive_seed(kSeed, 7000 + i), i % 4 == 3);
      SolverBudget budget;
      budget.seed = static_cast<std::uint64_t>(i);
      const DecayReport r = decay_experiment(*g.semigroup, rho, {0.0, t}, n, budget);
      tally.check(r.violations.empty(), tag + " violation");
      tally.check(r.refined_slack >= -defaults::kViolationTolerance, tag + " slack " + num(r.refined_slack));
      slack = std::min(slack, r.refined_slack);
    } catch (const std::exception& e) {
      tally.error(tag, e);
    }
  }
  o.notes.push_back("minimum refined slack " + num(slack));
  o.passed = tally.passed();
  o.detail = tally.summary();
  return o;
}

Outcome l2_decay(Outcome o) {
  Tally tally;
  for (const NamedGenerator& g : shipped_generators()) {
    const double gap = g.semigroup->spectral_gap();
    for (double t : {0.5, 1.0, 2.0}) {
      const std::string tag = g.name + " t=" + num(t);
      try {
        const double d = l2_distance_to_expectation(*g.semigroup, t);
        const double bound = std::exp(-gap * t);
        tally.worst(std::max(0.0, d - bound));
        tally.check(d <= bound * (1 + 1e-9), tag + ": " + num(d) + " > " + num(bound));
      } catch (const std::exception& e) {
        tally.error(tag, e);
      }
    }
  }
  o.passed = tally.passed();
  o.detail = tally.summary();
  return o;
}

Outcome discrete(Outcome o) {
  Tally tally;
  for (double mu : {0.3, 0.7}) {
    RealMatrix a(2, 2);
    a << 1.0, mu, mu, 1.0;
    const SchurMap map(a);
    for (int i = 0; i < 20; ++i) {
      const int n = 1 + i % 2;
      const std::string tag = "mu=" + num(mu) + " #" + std::to_string(i);
      try {
        const Density rho = random_state(DirectSumAlgebra::matrix_algebra(2 * n),
                                         derive_seed(kSeed, 9000 + i + (mu > 0.5 ? 100 : 0)), i % 4 == 3);
        const DecayReport r = discrete_decay_experiment(map, rho, defaults::kDiscreteSteps, n, defaults::kEpsilon);
        tally.check(r.violations.empty(), tag + " bound violation");
        tally.check(r.target_violations.empty(), tag + " trace-distance target missed");
        tally.check(r.threshold_step <= defaults::kDiscreteSteps, tag + " threshold beyond 30 steps");
        if (i == 0) o.notes.push_back("mu=" + num(mu) + ": threshold step " + std::to_string(r.threshold_step));
      } catch (const std::exception& e) {
        tally.error(tag, e);
      }
    }
  }
  o.passed = tally.passed();
  o.detail = tally.summary();
  return o;
}

Outcome decoherence_time(Outcome o) {
  Tally tally;
  double worst = 0.0;
  for (int m = 2; m <= 6; ++m) {
    const auto sg = schur_semigroup(dephasing_generator(m));
    const double t_star =
        decoherence_time_bound(diagonal_inclusion(m), sg->spectral_gap(), defaults::kEpsilon, true);
    for (int i = 0; i < 50; ++i) {
      const int n = 1 + i % 3;
      const std::string tag = "m=" + std::to_string(m) + " #" + std::to_string(i);
      try {
        const auto lifted = sg->amplify(n);
        const Density rho = random_state(lifted->algebra(), derive_seed(kSeed, 10000 + 100 * m + i), i % 2 == 1);
        const double d = trace_distance(lifted->evolve(rho, t_star), lifted->fixed_points().expectation(rho));
        worst = std::max(worst, d);
        tally.check(d <= defaults::kEpsilon, tag + ": " + num(d));
      } catch (const std::exception& e) {
        tally.error(tag, e);
      }
    }
  }
  o.notes.push_back("largest trace distance at t* " + num(worst));
  o.passed = tally.passed();
  o.detail = tally.summary();
  return o;
}

// Random full-support pair on the ambient algebra of a small fixture.
struct Pair {
  Inclusion inc;
  Density rho;
  Density sigma;
};

Pair random_pair(int i, std::uint64_t stream) {
  const std::vector<std::string> names = small_fixtures();
  Inclusion inc = fixture_inclusion(names[static_cast<std::size_t>(i) % names.size()]);
  Density rho = random_density(inc.amb(), derive_seed(stream, 2 * i));
  Density sigma = random_density(inc.amb(), derive_seed(stream, 2 * i + 1));
  return {std::move(inc), std::move(rho), std::move(sigma)};
}

void property_monotone_p(Tally& tally) {
  const std::uint64_t stream = derive_seed(kSeed, 111);
  for (int i = 0; i < 200; ++i) {
    const std::string tag = "monotone-p pair #" + std::to_string(i);
    try {
      const Pair pr = random_pair(i, stream);
      double prev = -kInf;
      bool ok = true;
      for (double p : {0.5, 0.75, 1.0, 1.25, 2.0, 5.0, kInf}) {
        const double v = sandwiched_renyi(pr.rho, pr.sigma, RenyiOrder(p)).value();
        ok = ok && v >= prev - 1e-7;
        prev = v;
      }
      tally.check(ok, tag);
    } catch (const std::exception& e) {
      tally.error(tag, e);
    }
  }
  const std::uint64_t sub_stream = derive_seed(kSeed, 112);
  for (int i = 0; i < 200; ++i) {
    const std::string tag = "monotone-p subalgebra #" + std::to_string(i);
    try {
      const Pair pr = random_pair(i, sub_stream);
      double prev = -kInf;
      bool ok = true;
      for (double p : {0.5, 0.8, 1.0, 1.5, 2.0, kInf}) {
        const double v = divergence_to_subalgebra(pr.rho, pr.inc, RenyiOrder(p)).value.value();
        ok = ok && v >= prev - 1e-7;
        prev = v;
      }
      tally.check(ok, tag);
    } catch (const std::exception& e) {
      tally.error(tag, e);
    }
  }
}

void property_dpi(Tally& tally) {
  const std::uint64_t stream = derive_seed(kSeed, 113);
  const double orders[] = {0.5, 0.75, 1.0, 2.0, 5.0, kInf};
  for (int i = 0; i < 200; ++i) {
    const std::string tag = "DPI under E #" + std::to_string(i);
    try {
      const Pair pr = random_pair(i, stream);
      const RenyiOrder order(orders[i % 6]);
      const double before = sandwiched_renyi(pr.rho, pr.sigma, order).value();
      const double after = sandwiched_renyi(conditional_expectation(pr.inc, pr.rho),
                                            conditional_expectation(pr.inc, pr.sigma), order)
                               .value();
      tally.check(after <= before + 1e-9, tag);
    } catch (const std::exception& e) {
      tally.error(tag, e);
    }
  }
  for (int i = 0; i < 200; ++i) {
    const std::string tag = "DPI under dephasing #" + std::to_string(i);
    try {
      const int m = 2 + i % 3;
      const auto sg = schur_semigroup(dephasing_generator(m));
      const Inclusion inc = diagonal_inclusion(m);
      const Density rho = random_density(sg->algebra(), derive_seed(kSeed, 20000 + i));
      const RenyiOrder order(orders[i % 6]);
      const double t = 0.1 + 0.2 * (i % 7);
      const double before = divergence_to_subalgebra(rho, inc, order).value.value();
      const double after = divergence_to_subalgebra(sg->evolve(rho, t), inc, order).value.value();
      tally.check(after <= before + 1e-7, tag);
    } catch (const std::exception& e) {
      tally.error(tag, e);
    }
  }
}

void property_pinsker(Tally& tally) {
  const std::uint64_t stream = derive_seed(kSeed, 114);
  for (int i = 0; i < 200; ++i) {
    const std::string tag = "Pinsker #" + std::to_string(i);
    try {
      const Pair pr = random_pair(i, stream);
      const double d = umegaki(pr.rho, pr.sigma).value();
      const double tv = trace_distance(pr.rho, pr.sigma);
      tally.check(d >= 0.5 * tv * tv - 1e-12, tag);
    } catch (const std::exception& e) {
      tally.error(tag, e);
    }
  }
}

void property_petz(Tally& tally) {
  const std::uint64_t stream = derive_seed(kSeed, 115);
  for (int i = 0; i < 200; ++i) {
    const std::string tag = "Petz sandwich #" + std::to_string(i);
    try {
      const Pair pr = random_pair(i, stream);
      const double p = i % 2 == 0 ? 1.5 : 2.0;
      const double lower = petz_renyi(pr.rho, pr.sigma, RenyiOrder(2.0 - 1.0 / p)).value();
      const double mid = sandwiched_renyi(pr.rho, pr.sigma, RenyiOrder(p)).value();
      const double upper = petz_renyi(pr.rho, pr.sigma, RenyiOrder(p)).value();
      const double half = sandwiched_renyi(pr.rho, pr.sigma, RenyiOrder(0.5)).value();
      const double petz_half = petz_renyi(pr.rho, pr.sigma, RenyiOrder(0.5)).value();
      tally.check(lower <= mid + 1e-9 && mid <= upper + 1e-9 && half <= petz_half + 1e-9, tag);
    } catch (const std::exception& e) {
      tally.error(tag, e);
    }
  }
}

// D_∞(ρ_a‖C²) = log(1 + 2√(a(1−a))) is concave along mixtures of ρ_a that
// add the off-diagonal entries, so the midpoint of a = 0.1 and a = 0.5 lies
// above the chord.
std::string convexity_counterexample() {
  const Inclusion inc = diagonal_inclusion(2);
  const RenyiOrder order = RenyiOrder::infinity();
  const Density r1 = pure_state_fixture(0.1);
  const Density r2 = pure_state_fixture(0.5);
  const double d1 = divergence_to_subalgebra(r1, inc, order).value.value();
  const double d2 = divergence_to_subalgebra(r2, inc, order).value.value();
  const double mid = divergence_to_subalgebra(mix(r1, r2, 0.5), inc, order).value.value();
  return "p=inf, rho_0.1 and rho_0.5 on C2 in M2: D(mid) " + num(mid) + " vs average " + num(0.5 * (d1 + d2)) +
         " (closed form log 1.8 = " + num(std::log(1.8)) + ")";
}

void property_convexity(Tally& tally) {
  const std::uint64_t stream = derive_seed(kSeed, 116);
  const double orders[] = {0.75, 2.0, kInf};
  for (int i = 0; i < 200; ++i) {
    const std::string tag = "convexity subalgebra #" + std::to_string(i);
    try {
      const Pair pr = random_pair(i, stream);
      const RenyiOrder order(orders[i % 3]);
      const double d1 = divergence_to_subalgebra(pr.rho, pr.inc, order).value.value();
      const double d2 = divergence_to_subalgebra(pr.sigma, pr.inc, order).value.value();
      const double mid = divergence_to_subalgebra(mix(pr.rho, pr.sigma, 0.5), pr.inc, order).value.value();
      tally.check(mid <= 0.5 * (d1 + d2) + 1e-7, tag);
    } catch (const std::exception& e) {
      tally.error(tag, e);
    }
  }
  const std::uint64_t joint_stream = derive_seed(kSeed, 117);
  const double joint_orders[] = {1.5, 2.0, 5.0, kInf};
  for (int i = 0; i < 200; ++i) {
    const std::string tag = "joint convexity #" + std::to_string(i);
    try {
      const Pair a = random_pair(i, joint_stream);
      const Density rho2 = random_density(a.inc.amb(), derive_seed(joint_stream, 1000 + 2 * i));
      const Density sigma2 = random_density(a.inc.amb(), derive_seed(joint_stream, 1001 + 2 * i));
      const RenyiOrder order(joint_orders[i % 4]);
      const double avg =
          0.5 * (sandwiched_renyi(a.rho, a.sigma, order).value() + sandwiched_renyi(rho2, sigma2, order).value());
      const double mid = sandwiched_renyi(mix(a.rho, rho2, 0.5), mix(a.sigma, sigma2, 0.5), order).value();
      tally.check(mid <= avg + 1e-9, tag);
    } catch (const std::exception& e) {
      tally.error(tag, e);
    }
  }
}

Outcome properties(Outcome o) {
  bool all = true;
  std::ostringstream detail;
  const std::pair<const char*, void (*)(Tally&)> suites[] = {
      {"monotonicity in p", property_monotone_p}, {"DPI", property_dpi},
      {"Pinsker", property_pinsker},              {"Petz sandwich", property_petz},
      {"convexity", property_convexity}};
  for (const auto& [name, run] : suites) {
    Tally tally;
    run(tally);
    all = all && tally.passed();
    o.notes.push_back(std::string(tally.passed() ? "pass " : "FAIL ") + name + ": " + tally.summary());
    if (run == property_convexity) o.notes.push_back("  " + convexity_counterexample());
    detail << (detail.tellp() > 0 ? ", " : "") << name << (tally.passed() ? " ok" : " FAILED");
  }
  o.passed = all;
  o.detail = detail.str();
  return o;
}

}  // namespace

std::vector<Outcome> run_all(const std::function<void(const Outcome&)>& report) {
  const std::pair<const char*, Outcome (*)(Outcome)> criteria[] = {
      {"closed-form divergence of the 2x2 pure state", closed_form},
      {"Pimsner-Popa index identities", index_identities},
      {"numeric supremum of D_p(rho||N) equals the index", two_sided_index},
      {"D_cb values, additivity and the m12sq pin", dcb},
      {"uniqueness of the minimizer", uniqueness},
      {"duality of amalgamated and conditional norms", duality},
      {"semigroup decay envelope", semigroup_decay},
      {"L2 decay at the spectral gap", l2_decay},
      {"discrete Schur map decay", discrete},
      {"decoherence time of dephasing", decoherence_time},
      {"property suites", properties},
  };
  std::vector<Outcome> out;
  int id = 0;
  for (const auto& [title, run] : criteria) {
    Outcome o;
    o.id = ++id;
    o.title = title;
    const auto start = std::chrono::steady_clock::now();
    try {
      o = run(o);
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("aborted: ") + e.what();
    }
    o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(o);
    out.push_back(std::move(o));
  }
  return out;
}

std::string format(const Outcome& o) {
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.1fs", o.seconds);
  std::string line = std::string(o.passed ? "PASS" : "FAIL") + " [" + std::to_string(o.id) + "] " + o.title + " (" +
                     secs + "): " + o.detail;
  for (const std::string& n : o.notes) line += "\n    " + n;
  return line;
}

}  // namespace subentropy::acceptance

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
#include <unsupported/Eigen/KroneckerProduct>

#include "markov_detail.hpp"
#include "subentropy/error.hpp"

namespace subentropy {

AlgebraElement FixedPointAlgebra::to_standard(const AlgebraElement& x) const {
  require_same_algebra(x.algebra(), inclusion.amb(), "fixed-point frame");
  AlgebraElement out = x;
  for (int l = 0; l < x.num_blocks(); ++l) out.block(l) = frames[l].adjoint() * x.block(l) * frames[l];
  return out;
}

AlgebraElement FixedPointAlgebra::from_standard(const AlgebraElement& x) const {
  require_same_algebra(x.algebra(), inclusion.amb(), "fixed-point frame");
  AlgebraElement out = x;
  for (int l = 0; l < x.num_blocks(); ++l) out.block(l) = frames[l] * x.block(l) * frames[l].adjoint();
  return out;
}

Density FixedPointAlgebra::to_standard(const Density& rho) const { return Density(to_standard(rho.element())); }

AlgebraElement FixedPointAlgebra::expectation(const AlgebraElement& x) const {
  return from_standard(embed(inclusion, conditional_expectation(inclusion, to_standard(x))));
}

Density FixedPointAlgebra::expectation(const Density& rho) const { return Density(expectation(rho.element())); }

Density Semigroup::evolve(const Density& rho, double t) const { return Density(evolve(rho.element(), t)); }

namespace {

class GeneralSemigroup;

// id_{M_n} ⊗ T on M_n(M), acting on the n² slices of each block.
class AmplifiedSemigroup final : public Semigroup {
 public:
  AmplifiedSemigroup(std::shared_ptr<const Semigroup> base, int n) : base_(std::move(base)), n_(n) {
    const FixedPointAlgebra& fp = base_->fixed_points();
    const Inclusion trivial = trivial_inclusion(n);
    fixed_.inclusion = subentropy::amplify(fp.inclusion, n);
    algebra_ = fixed_.inclusion.amb();
    for (int l = 0; l < base_->algebra().num_blocks(); ++l) {
      const std::vector<int> perm = tensor_layout(trivial, fp.inclusion, 0, l);
      Matrix pi = Matrix::Zero(static_cast<Eigen::Index>(perm.size()), static_cast<Eigen::Index>(perm.size()));
      for (std::size_t r = 0; r < perm.size(); ++r) pi(static_cast<Eigen::Index>(r), perm[r]) = 1.0;
      fixed_.frames.push_back(Eigen::kroneckerProduct(Matrix::Identity(n, n), fp.frames[l]).eval() * pi);
    }
  }

  const DirectSumAlgebra& algebra() const override { return algebra_; }

  AlgebraElement evolve(const AlgebraElement& x, double t) const override {
    detail::require_nonnegative_time(t);
    return slicewise(x, [&](const AlgebraElement& y) { return base_->evolve(y, t); });
  }

  AlgebraElement generate(const AlgebraElement& x) const override {
    return slicewise(x, [&](const AlgebraElement& y) { return base_->generate(y); });
  }

  double spectral_gap() const override { return base_->spectral_gap(); }
  const FixedPointAlgebra& fixed_points() const override { return fixed_; }

  std::shared_ptr<const Semigroup> amplify(int n) const override {
    if (n < 1) fail(ErrorKind::InvalidArgument, "amplification level must be positive");
    return std::make_shared<AmplifiedSemigroup>(base_, n * n_);
  }

 private:
  AlgebraElement slicewise(const AlgebraElement& x,
                           const std::function<AlgebraElement(const AlgebraElement&)>& f) const {
    require_same_algebra(x.algebra(), algebra_, "amplified semigroup");
    const DirectSumAlgebra& base = base_->algebra();
    AlgebraElement out = AlgebraElement::zero(algebra_);
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) {
        AlgebraElement slice = AlgebraElement::zero(base);
        for (int l = 0; l < base.num_blocks(); ++l) {
          const int m = base.dim(l);
          slice.block(l) = x.block(l).block(a * m, b * m, m, m);
        }
        const AlgebraElement image = f(slice);
        for (int l = 0; l < base.num_blocks(); ++l) {
          const int m = base.dim(l);
          out.block(l).block(a * m, b * m, m, m) = image.block(l);
        }
      }
    return out;
  }

  std::shared_ptr<const Semigroup> base_;
  int n_;
  DirectSumAlgebra algebra_;
  FixedPointAlgebra fixed_;
};

class GeneralSemigroup final : public Semigroup, public std::enable_shared_from_this<GeneralSemigroup> {
 public:
  explicit GeneralSemigroup(GeneralGenerator gen)
      : gen_(std::move(gen)), spectrum_(detail::generator_spectrum(gen_.algebra(), gen_.superoperator())) {
    FixedPointExpectation fp = fixed_point_expectation(gen_);
    if (!fp.algebra) fail(ErrorKind::InvalidGenerator, "fixed points do not form an algebra: " + fp.note);
    fixed_ = std::move(*fp.algebra);
  }

  const DirectSumAlgebra& algebra() const override { return gen_.algebra(); }

  AlgebraElement evolve(const AlgebraElement& x, double t) const override {
    require_same_algebra(x.algebra(), algebra(), "evolve");
    detail::require_nonnegative_time(t);
    return AlgebraElement::unvectorize(algebra(), spectrum_.evolution(t) * x.vectorize());
  }

  AlgebraElement generate(const AlgebraElement& x) const override {
    require_same_algebra(x.algebra(), algebra(), "generate");
    return AlgebraElement::unvectorize(algebra(), gen_.superoperator() * x.vectorize());
  }

  double spectral_gap() const override { return subentropy::spectral_gap(gen_); }
  const FixedPointAlgebra& fixed_points() const override { return fixed_; }

  std::shared_ptr<const Semigroup> amplify(int n) const override {
    if (n < 1) fail(ErrorKind::InvalidArgument, "amplification level must be positive");
    if (n == 1) return shared_from_this();
    return std::make_shared<AmplifiedSemigroup>(shared_from_this(), n);
  }

 private:
  GeneralGenerator gen_;
  detail::GeneratorSpectrum spectrum_;
  FixedPointAlgebra fixed_;
};

}  // namespace

std::shared_ptr<const Semigroup> general_semigroup(const GeneralGenerator& gen) {
  return std::make_shared<GeneralSemigroup>(gen);
}

Matrix evolution_superoperator(const Semigroup& sg, double t) {
  return detail::superoperator_of(sg.algebra(), [&](const AlgebraElement& x) { return sg.evolve(x, t); });
}

double l2_distance_to_expectation(const Semigroup& sg, double t) {
  const DirectSumAlgebra& alg = sg.algebra();
  const FixedPointAlgebra& fp = sg.fixed_points();
  const Matrix diff = evolution_superoperator(sg, t) -
                      detail::superoperator_of(alg, [&](const AlgebraElement& x) { return fp.expectation(x); });
  const RealVector sw = detail::vector_weights(alg).cwiseSqrt();
  const Matrix tilde = sw.asDiagonal() * diff * sw.cwiseInverse().asDiagonal();
  return Eigen::BDCSVD<Matrix>(tilde).singularValues()(0);
}

double entropy_production(const Semigroup& sg, const Density& rho) {
  const AlgebraElement a_rho = sg.generate(rho.element());
  double total = 0.0;
  for (int l = 0; l < rho.num_blocks(); ++l) {
    const Matrix log_rho = matrix_fn(herm_eig(rho.block(l)), [](double v) { return std::log(v); }, true);
    total += rho.algebra().weight(l) * (a_rho.block(l) * log_rho).trace().real();
  }
  return total;
}

std::vector<NamedGenerator> shipped_generators() {
  std::vector<NamedGenerator> out;
  for (int m = 2; m <= 6; ++m) out.push_back({"dephasing" + std::to_string(m), schur_semigroup(dephasing_generator(m))});
  out.push_back({"block4", schur_semigroup(block_dephasing_generator())});
  for (int m : {3, 4}) out.push_back({"sqdist" + std::to_string(m), schur_semigroup(squared_distance_generator(m))});
  for (int m : {2, 3}) out.push_back({"depolarizing" + std::to_string(m), general_semigroup(depolarizing_generator(m))});
  out.push_back({"commutator112", general_semigroup(double_commutator_generator(RealVector{{1.0, 1.0, 2.0}}))});
  return out;
}

}  // namespace subentropy

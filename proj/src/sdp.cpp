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

#include "sdp.hpp"

#include <cmath>
#include <numbers>

#include "subentropy/error.hpp"
#include "subentropy/random.hpp"

namespace subentropy::detail {

namespace {

constexpr int kMaxOuter = 60;
constexpr int kMaxNewton = 200;
constexpr double kGrowth = 10.0;

// Orthonormal Hermitian basis per sub block: E_aa, (E_ab + E_ba)/√2,
// i(E_ab − E_ba)/√2 for a < b.
struct Coordinates {
  std::vector<int> sizes;
  std::vector<int> offsets;
  int total = 0;

  explicit Coordinates(const DirectSumAlgebra& sub) {
    for (const Block& b : sub.blocks()) {
      offsets.push_back(total);
      sizes.push_back(b.dim * b.dim);
      total += b.dim * b.dim;
    }
  }

  AlgebraElement element(const DirectSumAlgebra& sub, const Eigen::VectorXd& y) const {
    AlgebraElement out = AlgebraElement::zero(sub);
    for (int k = 0; k < sub.num_blocks(); ++k) {
      const int n = sub.dim(k);
      const double* v = y.data() + offsets[k];
      Matrix& m = out.block(k);
      for (int a = 0; a < n; ++a) m(a, a) = *v++;
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
          const cplx z = cplx(v[0], v[1]) / std::numbers::sqrt2;
          m(a, b) = z;
          m(b, a) = std::conj(z);
          v += 2;
        }
    }
    return out;
  }

  // Coordinates of Tr(B_j · h) for Hermitian h.
  Eigen::VectorXd pair(const std::vector<Matrix>& h) const {
    Eigen::VectorXd out(total);
    for (std::size_t k = 0; k < h.size(); ++k) {
      const Matrix& m = h[k];
      const auto n = m.rows();
      double* v = out.data() + offsets[k];
      for (Eigen::Index a = 0; a < n; ++a) *v++ = m(a, a).real();
      for (Eigen::Index a = 0; a < n; ++a)
        for (Eigen::Index b = a + 1; b < n; ++b) {
          v[0] = std::numbers::sqrt2 * m(a, b).real();
          v[1] = std::numbers::sqrt2 * m(a, b).imag();
          v += 2;
        }
    }
    return out;
  }
};

// Unweighted sum of the slot sub-blocks: the adjoint of ι for the plain
// Hilbert–Schmidt pairing.
std::vector<Matrix> compress(const Inclusion& inc, const std::vector<Matrix>& amb) {
  std::vector<Matrix> out;
  for (int k = 0; k < inc.num_sub_blocks(); ++k) {
    const int n = inc.sub().dim(k);
    Matrix acc = Matrix::Zero(n, n);
    for (int l = 0; l < inc.num_amb_blocks(); ++l)
      for (int i = 0; i < inc.multiplicity(k, l); ++i) {
        const int r = inc.slot_offset(k, l) + i * n;
        acc += amb[l].block(r, r, n, n);
      }
    out.push_back(hermitian_part(acc));
  }
  return out;
}

struct State {
  bool feasible = false;
  double phi = 0.0;
  std::vector<Matrix> f_inverse;
};

class Barrier {
 public:
  Barrier(const Density& rho, const Inclusion& inc) : rho_(rho), inc_(inc), coords_(inc.sub()) {
    cost_ = Eigen::VectorXd::Zero(coords_.total);
    for (int k = 0; k < inc.num_sub_blocks(); ++k)
      for (int a = 0; a < inc.sub().dim(k); ++a) cost_(coords_.offsets[k] + a) = inc.sub().weight(k);
    for (const Block& b : inc.amb().blocks()) nu_ += b.dim;
  }

  const Coordinates& coords() const { return coords_; }
  const Eigen::VectorXd& cost() const { return cost_; }
  double nu() const { return nu_; }

  State state(const Eigen::VectorXd& y, double t, bool want_inverse) const {
    State s;
    const AlgebraElement big = embed(inc_, coords_.element(inc_.sub(), y));
    double logdet = 0.0;
    for (int l = 0; l < inc_.num_amb_blocks(); ++l) {
      const Matrix f = big.block(l) - rho_.block(l);
      Eigen::LLT<Matrix> llt(f);
      if (llt.info() != Eigen::Success) return s;
      const auto diag = llt.matrixLLT().diagonal().real();
      for (Eigen::Index i = 0; i < diag.size(); ++i) {
        if (!(diag(i) > 0.0)) return s;
        logdet += 2.0 * std::log(diag(i));
      }
      if (want_inverse) s.f_inverse.push_back(llt.solve(Matrix::Identity(f.rows(), f.cols())));
    }
    s.feasible = true;
    s.phi = t * cost_.dot(y) - logdet;
    return s;
  }

  Eigen::VectorXd gradient(const State& s, double t) const {
    return t * cost_ - coords_.pair(compress(inc_, s.f_inverse));
  }

  Eigen::MatrixXd hessian(const State& s) const {
    const int d = coords_.total;
    Eigen::MatrixXd h(d, d);
    for (int j = 0; j < d; ++j) {
      Eigen::VectorXd e = Eigen::VectorXd::Zero(d);
      e(j) = 1.0;
      const AlgebraElement b = embed(inc_, coords_.element(inc_.sub(), e));
      std::vector<Matrix> m;
      for (int l = 0; l < inc_.num_amb_blocks(); ++l) m.push_back(s.f_inverse[l] * b.block(l) * s.f_inverse[l]);
      h.col(j) = coords_.pair(compress(inc_, m));
    }
    return 0.5 * (h + h.transpose());
  }

 private:
  const Density& rho_;
  const Inclusion& inc_;
  Coordinates coords_;
  Eigen::VectorXd cost_;
  double nu_ = 0.0;
};

}  // namespace

BarrierResult solve_linf_sdp(const Density& rho, const Inclusion& inc, double relative_gap, std::uint64_t seed) {
  require_same_algebra(rho.algebra(), inc.amb(), "divergence_to_subalgebra");
  Barrier barrier(rho, inc);
  const Coordinates& coords = barrier.coords();
  double top = 0.0;
  for (int l = 0; l < rho.num_blocks(); ++l) top = std::max(top, herm_eig(rho.block(l)).eigenvalues.maxCoeff());
  const double scale = 2.0 * top + 1e-3;
  AlgebraElement y0 = AlgebraElement::identity(inc.sub()) * scale;
  if (seed != 0) {
    const AlgebraElement h = random_hermitian(inc.sub(), seed);
    double norm = 0.0;
    for (const Matrix& m : h.blocks()) norm = std::max(norm, herm_eig(m).eigenvalues.cwiseAbs().maxCoeff());
    if (norm > 0.0) y0 += h * (0.4 * scale / norm);
  }
  Eigen::VectorXd y = coords.pair(y0.blocks());
  double t = barrier.nu() / barrier.cost().dot(y);
  int newton_steps = 0;
  for (int outer = 0; outer < kMaxOuter; ++outer) {
    State s = barrier.state(y, t, true);
    if (!s.feasible) fail(ErrorKind::Internal, "barrier iterate left the feasible region");
    for (int it = 0; it < kMaxNewton; ++it) {
      const Eigen::VectorXd g = barrier.gradient(s, t);
      const Eigen::MatrixXd hess = barrier.hessian(s);
      const Eigen::VectorXd step = -hess.ldlt().solve(g);
      const double decrement = -g.dot(step);
      ++newton_steps;
      if (!(decrement > 1e-14)) break;
      double alpha = 1.0;
      bool accepted = false;
      while (alpha > 1e-14) {
        const Eigen::VectorXd trial = y + alpha * step;
        State next = barrier.state(trial, t, true);
        if (next.feasible && (decrement < 1e-8 || next.phi <= s.phi - 0.25 * alpha * decrement)) {
          y = trial;
          s = std::move(next);
          accepted = true;
          break;
        }
        alpha *= 0.5;
      }
      if (!accepted || decrement < 1e-12) break;
    }
    const double objective = barrier.cost().dot(y);
    if (barrier.nu() / t <= relative_gap * objective) break;
    t *= kGrowth;
  }
  BarrierResult out{coords.element(inc.sub(), y), barrier.cost().dot(y), barrier.nu() / t, newton_steps};
  return out;
}

}  // namespace subentropy::detail

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

#include "objective.hpp"

#include <cmath>

#include "subentropy/error.hpp"
#include "subentropy/random.hpp"

namespace subentropy::detail {

namespace {

constexpr double kSpectrumFloor = 1e-300;

double power(double x, double e) { return std::pow(x, e); }
double power_derivative(double x, double e) { return e * std::pow(x, e - 1.0); }

}  // namespace

RealMatrix divided_differences(const RealVector& lam, double (*f)(double, double), double (*df)(double, double),
                               double param) {
  const auto n = lam.size();
  RealMatrix gamma(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double a = lam(i);
      const double b = lam(j);
      if (std::abs(a - b) > 1e-8 * std::max(std::abs(a), std::abs(b))) {
        gamma(i, j) = (f(a, param) - f(b, param)) / (a - b);
      } else {
        gamma(i, j) = df(0.5 * (a + b), param);
      }
    }
  }
  return gamma;
}

SandwichedObjective::SandwichedObjective(const Density& rho, const Inclusion& inc, double p)
    : inc_(inc), p_(p), beta_(1.0 - 1.0 / p) {
  require_same_algebra(rho.algebra(), inc.amb(), "divergence_to_subalgebra");
  const AlgebraElement e = conditional_expectation(inc, rho.element());
  int offset = 0;
  for (int k = 0; k < inc.num_sub_blocks(); ++k) {
    const EigenSystem es = herm_eig(hermitian_part(e.block(k)));
    const double cut = support_threshold(es.eigenvalues.maxCoeff());
    SubBlock b;
    b.n = inc.sub().dim(k);
    b.s = inc.sub().weight(k);
    for (Eigen::Index i = 0; i < es.eigenvalues.size(); ++i)
      if (es.eigenvalues(i) > cut) ++b.r;
    b.basis = es.frame.rightCols(b.r);
    b.offset = offset;
    offset += 2 * b.r * b.r;
    sub_.push_back(std::move(b));
  }
  num_parameters_ = offset;
  for (int l = 0; l < inc.num_amb_blocks(); ++l) {
    AmbBlock a;
    a.t = inc.amb().weight(l);
    const Matrix root = support_power(herm_eig(rho.block(l)), 0.5);
    for (int k = 0; k < inc.num_sub_blocks(); ++k)
      for (int i = 0; i < inc.multiplicity(k, l); ++i) {
        a.slots.push_back({k, a.reduced_dim});
        a.reduced_dim += sub_[k].r;
      }
    a.c = Matrix::Zero(inc.amb().dim(l), a.reduced_dim);
    int slot = 0;
    for (int k = 0; k < inc.num_sub_blocks(); ++k) {
      const int n = sub_[k].n;
      for (int i = 0; i < inc.multiplicity(k, l); ++i, ++slot) {
        const int row = inc.slot_offset(k, l) + i * n;
        a.c.middleCols(a.slots[slot].offset, sub_[k].r) = root.middleCols(row, n) * sub_[k].basis;
      }
    }
    amb_.push_back(std::move(a));
  }
}

Matrix SandwichedObjective::block_of(const double* x, const SubBlock& b) const {
  Matrix w(b.r, b.r);
  const double* v = x + b.offset;
  for (int j = 0; j < b.r; ++j)
    for (int i = 0; i < b.r; ++i, v += 2) w(i, j) = cplx(v[0], v[1]);
  return w;
}

double SandwichedObjective::trace_weight(const double* x) const {
  double c = 0.0;
  for (const SubBlock& b : sub_) c += b.s * block_of(x, b).squaredNorm();
  return c;
}

bool SandwichedObjective::evaluate(const double* x, double* value, double* gradient) const {
  const double c = trace_weight(x);
  if (!(c > 0.0) || !std::isfinite(c)) return false;
  const std::size_t K = sub_.size();
  std::vector<Matrix> w(K), frame(K), xk(K), sig(K);
  std::vector<RealVector> lam(K);
  for (std::size_t k = 0; k < K; ++k) {
    if (sub_[k].r == 0) continue;
    w[k] = block_of(x, sub_[k]);
    sig[k] = w[k] * w[k].adjoint() / c;
    EigenSystem es = herm_eig(sig[k]);
    if (beta_ > 0.0) {
      if (!(es.eigenvalues.minCoeff() > kSpectrumFloor)) return false;
    } else {
      es.eigenvalues = es.eigenvalues.cwiseMax(kSpectrumFloor);
    }
    const RealVector g = es.eigenvalues.unaryExpr([this](double v) { return std::pow(v, -beta_); });
    xk[k] = es.frame * g.asDiagonal() * es.frame.adjoint();
    frame[k] = std::move(es.frame);
    lam[k] = std::move(es.eigenvalues);
  }
  double f = 0.0;
  std::vector<Matrix> pk(K);
  if (gradient != nullptr)
    for (std::size_t k = 0; k < K; ++k) pk[k] = Matrix::Zero(sub_[k].r, sub_[k].r);
  for (const AmbBlock& a : amb_) {
    Matrix d = Matrix::Zero(a.reduced_dim, a.reduced_dim);
    for (const Slot& s : a.slots) d.block(s.offset, s.offset, sub_[s.k].r, sub_[s.k].r) = xk[s.k];
    const Matrix y = a.c * d * a.c.adjoint();
    const EigenSystem ey = herm_eig(y);
    const RealVector mu = ey.eigenvalues.cwiseMax(0.0);
    f += a.t * mu.array().pow(p_).sum();
    if (gradient != nullptr) {
      const double cut = support_threshold(mu.maxCoeff());
      RealVector mp(mu.size());
      for (Eigen::Index i = 0; i < mu.size(); ++i) mp(i) = mu(i) > cut ? std::pow(mu(i), p_ - 1.0) : 0.0;
      const Matrix vc = ey.frame.adjoint() * a.c;
      const Matrix z = vc.adjoint() * mp.asDiagonal() * vc;
      for (const Slot& s : a.slots) pk[s.k] += a.t * z.block(s.offset, s.offset, sub_[s.k].r, sub_[s.k].r);
    }
  }
  if (!(f > 0.0) || !std::isfinite(f)) return false;
  *value = std::log(f) / (p_ - 1.0);
  if (gradient == nullptr) return true;
  std::vector<Matrix> gk(K);
  double h = 0.0;
  for (std::size_t k = 0; k < K; ++k) {
    if (sub_[k].r == 0) continue;
    const RealMatrix gamma = divided_differences(lam[k], power, power_derivative, -beta_);
    const Matrix m = frame[k].adjoint() * pk[k] * frame[k];
    gk[k] = frame[k] * m.cwiseProduct(gamma.cast<cplx>()) * frame[k].adjoint();
    h += (gk[k] * sig[k]).trace().real();
  }
  const double scale = 2.0 * p_ / (c * (p_ - 1.0) * f);
  for (std::size_t k = 0; k < K; ++k) {
    const SubBlock& b = sub_[k];
    if (b.r == 0) continue;
    const Matrix grad = scale * (gk[k] * w[k] - h * b.s * w[k]);
    double* g = gradient + b.offset;
    for (int j = 0; j < b.r; ++j)
      for (int i = 0; i < b.r; ++i, g += 2) {
        g[0] = grad(i, j).real();
        g[1] = grad(i, j).imag();
      }
  }
  return true;
}

AlgebraElement SandwichedObjective::sigma(const double* x) const {
  const double c = trace_weight(x);
  AlgebraElement out = AlgebraElement::zero(inc_.sub());
  for (std::size_t k = 0; k < sub_.size(); ++k) {
    const SubBlock& b = sub_[k];
    if (b.r == 0) continue;
    const Matrix bw = b.basis * block_of(x, b);
    out.block(static_cast<int>(k)) = hermitian_part(bw * bw.adjoint() / c);
  }
  return out;
}

std::vector<double> SandwichedObjective::sqrt_start(const AlgebraElement& sigma_sub) const {
  std::vector<double> x(static_cast<std::size_t>(num_parameters_));
  for (std::size_t k = 0; k < sub_.size(); ++k) {
    const SubBlock& b = sub_[k];
    if (b.r == 0) continue;
    const Matrix reduced = hermitian_part(b.basis.adjoint() * sigma_sub.block(static_cast<int>(k)) * b.basis);
    const Matrix w = support_power(herm_eig(reduced), 0.5);
    double* v = x.data() + b.offset;
    for (int j = 0; j < b.r; ++j)
      for (int i = 0; i < b.r; ++i, v += 2) {
        v[0] = w(i, j).real();
        v[1] = w(i, j).imag();
      }
  }
  normalize(x);
  return x;
}

std::vector<double> SandwichedObjective::random_start(std::uint64_t seed) const {
  GaussianSource source(seed);
  std::vector<double> x(static_cast<std::size_t>(num_parameters_));
  for (double& v : x) v = source.normal();
  normalize(x);
  return x;
}

void SandwichedObjective::normalize(std::vector<double>& x) const {
  const double c = trace_weight(x.data());
  if (!(c > 0.0)) return;
  const double scale = 1.0 / std::sqrt(c);
  for (double& v : x) v *= scale;
}

double SandwichedObjective::residual(std::vector<double> x) const {
  normalize(x);
  std::vector<double> g(x.size());
  double value = 0.0;
  if (!evaluate(x.data(), &value, g.data())) return std::numeric_limits<double>::infinity();
  double r = 0.0;
  for (double v : g) r = std::max(r, std::abs(v));
  return r;
}

}  // namespace subentropy::detail

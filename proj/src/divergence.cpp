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

#include "subentropy/divergence.hpp"

#include <cmath>

#include "subentropy/error.hpp"

namespace subentropy {

namespace {

constexpr double kNearOneGuard = 1e-9;
constexpr double kClampTolerance = 1e-9;

double sum_log(const RealVector& ev) {
  const double cut = support_threshold(ev.maxCoeff());
  double total = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (ev(i) > cut) total += ev(i) * std::log(ev(i));
  return total;
}

}  // namespace

RenyiOrder::RenyiOrder(double p) : p_(p) {
  if (std::isnan(p) || p < 0.5) fail(ErrorKind::InvalidOrder, "order must lie in [1/2, inf]");
  if (p != 1.0 && std::abs(p - 1.0) <= kNearOneGuard) {
    fail(ErrorKind::InvalidOrder, "order within 1e-9 of 1; use p = 1 for the Umegaki divergence");
  }
}

double RenyiOrder::conjugate() const {
  if (is_infinite()) return 1.0;
  if (is_umegaki()) return std::numeric_limits<double>::infinity();
  return p_ / (p_ - 1.0);
}

double RenyiOrder::q() const {
  if (is_infinite()) return 0.5;
  return p_ / (2.0 * p_ - 1.0);
}

double RenyiOrder::r() const {
  if (p_ >= 1.0) fail(ErrorKind::InvalidOrder, "r is defined for p < 1");
  return 2.0 * p_ / (1.0 - p_);
}

DivergenceValue::DivergenceValue(double v) : v_(v) {
  if (std::isnan(v)) fail(ErrorKind::Internal, "divergence evaluated to NaN");
  if (v < 0.0) {
    if (v < -kClampTolerance) fail(ErrorKind::Internal, "negative divergence " + std::to_string(v));
    v_ = 0.0;
  }
}

bool support_contained(const Density& rho, const Density& sigma) {
  require_same_algebra(rho.algebra(), sigma.algebra(), "support comparison");
  for (int l = 0; l < rho.num_blocks(); ++l) {
    const EigenSystem es = herm_eig(sigma.block(l));
    const Matrix complement = Matrix::Identity(es.frame.rows(), es.frame.cols()) - support_projection(es);
    const Matrix outside = complement * rho.block(l) * complement;
    const double rho_max = herm_eig(rho.block(l)).eigenvalues.maxCoeff();
    if (herm_eig(hermitian_part(outside)).eigenvalues.maxCoeff() > support_threshold(rho_max)) return false;
  }
  return true;
}

DivergenceValue umegaki(const Density& rho, const Density& sigma) {
  require_same_algebra(rho.algebra(), sigma.algebra(), "umegaki");
  if (!support_contained(rho, sigma)) return DivergenceValue::infinite();
  double total = 0.0;
  for (int l = 0; l < rho.num_blocks(); ++l) {
    const double t = rho.algebra().weight(l);
    const Matrix log_sigma = matrix_fn(herm_eig(sigma.block(l)), [](double x) { return std::log(x); }, true);
    total += t * (sum_log(herm_eig(rho.block(l)).eigenvalues) - (rho.block(l) * log_sigma).trace().real());
  }
  return DivergenceValue(total);
}

DivergenceValue sandwiched_renyi(const Density& rho, const Density& sigma, RenyiOrder order) {
  require_same_algebra(rho.algebra(), sigma.algebra(), "sandwiched_renyi");
  if (order.is_umegaki()) return umegaki(rho, sigma);
  const double p = order.p();
  if (p > 1.0 && !support_contained(rho, sigma)) return DivergenceValue::infinite();
  // σ^{-1/(2p')} with 1/p' = 1 − 1/p.
  const double exponent = order.is_infinite() ? -0.5 : -(1.0 - 1.0 / p) / 2.0;
  double total = 0.0;
  for (int l = 0; l < rho.num_blocks(); ++l) {
    const Matrix s = support_power(herm_eig(sigma.block(l)), exponent);
    RealVector ev = herm_eig(hermitian_part(s * rho.block(l) * s)).eigenvalues.cwiseMax(0.0);
    const double floor = kSupportCutoff * std::max(1.0, ev.maxCoeff());
    ev = ev.unaryExpr([floor](double v) { return v > floor ? v : 0.0; });
    if (order.is_infinite()) {
      total = std::max(total, ev.maxCoeff());
    } else {
      total += rho.algebra().weight(l) * ev.array().pow(p).sum();
    }
  }
  if (!(total > 0.0)) return DivergenceValue::infinite();
  return DivergenceValue(order.is_infinite() ? std::log(total) : std::log(total) / (p - 1.0));
}

DivergenceValue petz_renyi(const Density& rho, const Density& sigma, RenyiOrder order) {
  require_same_algebra(rho.algebra(), sigma.algebra(), "petz_renyi");
  if (order.is_umegaki()) return umegaki(rho, sigma);
  if (order.is_infinite()) fail(ErrorKind::InvalidOrder, "Petz divergence needs a finite order");
  const double p = order.p();
  if (p > 1.0 && !support_contained(rho, sigma)) return DivergenceValue::infinite();
  double total = 0.0;
  for (int l = 0; l < rho.num_blocks(); ++l) {
    const Matrix a = support_power(herm_eig(rho.block(l)), p);
    const Matrix b = support_power(herm_eig(sigma.block(l)), 1.0 - p);
    total += rho.algebra().weight(l) * (a * b).trace().real();
  }
  if (!(total > 0.0)) return DivergenceValue::infinite();
  return DivergenceValue(std::log(total) / (p - 1.0));
}

double trace_distance(const Density& rho, const Density& sigma) {
  require_same_algebra(rho.algebra(), sigma.algebra(), "trace_distance");
  double total = 0.0;
  for (int l = 0; l < rho.num_blocks(); ++l) {
    const RealVector ev = herm_eig(hermitian_part(rho.block(l) - sigma.block(l))).eigenvalues;
    total += rho.algebra().weight(l) * ev.cwiseAbs().sum();
  }
  return total;
}

double vn_entropy(const Density& rho) {
  double total = 0.0;
  for (int l = 0; l < rho.num_blocks(); ++l) total -= rho.algebra().weight(l) * sum_log(herm_eig(rho.block(l)).eigenvalues);
  return total;
}

}  // namespace subentropy

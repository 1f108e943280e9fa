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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unsupported/Eigen/KroneckerProduct>

#include "markov_detail.hpp"
#include "subentropy/error.hpp"
#include "subentropy/random.hpp"

namespace subentropy {

namespace {

constexpr double kSelfAdjointTolerance = 1e-9;
constexpr double kUnitalTolerance = 1e-9;
constexpr double kChoiTolerance = 1e-8;
constexpr double kClosureTolerance = 1e-8;
constexpr std::uint64_t kStructureSeed = 0x5eed;

// Offsets of each block inside the vectorization.
std::vector<int> vector_offsets(const DirectSumAlgebra& alg) {
  std::vector<int> out;
  int acc = 0;
  for (const Block& b : alg.blocks()) {
    out.push_back(acc);
    acc += b.dim * b.dim;
  }
  return out;
}

void check_choi(const DirectSumAlgebra& alg, const Matrix& t_mat) {
  const std::vector<int> off = vector_offsets(alg);
  for (int l = 0; l < alg.num_blocks(); ++l) {
    const int m = alg.dim(l);
    for (int lp = 0; lp < alg.num_blocks(); ++lp) {
      const int mp = alg.dim(lp);
      Matrix choi(m * mp, m * mp);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          for (int a = 0; a < mp; ++a)
            for (int b = 0; b < mp; ++b) choi(i * mp + a, j * mp + b) = t_mat(off[lp] + a + b * mp, off[l] + i + j * m);
      if (!is_psd(hermitian_part(choi), kChoiTolerance)) {
        fail(ErrorKind::InvalidGenerator, "e^{-tA} is not completely positive");
      }
    }
  }
}

// Hermitian elements spanning the same complex space, orthonormal for the
// weighted trace. Returns false if the span is not closed under adjoints.
bool hermitian_basis(const DirectSumAlgebra& alg, const std::vector<AlgebraElement>& span,
                     std::vector<AlgebraElement>* out) {
  const RealVector sw = detail::vector_weights(alg).cwiseSqrt();
  const Eigen::Index d = sw.size();
  RealMatrix cols(2 * d, 2 * static_cast<Eigen::Index>(span.size()));
  for (std::size_t i = 0; i < span.size(); ++i) {
    const AlgebraElement re = (span[i] + span[i].adjoint()) * 0.5;
    const AlgebraElement im = (span[i] - span[i].adjoint()) * cplx(0.0, -0.5);
    for (int part = 0; part < 2; ++part) {
      const Eigen::VectorXcd v = (part == 0 ? re : im).vectorize().cwiseProduct(sw.cast<cplx>());
      cols.col(2 * i + part) << v.real(), v.imag();
    }
  }
  Eigen::BDCSVD<RealMatrix> svd(cols, Eigen::ComputeThinU);
  const RealVector& sv = svd.singularValues();
  const double cut = 1e-8 * std::max(1.0, sv.size() > 0 ? sv(0) : 0.0);
  int rank = 0;
  while (rank < sv.size() && sv(rank) > cut) ++rank;
  if (rank != static_cast<int>(span.size())) return false;
  out->clear();
  for (int r = 0; r < rank; ++r) {
    const Eigen::VectorXcd v =
        (svd.matrixU().col(r).head(d).cast<cplx>() + cplx(0.0, 1.0) * svd.matrixU().col(r).tail(d).cast<cplx>())
            .cwiseQuotient(sw.cast<cplx>());
    AlgebraElement h = AlgebraElement::unvectorize(alg, v);
    for (int l = 0; l < h.num_blocks(); ++l) h.block(l) = hermitian_part(h.block(l));
    out->push_back(h);
  }
  return true;
}

AlgebraElement project(const std::vector<AlgebraElement>& basis, const AlgebraElement& x) {
  AlgebraElement out = AlgebraElement::zero(x.algebra());
  for (const AlgebraElement& h : basis) out += h * inner_product(h, x);
  return out;
}

AlgebraElement random_combination(const std::vector<AlgebraElement>& basis, GaussianSource& source, bool complex) {
  AlgebraElement out = AlgebraElement::zero(basis.front().algebra());
  for (const AlgebraElement& h : basis) out += h * (complex ? source.complex_normal() : cplx(source.normal(), 0.0));
  return out;
}

struct Cluster {
  std::vector<int> blocks;  // amb block of each vector
  std::vector<Eigen::VectorXcd> vectors;
};

// Groups (block, eigenvector) pairs by eigenvalue across blocks.
std::vector<Cluster> cluster_spectrum(const std::vector<std::pair<RealVector, Matrix>>& per_block) {
  struct Entry {
    double value;
    int block;
    int column;
  };
  std::vector<Entry> entries;
  double spread = 0.0;
  for (std::size_t l = 0; l < per_block.size(); ++l)
    for (Eigen::Index i = 0; i < per_block[l].first.size(); ++i) {
      entries.push_back({per_block[l].first(i), static_cast<int>(l), static_cast<int>(i)});
      spread = std::max(spread, std::abs(per_block[l].first(i)));
    }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.value < b.value; });
  const double tol = 1e-6 * std::max(1.0, spread);
  std::vector<Cluster> out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i == 0 || entries[i].value - entries[i - 1].value > tol) out.emplace_back();
    out.back().blocks.push_back(entries[i].block);
    out.back().vectors.push_back(per_block[entries[i].block].second.col(entries[i].column));
  }
  return out;
}

AlgebraElement cluster_projection(const DirectSumAlgebra& alg, const Cluster& c) {
  AlgebraElement p = AlgebraElement::zero(alg);
  for (std::size_t i = 0; i < c.vectors.size(); ++i) p.block(c.blocks[i]) += c.vectors[i] * c.vectors[i].adjoint();
  return p;
}

// First global coordinate on the diagonal of a projection.
int first_support_index(const AlgebraElement& p) {
  int base = 0;
  for (int l = 0; l < p.num_blocks(); ++l) {
    for (Eigen::Index i = 0; i < p.block(l).rows(); ++i)
      if (p.block(l)(i, i).real() > 1e-6) return base + static_cast<int>(i);
    base += static_cast<int>(p.block(l).rows());
  }
  return base;
}

struct Summand {
  int order_key;
  int dim;
  std::vector<int> multiplicity;               // per amb block
  std::vector<std::vector<Matrix>> columns;    // per amb block: the frame columns, copy-major
};

std::optional<FixedPointAlgebra> decompose(const DirectSumAlgebra& alg, const std::vector<AlgebraElement>& kernel,
                                           std::string* note) {
  std::vector<AlgebraElement> basis;
  if (!hermitian_basis(alg, kernel, &basis)) {
    *note = "kernel is not closed under adjoints";
    return std::nullopt;
  }
  const AlgebraElement one = AlgebraElement::identity(alg);
  const double unit_scale = std::max(1.0, one.max_abs());
  if ((one - project(basis, one)).max_abs() > kClosureTolerance * unit_scale) {
    *note = "kernel does not contain the identity";
    return std::nullopt;
  }
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j) {
      const AlgebraElement prod = basis[i] * basis[j];
      if ((prod - project(basis, prod)).max_abs() > kClosureTolerance * std::max(1.0, prod.max_abs())) {
        *note = "kernel is not closed under multiplication";
        return std::nullopt;
      }
    }
  // Center: real combinations commuting with every basis element.
  const int r = static_cast<int>(basis.size());
  RealMatrix gram = RealMatrix::Zero(r, r);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    std::vector<Eigen::VectorXcd> comm;
    for (int i = 0; i < r; ++i) comm.push_back((basis[i] * basis[j] - basis[j] * basis[i]).vectorize());
    for (int a = 0; a < r; ++a)
      for (int b = a; b < r; ++b) {
        const double v = (comm[a].adjoint() * comm[b]).value().real();
        gram(a, b) += v;
        if (a != b) gram(b, a) += v;
      }
  }
  Eigen::SelfAdjointEigenSolver<RealMatrix> ges(gram);
  const double gram_cut = 1e-10 * std::max(1.0, ges.eigenvalues().cwiseAbs().maxCoeff());
  std::vector<RealVector> center;
  for (int i = 0; i < r; ++i)
    if (ges.eigenvalues()(i) <= gram_cut) center.push_back(ges.eigenvectors().col(i));
  GaussianSource source(kStructureSeed);
  AlgebraElement z = AlgebraElement::zero(alg);
  for (const RealVector& c : center) {
    const double g = source.normal();
    for (int i = 0; i < r; ++i) z += basis[i] * cplx(g * c(i), 0.0);
  }
  std::vector<std::pair<RealVector, Matrix>> zspec;
  for (int l = 0; l < alg.num_blocks(); ++l) {
    const EigenSystem es = herm_eig(hermitian_part(z.block(l)));
    zspec.emplace_back(es.eigenvalues, es.frame);
  }
  const std::vector<Cluster> central = cluster_spectrum(zspec);
  if (central.size() != center.size()) {
    *note = "central projections could not be separated";
    return std::nullopt;
  }
  std::vector<Summand> summands;
  for (const Cluster& cc : central) {
    const AlgebraElement pc = cluster_projection(alg, cc);
    const AlgebraElement h = pc * random_combination(basis, source, false) * pc;
    // Spectrum of h on the range of pc.
    std::vector<std::pair<RealVector, Matrix>> hspec;
    for (int l = 0; l < alg.num_blocks(); ++l) {
      std::vector<Eigen::VectorXcd> range;
      for (std::size_t i = 0; i < cc.vectors.size(); ++i)
        if (cc.blocks[i] == l) range.push_back(cc.vectors[i]);
      Matrix q(alg.dim(l), static_cast<Eigen::Index>(range.size()));
      for (std::size_t i = 0; i < range.size(); ++i) q.col(static_cast<Eigen::Index>(i)) = range[i];
      if (range.empty()) {
        hspec.emplace_back(RealVector(0), Matrix(alg.dim(l), 0));
        continue;
      }
      const EigenSystem es = herm_eig(hermitian_part(q.adjoint() * h.block(l) * q));
      hspec.emplace_back(es.eigenvalues, q * es.frame);
    }
    const std::vector<Cluster> minimal = cluster_spectrum(hspec);
    const int d = static_cast<int>(minimal.size());
    const AlgebraElement e1 = cluster_projection(alg, minimal.front());
    const AlgebraElement k = random_combination(basis, source, true);
    std::vector<AlgebraElement> units;
    for (const Cluster& mc : minimal) {
      const AlgebraElement u = cluster_projection(alg, mc) * k * e1;
      double num = 0.0, den = 0.0;
      for (int l = 0; l < alg.num_blocks(); ++l) {
        num += (u.block(l).adjoint() * u.block(l)).trace().real();
        den += e1.block(l).trace().real();
      }
      const double c = num / den;
      if (!(c > 1e-12)) {
        *note = "matrix units degenerate";
        return std::nullopt;
      }
      units.push_back(u * (1.0 / std::sqrt(c)));
    }
    Summand s{first_support_index(pc), d, {}, {}};
    for (int l = 0; l < alg.num_blocks(); ++l) {
      std::vector<Eigen::VectorXcd> f;
      for (std::size_t i = 0; i < minimal.front().vectors.size(); ++i)
        if (minimal.front().blocks[i] == l) f.push_back(minimal.front().vectors[i]);
      s.multiplicity.push_back(static_cast<int>(f.size()));
      std::vector<Matrix> cols;
      for (const Eigen::VectorXcd& fj : f) {
        Matrix copy(alg.dim(l), d);
        for (int i = 0; i < d; ++i) copy.col(i) = units[i].block(l) * fj;
        cols.push_back(copy);
      }
      s.columns.push_back(std::move(cols));
    }
    summands.push_back(std::move(s));
  }
  std::sort(summands.begin(), summands.end(), [](const Summand& a, const Summand& b) { return a.order_key < b.order_key; });
  RawInclusion raw;
  raw.normalize = false;
  raw.amb = alg.blocks();
  for (const Summand& s : summands) {
    double w = 0.0;
    for (int l = 0; l < alg.num_blocks(); ++l) w += s.multiplicity[l] * alg.weight(l);
    raw.sub.push_back({s.dim, w});
    raw.a.push_back(s.multiplicity);
  }
  std::vector<Matrix> frames;
  for (int l = 0; l < alg.num_blocks(); ++l) {
    Matrix v(alg.dim(l), 0);
    for (const Summand& s : summands)
      for (const Matrix& copy : s.columns[l]) {
        Matrix grown(v.rows(), v.cols() + copy.cols());
        grown << v, copy;
        v = std::move(grown);
      }
    if (v.cols() != alg.dim(l) ||
        max_abs(v.adjoint() * v - Matrix::Identity(alg.dim(l), alg.dim(l))) > kClosureTolerance * 100) {
      *note = "frame is not unitary";
      return std::nullopt;
    }
    frames.push_back(std::move(v));
  }
  return FixedPointAlgebra{validate_inclusion(raw), std::move(frames)};
}

}  // namespace

namespace detail {

double GeneratorSpectrum::cutoff() const {
  return support_threshold(eigenvalues.size() > 0 ? eigenvalues.cwiseAbs().maxCoeff() : 0.0);
}

Matrix GeneratorSpectrum::evolution(double t) const {
  const RealVector decay = (-t * eigenvalues.array()).exp();
  return sqrt_weights.cwiseInverse().asDiagonal() * (frame * decay.asDiagonal() * frame.adjoint()) *
         sqrt_weights.asDiagonal();
}

Matrix GeneratorSpectrum::kernel_projection() const {
  const double cut = cutoff();
  RealVector mask(eigenvalues.size());
  for (Eigen::Index i = 0; i < mask.size(); ++i) mask(i) = eigenvalues(i) <= cut ? 1.0 : 0.0;
  return sqrt_weights.cwiseInverse().asDiagonal() * (frame * mask.asDiagonal() * frame.adjoint()) *
         sqrt_weights.asDiagonal();
}

GeneratorSpectrum generator_spectrum(const DirectSumAlgebra& algebra, const Matrix& superoperator) {
  const RealVector sw = vector_weights(algebra).cwiseSqrt();
  const Matrix tilde = sw.asDiagonal() * superoperator * sw.cwiseInverse().asDiagonal();
  const EigenSystem es = herm_eig(hermitian_part(tilde));
  return {es.eigenvalues, es.frame, sw};
}

Matrix superoperator_of(const DirectSumAlgebra& algebra,
                        const std::function<AlgebraElement(const AlgebraElement&)>& f) {
  const int d = algebra.vectorized_dim();
  Matrix out(d, d);
  for (int c = 0; c < d; ++c) {
    Eigen::VectorXcd e = Eigen::VectorXcd::Zero(d);
    e(c) = 1.0;
    out.col(c) = f(AlgebraElement::unvectorize(algebra, e)).vectorize();
  }
  return out;
}

}  // namespace detail

GeneralGenerator::GeneralGenerator(DirectSumAlgebra algebra, Matrix superoperator)
    : algebra_(std::move(algebra)), a_(std::move(superoperator)) {
  const int d = algebra_.vectorized_dim();
  if (a_.rows() != d || a_.cols() != d) fail(ErrorKind::DimensionMismatch, "superoperator size must be Σ m_l²");
  if (!a_.allFinite()) fail(ErrorKind::InvalidGenerator, "superoperator has non-finite entries");
  const RealVector sw = detail::vector_weights(algebra_).cwiseSqrt();
  const Matrix tilde = sw.asDiagonal() * a_ * sw.cwiseInverse().asDiagonal();
  const double scale = std::max(1.0, max_abs(tilde));
  if (max_abs(tilde - tilde.adjoint()) > kSelfAdjointTolerance * scale) {
    fail(ErrorKind::InvalidGenerator, "generator is not self-adjoint for the trace inner product");
  }
  const detail::GeneratorSpectrum spectrum = detail::generator_spectrum(algebra_, a_);
  if (spectrum.eigenvalues.size() > 0 && spectrum.eigenvalues(0) < -kSelfAdjointTolerance * scale) {
    fail(ErrorKind::InvalidGenerator, "generator is not positive on L_2");
  }
  const Eigen::VectorXcd unit = AlgebraElement::identity(algebra_).vectorize();
  if ((a_ * unit).cwiseAbs().maxCoeff() > kUnitalTolerance * scale) fail(ErrorKind::InvalidGenerator, "A(1) must vanish");
  for (double t : {0.1, 1.0}) check_choi(algebra_, spectrum.evolution(t));
}

double spectral_gap(const GeneralGenerator& gen) {
  const detail::GeneratorSpectrum spectrum = detail::generator_spectrum(gen.algebra(), gen.superoperator());
  const double cut = spectrum.cutoff();
  for (Eigen::Index i = 0; i < spectrum.eigenvalues.size(); ++i)
    if (spectrum.eigenvalues(i) > cut) return spectrum.eigenvalues(i);
  fail(ErrorKind::NoGap, "generator is zero");
}

FixedPointExpectation fixed_point_expectation(const GeneralGenerator& gen) {
  const DirectSumAlgebra& alg = gen.algebra();
  const detail::GeneratorSpectrum spectrum = detail::generator_spectrum(alg, gen.superoperator());
  FixedPointExpectation out;
  out.projection = spectrum.kernel_projection();
  const double cut = spectrum.cutoff();
  std::vector<AlgebraElement> kernel;
  for (Eigen::Index i = 0; i < spectrum.eigenvalues.size(); ++i)
    if (spectrum.eigenvalues(i) <= cut) {
      kernel.push_back(
          AlgebraElement::unvectorize(alg, spectrum.frame.col(i).cwiseQuotient(spectrum.sqrt_weights.cast<cplx>())));
    }
  out.algebra = decompose(alg, kernel, &out.note);
  if (out.algebra) {
    // The conditional expectation of the decomposition must be the projection.
    const Matrix e = detail::superoperator_of(alg, [&](const AlgebraElement& x) { return out.algebra->expectation(x); });
    if (max_abs(e - out.projection) > 1e-7) {
      out.note = "decomposition does not reproduce the kernel projection";
      out.algebra.reset();
    }
  }
  return out;
}

GeneralGenerator to_superoperator(const SchurGenerator& gen) {
  const int m = gen.dim();
  Matrix s = Matrix::Zero(m * m, m * m);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < m; ++i) s(i + j * m, i + j * m) = gen.b()(i, j);
  return GeneralGenerator(DirectSumAlgebra::matrix_algebra(m), s);
}

GeneralGenerator depolarizing_generator(int m) {
  const DirectSumAlgebra alg = DirectSumAlgebra::matrix_algebra(m);
  const Eigen::VectorXcd unit = AlgebraElement::identity(alg).vectorize();
  const Matrix s = Matrix::Identity(m * m, m * m) - unit * unit.transpose() / static_cast<double>(m);
  return GeneralGenerator(alg, s);
}

GeneralGenerator double_commutator_generator(const RealVector& l) {
  const int m = static_cast<int>(l.size());
  const Matrix d = l.cast<cplx>().asDiagonal();
  const Matrix d2 = d * d;
  const Matrix id = Matrix::Identity(m, m);
  // vec(L X R) = (Rᵀ ⊗ L) vec(X).
  const Matrix s = Eigen::kroneckerProduct(id, d2).eval() - 2.0 * Eigen::kroneckerProduct(d.transpose(), d).eval() +
                   Eigen::kroneckerProduct(d2.transpose(), id).eval();
  return GeneralGenerator(DirectSumAlgebra::matrix_algebra(m), s);
}

}  // namespace subentropy

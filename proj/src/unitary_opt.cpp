// Copyright 2026 The witopt Authors
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

#include "witopt/unitary_opt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace witopt {

namespace {

constexpr int kTaylorDegree = 18;
constexpr double kArmijo = 1e-4;
constexpr double kMinStep = 1e-14;
constexpr int kStallLimit = 25;
constexpr int kRandomCombinations = 200;
constexpr double kMaxEntangledTol = 1e-7;

double frobenius(const ComplexMatrix& m) { return m.norm(); }

ComplexMatrix skew(const ComplexMatrix& b) { return 0.5 * (b - b.adjoint()); }

// Coefficient matrix M(i, j) = <ij|v>.
ComplexMatrix coefficients(const ComplexVector& v, Dims dims) {
  ComplexMatrix m(dims.a, dims.b);
  for (int i = 0; i < dims.a; ++i) {
    for (int j = 0; j < dims.b; ++j) m(i, j) = v(i * dims.b + j);
  }
  return m;
}

ComplexVector flatten(const ComplexMatrix& m) {
  ComplexVector v(m.size());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) v(i * m.cols() + j) = m(i, j);
  }
  return v;
}

using SphereObjective = std::function<double(const ComplexVector&)>;
// Euclidean gradient g with df = Re(g^dagger dc).
using SphereGradient = std::function<ComplexVector(const ComplexVector&)>;

struct SphereRun {
  double value = 0.0;
  ComplexVector point;
  int iterations = 0;
  bool converged = false;
};

SphereRun descendOnSphere(ComplexVector c, const SphereObjective& f,
                          const SphereGradient& grad, const OptimizerConfig& cfg) {
  c.normalize();
  double fc = f(c);
  SphereRun run;
  int stall = 0;
  for (int it = 0; it < cfg.max_iterations; ++it) {
    run.iterations = it + 1;
    ComplexVector g = grad(c);
    g -= c * c.dot(g).real();  // tangent projection
    const double gnorm = g.norm();
    if (gnorm < cfg.convergence_tol) {
      run.converged = true;
      break;
    }
    double t = cfg.step_size;
    bool moved = false;
    while (t >= kMinStep) {
      ComplexVector trial = (c - t * g).normalized();
      const double ft = f(trial);
      if (ft <= fc - kArmijo * t * gnorm * gnorm) {
        stall = (fc - ft < 1e-15 * std::max(1.0, std::abs(fc))) ? stall + 1 : 0;
        c = std::move(trial);
        fc = ft;
        moved = true;
        break;
      }
      t *= 0.5;
    }
    if (!moved || stall >= kStallLimit) break;
  }
  run.value = fc;
  run.point = std::move(c);
  return run;
}

}  // namespace

void OptimizerConfig::validate() const {
  if (restarts < 1 || max_iterations < 1) {
    throw std::invalid_argument("optimizer: restarts and max_iterations must be positive");
  }
  if (!(step_size > 0.0) || !(convergence_tol > 0.0)) {
    throw std::invalid_argument("optimizer: step_size and convergence_tol must be positive");
  }
  if (!(fd_epsilon > 0.0 && fd_epsilon <= 1e-3)) {
    throw std::invalid_argument("optimizer: fd_epsilon must lie in (0, 1e-3]");
  }
}

ComplexMatrix expm(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionError("expm: matrix must be square");
  const auto n = a.rows();
  if (n == 0) return a;
  // Induced 1-norm bounds the spectral radius and all powers.
  const double norm = a.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const ComplexMatrix scaled = a / std::ldexp(1.0, squarings);
  // Horner evaluation of sum_k scaled^k / k!.
  ComplexMatrix result = ComplexMatrix::Identity(n, n);
  for (int k = kTaylorDegree; k >= 1; --k) {
    result = ComplexMatrix::Identity(n, n) + (scaled * result) / static_cast<double>(k);
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

ComplexMatrix randomUnitary(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix z(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) z(i, j) = Complex(normal(rng), normal(rng));
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

ComplexVector randomUnitVector(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexVector v(n);
  for (int i = 0; i < n; ++i) v(i) = Complex(normal(rng), normal(rng));
  return v.normalized();
}

std::uint64_t deriveSeed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<ComplexMatrix> antiHermitianBasis(int n) {
  std::vector<ComplexMatrix> basis;
  basis.reserve(static_cast<std::size_t>(n) * n);
  const double r = 1.0 / std::sqrt(2.0);
  for (int j = 0; j < n; ++j) {
    ComplexMatrix d = ComplexMatrix::Zero(n, n);
    d(j, j) = Complex(0.0, 1.0);
    basis.push_back(std::move(d));
  }
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      ComplexMatrix re = ComplexMatrix::Zero(n, n);
      re(j, k) = r;
      re(k, j) = -r;
      basis.push_back(std::move(re));
      ComplexMatrix im = ComplexMatrix::Zero(n, n);
      im(j, k) = Complex(0.0, r);
      im(k, j) = Complex(0.0, r);
      basis.push_back(std::move(im));
    }
  }
  return basis;
}

ComplexMatrix finiteDifferenceGradient(const UnitaryObjective& f,
                                       const ComplexMatrix& u, double eps) {
  const auto n = static_cast<int>(u.rows());
  ComplexMatrix g = ComplexMatrix::Zero(n, n);
  for (const ComplexMatrix& b : antiHermitianBasis(n)) {
    const double plus = f(u * expm(eps * b));
    const double minus = f(u * expm(-eps * b));
    g += ((plus - minus) / (2.0 * eps)) * b;
  }
  return g;
}

OptimizationResult minimizeOverUnitaries(int n, const UnitaryObjective& f,
                                         const UnitaryGradient& analytic,
                                         const OptimizerConfig& config,
                                         bool identity_start) {
  config.validate();
  if (n < 1) throw DimensionError("unitary dimension must be >= 1");
  const bool use_analytic =
      config.gradient_mode == GradientMode::Analytic && static_cast<bool>(analytic);
  const auto gradient = [&](const ComplexMatrix& u) {
    return use_analytic ? analytic(u) : finiteDifferenceGradient(f, u, config.fd_epsilon);
  };

  OptimizationResult result;
  result.best_value = std::numeric_limits<double>::infinity();
  for (int r = 0; r < config.restarts; ++r) {
    std::mt19937_64 rng(deriveSeed(config.seed, static_cast<std::uint64_t>(r)));
    ComplexMatrix u = (identity_start && r == 0) ? ComplexMatrix::Identity(n, n)
                                                 : randomUnitary(n, rng);
    double fu = f(u);
    bool converged = false;
    int stall = 0;
    int it = 0;
    for (; it < config.max_iterations; ++it) {
      const ComplexMatrix g = gradient(u);
      const double gnorm = frobenius(g);
      if (gnorm < config.convergence_tol) {
        converged = true;
        break;
      }
      double t = config.step_size;
      bool moved = false;
      while (t >= kMinStep) {
        const ComplexMatrix trial = u * expm(-t * g);
        const double ft = f(trial);
        if (ft <= fu - kArmijo * t * gnorm * gnorm) {
          stall = (fu - ft < 1e-15 * std::max(1.0, std::abs(fu))) ? stall + 1 : 0;
          u = trial;
          fu = ft;
          moved = true;
          break;
        }
        t *= 0.5;
      }
      if (!moved || stall >= kStallLimit) break;
    }
    result.iterations_used += it;
    result.restart_values.push_back(fu);
    // Ties keep the lowest restart index.
    if (fu < result.best_value) {
      result.best_value = fu;
      result.best_point = u;
      result.converged = converged;
    }
  }
  return result;
}

double witnessFunctional(const BipartiteOperator& w, const ComplexMatrix& u) {
  const ComplexVector v = vec(u).coords();
  return expectation(w.matrix(), v) / static_cast<double>(u.rows());
}

ComplexMatrix witnessFunctionalGradient(const BipartiteOperator& w,
                                        const ComplexMatrix& u) {
  const auto n = static_cast<int>(u.rows());
  const ComplexMatrix m = unvec(w.matrix() * vec(u).coords(), Dims{n, n});
  return (2.0 / n) * skew(u.adjoint() * m);
}

OptimizationResult minimizeWitnessFunctional(const BipartiteOperator& w,
                                             const OptimizerConfig& config) {
  if (w.dimA() != w.dimB()) {
    throw DimensionError("witness functional needs a square bipartition (m = n)");
  }
  if (!isHermitian(w.matrix())) {
    throw NumericalError("witness functional needs a Hermitian operator");
  }
  return minimizeOverUnitaries(
      w.dimA(), [&w](const ComplexMatrix& u) { return witnessFunctional(w, u); },
      [&w](const ComplexMatrix& u) { return witnessFunctionalGradient(w, u); }, config,
      true);
}

double conjTrace(const ComplexMatrix& u) { return (u.conjugate() * u).trace().real(); }

OptimizationResult minimizeConjTrace(int n, const OptimizerConfig& config) {
  // d/dt tr(conj(U e^{tA}) U e^{tA}) = 2 Re tr(conj(U) U A).
  const UnitaryGradient grad = [](const ComplexMatrix& u) {
    const ComplexMatrix b = (u.conjugate() * u).adjoint();
    return ComplexMatrix(2.0 * skew(b));
  };
  return minimizeOverUnitaries(n, conjTrace, grad, config, false);
}

ComplexMatrix analyticConjTraceMinimizer(int n) {
  if (n < 1) throw DimensionError("dimension must be >= 1");
  ComplexMatrix u = ComplexMatrix::Identity(n, n);
  ComplexMatrix y(2, 2);
  y << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
  for (int k = 0; k + 1 < n; k += 2) u.block(k, k, 2, 2) = y;
  return u;
}

double conjTraceMinimum(int n) {
  return n % 2 == 0 ? -static_cast<double>(n) : -static_cast<double>(n - 2);
}

namespace {

void requireBasis(const ComplexMatrix& basis, Dims dims) {
  if (basis.cols() == 0) throw std::invalid_argument("subspace basis is empty");
  if (basis.rows() != dims.total()) {
    throw DimensionError("subspace basis vectors do not match bipartite dims");
  }
  const auto d = basis.cols();
  const double dev =
      (basis.adjoint() * basis - ComplexMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
  if (dev > 1e-8) throw NumericalError("subspace basis is not orthonormal");
}

}  // namespace

SubspaceSearchResult maxSchmidtRankInSubspace(const ComplexMatrix& basis, Dims dims,
                                              const OptimizerConfig& config,
                                              double rank_tol) {
  config.validate();
  requireBasis(basis, dims);
  const int target = std::min(dims.a, dims.b);
  const auto d = static_cast<int>(basis.cols());

  SubspaceSearchResult best;
  best.target_rank = target;
  best.smallest_coefficient = -1.0;
  const auto consider = [&](const ComplexVector& c) {
    const ComplexVector v = basis * c;
    const RealVector s = schmidtCoefficients(v, dims);
    const double smin = s(target - 1);
    if (smin > best.smallest_coefficient) {
      best.smallest_coefficient = smin;
      best.coefficients = s;
      best.vector = BipartiteVector(dims, v);
      best.rank = schmidtRank(v, dims, rank_tol);
    }
  };

  if (d == 1) {
    consider(ComplexVector::Ones(1));
    return best;
  }
  std::mt19937_64 rng(deriveSeed(config.seed, 0x5eed));
  for (int k = 0; k < kRandomCombinations && best.rank < target; ++k) {
    consider(randomUnitVector(d, rng));
  }
  if (best.rank >= target) return best;

  // -s_min; its gradient is -u w^dagger for the smallest singular pair.
  const SphereObjective f = [&](const ComplexVector& c) {
    return -schmidtCoefficients(basis * c, dims)(target - 1);
  };
  const SphereGradient g = [&](const ComplexVector& c) {
    const ComplexMatrix m = coefficients(basis * c, dims);
    Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const ComplexMatrix dm =
        -svd.matrixU().col(target - 1) * svd.matrixV().col(target - 1).adjoint();
    return ComplexVector(basis.adjoint() * flatten(dm));
  };
  for (int r = 0; r < config.restarts && best.rank < target; ++r) {
    std::mt19937_64 start(deriveSeed(config.seed, static_cast<std::uint64_t>(r) + 1));
    const SphereRun run = descendOnSphere(randomUnitVector(d, start), f, g, config);
    consider(run.point);
  }
  return best;
}

std::optional<BipartiteVector> maximallyEntangledInSubspace(
    const ComplexMatrix& basis, Dims dims, const OptimizerConfig& config) {
  config.validate();
  requireBasis(basis, dims);
  const int k = std::min(dims.a, dims.b);
  const auto d = static_cast<int>(basis.cols());
  const double target = 1.0 / std::sqrt(static_cast<double>(k));

  const auto accept = [&](const ComplexVector& c) -> std::optional<BipartiteVector> {
    const ComplexVector v = (basis * c).normalized();
    if (schmidtCoefficients(v, dims)(k - 1) >= target - kMaxEntangledTol) {
      return BipartiteVector(dims, v);
    }
    return std::nullopt;
  };

  for (int j = 0; j < d; ++j) {
    if (auto hit = accept(ComplexVector::Unit(d, j))) return hit;
  }
  if (d == 1) return std::nullopt;

  // ||M M^dagger - 1/k||_F^2 (or M^dagger M when a > b) vanishes exactly on
  // maximally entangled unit vectors.
  const bool rows_small = dims.a <= dims.b;
  const auto gram = [&](const ComplexMatrix& m) {
    return ComplexMatrix(rows_small ? ComplexMatrix(m * m.adjoint())
                                    : ComplexMatrix(m.adjoint() * m));
  };
  const SphereObjective f = [&](const ComplexVector& c) {
    const ComplexMatrix m = coefficients(basis * c, dims);
    return (gram(m) - ComplexMatrix::Identity(k, k) / k).squaredNorm();
  };
  const SphereGradient g = [&](const ComplexVector& c) {
    const ComplexMatrix m = coefficients(basis * c, dims);
    const ComplexMatrix p = gram(m) - ComplexMatrix::Identity(k, k) / k;
    const ComplexMatrix dm = rows_small ? ComplexMatrix(4.0 * p * m)
                                        : ComplexMatrix(4.0 * m * p);
    return ComplexVector(basis.adjoint() * flatten(dm));
  };
  for (int r = 0; r < config.restarts; ++r) {
    std::mt19937_64 start(deriveSeed(config.seed, static_cast<std::uint64_t>(r) + 1));
    const SphereRun run = descendOnSphere(randomUnitVector(d, start), f, g, config);
    if (auto hit = accept(run.point)) return hit;
  }
  return std::nullopt;
}

BipartiteVector randomMaximallyEntangled(Dims dims, std::mt19937_64& rng) {
  const int k = std::min(dims.a, dims.b);
  const ComplexMatrix u = randomUnitary(dims.a, rng);
  const ComplexMatrix v = randomUnitary(dims.b, rng);
  ComplexVector out = ComplexVector::Zero(dims.total());
  for (int j = 0; j < k; ++j) {
    out += BipartiteVector::product(u.col(j), v.col(j)).coords();
  }
  return {dims, out / std::sqrt(static_cast<double>(k))};
}

}  // namespace witopt

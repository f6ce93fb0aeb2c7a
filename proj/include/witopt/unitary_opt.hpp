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

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "witopt/tensor.hpp"

namespace witopt {

enum class GradientMode { Analytic, FiniteDifference };

struct OptimizerConfig {
  int restarts = 32;
  int max_iterations = 2000;
  double step_size = 0.1;  // initial step; halved on failed descent
  GradientMode gradient_mode = GradientMode::FiniteDifference;
  double fd_epsilon = 1e-6;
  double convergence_tol = 1e-9;  // on the Riemannian gradient norm
  std::uint64_t seed = 1;

  /// Throws std::invalid_argument on non-positive fields or
  /// fd_epsilon outside (0, 1e-3].
  void validate() const;
};

struct OptimizationResult {
  double best_value = 0.0;
  ComplexMatrix best_point;  // unitary, or a column vector for sphere searches
  int iterations_used = 0;
  bool converged = false;
  std::vector<double> restart_values;
};

/// Real-valued objective on U(n).
using UnitaryObjective = std::function<double(const ComplexMatrix&)>;

/// Riemannian gradient G (anti-Hermitian) at U, defined by
/// d/dt f(U exp(tA)) |_{t=0} = Re tr(G^dagger A) for anti-Hermitian A.
using UnitaryGradient = std::function<ComplexMatrix(const ComplexMatrix&)>;

/// Matrix exponential by scaling and squaring with a degree-18 Taylor
/// polynomial on the scaled matrix (norm <= 1/2).
ComplexMatrix expm(const ComplexMatrix& a);

/// Haar-random unitary from the QR decomposition of a Ginibre matrix.
ComplexMatrix randomUnitary(int n, std::mt19937_64& rng);

/// Uniformly random unit vector in C^n.
ComplexVector randomUnitVector(int n, std::mt19937_64& rng);

/// Per-restart seed derived from a master seed (splitmix64).
std::uint64_t deriveSeed(std::uint64_t master, std::uint64_t index);

/// Orthonormal basis (real Hilbert-Schmidt product) of the n^2-dimensional
/// space of anti-Hermitian n x n matrices.
std::vector<ComplexMatrix> antiHermitianBasis(int n);

/// Central-difference Riemannian gradient of f at U.
ComplexMatrix finiteDifferenceGradient(const UnitaryObjective& f,
                                       const ComplexMatrix& u, double eps);

/// Gradient descent on U(n) with the retraction U -> U exp(-t G).
/// When `identity_start` is set, restart 0 starts at the identity; all
/// others start at Haar-random unitaries seeded from config.seed.
/// The analytic gradient is used only in GradientMode::Analytic.
OptimizationResult minimizeOverUnitaries(int n, const UnitaryObjective& f,
                                         const UnitaryGradient& analytic,
                                         const OptimizerConfig& config,
                                         bool identity_start);

/// <Omega_U|W|Omega_U> with Omega_U = (1 (x) U)|Gamma>/sqrt(n).
double witnessFunctional(const BipartiteOperator& w, const ComplexMatrix& u);
ComplexMatrix witnessFunctionalGradient(const BipartiteOperator& w,
                                        const ComplexMatrix& u);

/// Minimizes the witness functional over U(n); W must act on C^n (x) C^n.
/// Compare the value against -tr(W)/n (normalized states).
OptimizationResult minimizeWitnessFunctional(const BipartiteOperator& w,
                                             const OptimizerConfig& config);

/// tr(conj(U) U), which is real for every unitary U.
double conjTrace(const ComplexMatrix& u);

/// Numerical minimum of tr(conj(U) U) over U(n).
OptimizationResult minimizeConjTrace(int n, const OptimizerConfig& config);

/// Closed-form minimizer: 1_{n/2} (x) sigma_y for even n, and that block
/// padded with a trailing 1 for odd n.
ComplexMatrix analyticConjTraceMinimizer(int n);

/// Closed-form minimum: -n for even n, -(n - 2) for odd n.
double conjTraceMinimum(int n);

struct SubspaceSearchResult {
  int rank = 0;
  int target_rank = 0;
  BipartiteVector vector;
  RealVector coefficients;
  double smallest_coefficient = 0.0;
};

/// Searches span(basis columns) in C^a (x) C^b for a unit vector of maximal
/// numerical Schmidt rank: 200 random combinations, then maximization of the
/// smallest Schmidt coefficient on the coefficient sphere if the target
/// min(a, b) was not reached.
SubspaceSearchResult maxSchmidtRankInSubspace(const ComplexMatrix& basis, Dims dims,
                                              const OptimizerConfig& config,
                                              double rank_tol = kRankTol);

/// A unit vector in span(basis columns) whose Schmidt coefficients all equal
/// min(a, b)^{-1/2} to within 1e-7, if one is found.
std::optional<BipartiteVector> maximallyEntangledInSubspace(
    const ComplexMatrix& basis, Dims dims, const OptimizerConfig& config);

/// Haar-random maximally entangled unit vector on C^a (x) C^b.
BipartiteVector randomMaximallyEntangled(Dims dims, std::mt19937_64& rng);

}  // namespace witopt

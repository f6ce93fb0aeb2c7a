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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "witopt/choi.hpp"
#include "witopt/unitary_opt.hpp"
#include "witopt/witnesses.hpp"

namespace witopt {

// Block-positivity is never certified here. Sufficient criteria assume it
// (it must be attested) and the remaining checks can only falsify it.
enum class Status {
  Inconclusive,
  Consistent,
  WeaklyOptimal,
  Optimal,
  BoundViolated,
  NotBlockPositive,
};

std::string toString(Status status);
std::optional<Status> statusFromString(const std::string& text);

/// Criterion identifiers, in the order run_all executes them.
namespace criterion {
inline constexpr const char* kNecessary = "necessary-inequalities";
inline constexpr const char* kSpectral = "spectral-bounds";
inline constexpr const char* kKernel = "kernel-schmidt";
inline constexpr const char* kTraceBound = "trace-bound";
inline constexpr const char* kWeak = "weak-optimality";
inline constexpr const char* kSpanning = "spanning";
inline constexpr const char* kMapTraceBounds = "map-trace-bounds";
inline constexpr const char* kMapTraceOptimality = "map-trace-optimality";
inline constexpr const char* kWitnessFunctional = "witness-functional";
}  // namespace criterion

const std::vector<std::string>& criterionIds();

struct Certificate {
  std::string name;
  ComplexMatrix value;  // vectors are stored as single columns
};

struct CriterionVerdict {
  std::string criterion_id;
  Status status = Status::Inconclusive;
  std::vector<std::pair<std::string, double>> evidence;
  std::vector<Certificate> certificates;
  std::string note;

  std::optional<double> evidenceValue(const std::string& key) const;
  const Certificate* certificate(const std::string& key) const;
};

struct CriteriaConfig {
  // |lambda - target| <= eigen_tol * max(1, ||W||) counts as "is an eigenvalue".
  double eigen_tol = 1e-8;
  double kernel_tol = kRankTol;
  double schmidt_tol = kRankTol;
  // Slack for the PSD inequalities and spectral bounds, relative to scale.
  double psd_tol = 1e-9;
  // <z|W|z> <= zero_tol marks a product zero (unit z).
  double zero_tol = 1e-9;
  // Relative singular-value cut-off for the span of product zeros.
  double span_tol = 1e-3;
  int seesaw_restarts = 64;  // run_all uses at least 2 m n
  int seesaw_max_iterations = 500;
  double seesaw_improvement = 1e-12;
  int trace_bound_samples = 256;
  double threshold_c = 0.0;
  bool block_positive_attested = false;
  std::uint64_t seed = 1;
  OptimizerConfig optimizer = subspaceOptimizerDefaults();
  // Empty means all criteria.
  std::vector<std::string> criteria;
  std::optional<ComplexMatrix> map_unitary;

  static OptimizerConfig subspaceOptimizerDefaults();
  bool enabled(const std::string& id) const;
};

struct ProductZero {
  ComplexVector x;
  ComplexVector y;
  double value = 0.0;  // <x (x) y|W|x (x) y> for unit x, y
};

struct SeesawResult {
  std::vector<ProductZero> zeros;
  double min_value = 0.0;
  ProductZero minimizer;
};

struct WeightedProduct {
  double weight = 0.0;
  ComplexVector x;
  ComplexVector y;
};

struct WitnessReport {
  std::string name;
  Dims dims;
  bool block_positive_attested = false;
  std::uint64_t seed = 0;
  std::vector<CriterionVerdict> verdicts;
  Status overall = Status::Inconclusive;
  CriteriaConfig config;

  const CriterionVerdict* verdict(const std::string& id) const;
};

/// W + 1 (x) tr_1(W) and W + tr_2(W) (x) 1 must be PSD for block-positive W,
/// as must tr_1(W), tr_2(W) and tr(W). With threshold C the checks apply to
/// W - C 1.
CriterionVerdict necessaryInequalities(const BipartiteOperator& w,
                                       const CriteriaConfig& cfg = {});

/// lambda_min(W) >= -tr(W), -lambda_max(tr_1 W), -lambda_max(tr_2 W).
CriterionVerdict spectralBounds(const BipartiteOperator& w,
                                const CriteriaConfig& cfg = {});

/// Optimal if ker(W + tr_2(W) (x) 1) holds a vector of Schmidt rank m (m <= n)
/// or ker(W + 1 (x) tr_1(W)) one of Schmidt rank n (m >= n).
CriterionVerdict kernelSchmidtCriterion(const BipartiteOperator& w,
                                        const CriteriaConfig& cfg = {});

/// <Omega|W|Omega> >= -tr(W)/min(m, n) over maximally entangled Omega;
/// saturation certifies optimality, a sampled violation falsifies
/// block-positivity.
CriterionVerdict traceBoundCriterion(const BipartiteOperator& w,
                                     const CriteriaConfig& cfg = {});

/// WeaklyOptimal if 0 is an eigenvalue of either shifted operator.
CriterionVerdict weakOptimalityCriterion(const BipartiteOperator& w,
                                         const CriteriaConfig& cfg = {});

/// Seesaw minimization of <x (x) y|W|x (x) y> from `restarts` seeded starts.
SeesawResult collectProductZeros(const BipartiteOperator& w, int restarts,
                                 std::uint64_t seed, const CriteriaConfig& cfg = {});

/// Spanning property from supplied product zeros; on success the certificate
/// "rho" is the normalized sum of their projectors.
CriterionVerdict spanningCertificate(const BipartiteOperator& w,
                                     const std::vector<ProductZero>& zeros,
                                     const CriteriaConfig& cfg = {});

/// Spanning property from a full-rank separable state with tr(W rho) = 0.
CriterionVerdict spanningFromSeparableState(
    const BipartiteOperator& w, const BipartiteOperator& rho,
    const std::vector<WeightedProduct>& decomposition, const CriteriaConfig& cfg = {});

/// Trace bounds for a (positive) square map.
CriterionVerdict mapTraceBounds(const SuperOperator& s, const CriteriaConfig& cfg = {});

/// Optimal if tr(Phi(U^dagger . U)) = <vec U|C(Phi)|vec U> equals -tr(Phi(1)).
CriterionVerdict mapTraceOptimality(const SuperOperator& s,
                                    const std::optional<ComplexMatrix>& u,
                                    const CriteriaConfig& cfg = {});

/// Minimizes the witness functional and compares with -tr(W)/n.
CriterionVerdict witnessFunctionalCriterion(const BipartiteOperator& w,
                                            const OptimizerConfig& opt,
                                            const CriteriaConfig& cfg = {});

/// Overall status: NotBlockPositive (or BoundViolated) overrides, otherwise
/// the maximum under Optimal > WeaklyOptimal > Consistent > Inconclusive.
Status aggregate(const std::vector<CriterionVerdict>& verdicts);

/// Runs every enabled criterion in fixed order.
WitnessReport runAll(const WitnessSpec& spec, const CriteriaConfig& cfg);

/// Report holding only the witness-functional verdict.
WitnessReport runOptimize(const WitnessSpec& spec, const OptimizerConfig& opt,
                          const CriteriaConfig& cfg);

}  // namespace witopt

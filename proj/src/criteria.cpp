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

#include "witopt/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

namespace witopt {

namespace {

constexpr double kUnitaryTol = 1e-9;

void requireHermitian(const BipartiteOperator& w, const char* who) {
  if (!isHermitian(w.matrix())) {
    throw NumericalError(std::string(who) + ": operator is not Hermitian");
  }
}

double scaleOf(const ComplexMatrix& m) { return std::max(1.0, operatorNorm(m)); }

ComplexMatrix column(const ComplexVector& v) { return ComplexMatrix(v); }

CriterionVerdict makeVerdict(const char* id) {
  CriterionVerdict v;
  v.criterion_id = id;
  return v;
}

void add(CriterionVerdict& v, const std::string& key, double value) {
  v.evidence.emplace_back(key, value);
}

// Sufficient criteria only hold under block-positivity.
void gate(CriterionVerdict& v, const CriteriaConfig& cfg) {
  if (cfg.block_positive_attested) return;
  if (v.status == Status::Optimal || v.status == Status::WeaklyOptimal) {
    v.note = "sufficient condition met (" + toString(v.status) +
             ") but block-positivity is not attested";
    v.status = Status::Consistent;
  }
}

ComplexMatrix secondShift(const BipartiteOperator& w) {
  return w.matrix() +
         kron(partialTrace(w, Side::Second), ComplexMatrix::Identity(w.dimB(), w.dimB()));
}

ComplexMatrix firstShift(const BipartiteOperator& w) {
  return w.matrix() +
         kron(ComplexMatrix::Identity(w.dimA(), w.dimA()), partialTrace(w, Side::First));
}

int statusRank(Status s) {
  switch (s) {
    case Status::Optimal: return 3;
    case Status::WeaklyOptimal: return 2;
    case Status::Consistent: return 1;
    default: return 0;
  }
}

// <x (x) y|W|x (x) y> minimized over x with y fixed (first = true) or over y
// with x fixed.
std::pair<ComplexVector, double> bottomContracted(const BipartiteOperator& w,
                                                  const ComplexVector& fixed,
                                                  bool solve_first) {
  const ComplexMatrix lift =
      solve_first ? kron(ComplexMatrix::Identity(w.dimA(), w.dimA()), column(fixed))
                  : kron(column(fixed), ComplexMatrix::Identity(w.dimB(), w.dimB()));
  const ComplexMatrix reduced = lift.adjoint() * w.matrix() * lift;
  const EigenDecomposition eig = hermitianEig(0.5 * (reduced + reduced.adjoint()));
  return {eig.eigenvectors.col(0), eig.eigenvalues(0)};
}

}  // namespace

std::string toString(Status status) {
  switch (status) {
    case Status::Optimal: return "OPTIMAL";
    case Status::WeaklyOptimal: return "WEAKLY_OPTIMAL";
    case Status::NotBlockPositive: return "NOT_BLOCK_POSITIVE";
    case Status::BoundViolated: return "BOUND_VIOLATED";
    case Status::Consistent: return "CONSISTENT";
    case Status::Inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

std::optional<Status> statusFromString(const std::string& text) {
  for (Status s : {Status::Inconclusive, Status::Consistent, Status::WeaklyOptimal,
                   Status::Optimal, Status::BoundViolated, Status::NotBlockPositive}) {
    if (toString(s) == text) return s;
  }
  return std::nullopt;
}

const std::vector<std::string>& criterionIds() {
  static const std::vector<std::string> ids = {
      criterion::kNecessary,      criterion::kSpectral,       criterion::kKernel,
      criterion::kTraceBound,     criterion::kWeak,           criterion::kSpanning,
      criterion::kMapTraceBounds, criterion::kMapTraceOptimality};
  return ids;
}

std::optional<double> CriterionVerdict::evidenceValue(const std::string& key) const {
  for (const auto& [k, v] : evidence) {
    if (k == key) return v;
  }
  return std::nullopt;
}

const Certificate* CriterionVerdict::certificate(const std::string& key) const {
  for (const auto& c : certificates) {
    if (c.name == key) return &c;
  }
  return nullptr;
}

OptimizerConfig CriteriaConfig::subspaceOptimizerDefaults() {
  OptimizerConfig o;
  o.restarts = 8;
  o.max_iterations = 1000;
  o.gradient_mode = GradientMode::Analytic;
  return o;
}

bool CriteriaConfig::enabled(const std::string& id) const {
  return criteria.empty() || std::find(criteria.begin(), criteria.end(), id) != criteria.end();
}

const CriterionVerdict* WitnessReport::verdict(const std::string& id) const {
  for (const auto& v : verdicts) {
    if (v.criterion_id == id) return &v;
  }
  return nullptr;
}

CriterionVerdict necessaryInequalities(const BipartiteOperator& w,
                                       const CriteriaConfig& cfg) {
  requireHermitian(w, criterion::kNecessary);
  const BipartiteOperator shifted(
      w.dims(), w.matrix() - cfg.threshold_c *
                                 ComplexMatrix::Identity(w.dims().total(), w.dims().total()));
  const double scale = scaleOf(w.matrix());
  const double slack = cfg.psd_tol * scale;

  const double first = minEigenvalue(firstShift(shifted));
  const double second = minEigenvalue(secondShift(shifted));
  const double tr1 = minEigenvalue(partialTrace(shifted, Side::First));
  const double tr2 = minEigenvalue(partialTrace(shifted, Side::Second));
  const double trace = shifted.matrix().trace().real();

  CriterionVerdict v = makeVerdict(criterion::kNecessary);
  add(v, "threshold", cfg.threshold_c);
  add(v, "lambda_min_first", first);
  add(v, "lambda_min_second", second);
  add(v, "lambda_min_tr1", tr1);
  add(v, "lambda_min_tr2", tr2);
  add(v, "trace", trace);

  std::vector<std::string> failed;
  if (first < -slack) failed.emplace_back("W + 1 (x) tr_1(W)");
  if (second < -slack) failed.emplace_back("W + tr_2(W) (x) 1");
  if (tr1 < -slack) failed.emplace_back("tr_1(W)");
  if (tr2 < -slack) failed.emplace_back("tr_2(W)");
  if (trace < -slack) {
    failed.emplace_back("tr(W)");
  } else if (trace <= slack && operatorNorm(shifted.matrix()) > slack) {
    failed.emplace_back("tr(W) = 0 for nonzero W");
  }
  if (failed.empty()) {
    v.status = Status::Consistent;
  } else {
    v.status = Status::NotBlockPositive;
    std::string note = "violated:";
    for (const auto& f : failed) note += " [" + f + "]";
    v.note = note;
  }
  return v;
}

CriterionVerdict spectralBounds(const BipartiteOperator& w, const CriteriaConfig& cfg) {
  requireHermitian(w, criterion::kSpectral);
  const double lmin = minEigenvalue(w.matrix());
  const double trace = w.matrix().trace().real();
  const double tr1 = maxEigenvalue(partialTrace(w, Side::First));
  const double tr2 = maxEigenvalue(partialTrace(w, Side::Second));
  const double slack = cfg.psd_tol * scaleOf(w.matrix());

  CriterionVerdict v = makeVerdict(criterion::kSpectral);
  add(v, "lambda_min", lmin);
  add(v, "bound_trace", -trace);
  add(v, "bound_tr1", -tr1);
  add(v, "bound_tr2", -tr2);
  const double bound = std::max({-trace, -tr1, -tr2});
  add(v, "margin", lmin - bound);
  v.status = lmin < bound - slack ? Status::NotBlockPositive : Status::Consistent;
  return v;
}

CriterionVerdict kernelSchmidtCriterion(const BipartiteOperator& w,
                                        const CriteriaConfig& cfg) {
  requireHermitian(w, criterion::kKernel);
  const int m = w.dimA();
  const int n = w.dimB();

  struct Attempt {
    int side = 0;
    int kernel_dim = 0;
    SubspaceSearchResult search;
  };
  std::vector<Attempt> attempts;
  const auto run = [&](const ComplexMatrix& shifted, int side) {
    Attempt a;
    a.side = side;
    const ComplexMatrix kernel = kernelBasis(shifted, cfg.kernel_tol);
    a.kernel_dim = static_cast<int>(kernel.cols());
    if (a.kernel_dim > 0) {
      OptimizerConfig opt = cfg.optimizer;
      opt.seed = deriveSeed(cfg.seed, static_cast<std::uint64_t>(side));
      a.search = maxSchmidtRankInSubspace(kernel, w.dims(), opt, cfg.schmidt_tol);
    }
    attempts.push_back(std::move(a));
  };
  if (m <= n) run(secondShift(w), 2);
  if (m >= n) run(firstShift(w), 1);

  const Attempt* best = nullptr;
  for (const auto& a : attempts) {
    if (!best || a.search.rank > best->search.rank ||
        (a.search.rank == best->search.rank && a.kernel_dim > best->kernel_dim)) {
      best = &a;
    }
  }

  CriterionVerdict v = makeVerdict(criterion::kKernel);
  const int target = std::min(m, n);
  add(v, "side", best->side);
  add(v, "kernel_dim", best->kernel_dim);
  add(v, "rank_found", best->search.rank);
  add(v, "target_rank", target);
  if (best->kernel_dim == 0) {
    v.status = Status::Inconclusive;
    v.note = "empty kernel";
    return v;
  }
  add(v, "smallest_coefficient", best->search.smallest_coefficient);
  v.certificates.push_back({"kernel_vector", column(best->search.vector.coords())});
  v.status = best->search.rank >= target ? Status::Optimal : Status::Inconclusive;
  gate(v, cfg);
  return v;
}

CriterionVerdict traceBoundCriterion(const BipartiteOperator& w,
                                     const CriteriaConfig& cfg) {
  requireHermitian(w, criterion::kTraceBound);
  const Dims dims = w.dims();
  const int k = std::min(dims.a, dims.b);
  const double trace = w.matrix().trace().real();
  const double target = -trace / k;
  const double scale = scaleOf(w.matrix());
  const double tol = cfg.eigen_tol * scale;

  CriterionVerdict v = makeVerdict(criterion::kTraceBound);
  add(v, "target", target);

  ComplexVector omega = ComplexVector::Zero(dims.total());
  for (int j = 0; j < k; ++j) omega(j * dims.b + j) = 1.0;
  omega /= std::sqrt(static_cast<double>(k));
  add(v, "value_at_gamma", expectation(w.matrix(), omega));

  const EigenDecomposition eig = hermitianEig(w.matrix());
  add(v, "lambda_min", eig.eigenvalues(0));
  std::vector<int> cols;
  for (int i = 0; i < eig.eigenvalues.size(); ++i) {
    if (std::abs(eig.eigenvalues(i) - target) <= tol) cols.push_back(i);
  }
  add(v, "eigenspace_dim", static_cast<double>(cols.size()));

  // Sampled check of the inequality itself.
  std::mt19937_64 rng(deriveSeed(cfg.seed, 0x7b));
  double sampled_min = std::numeric_limits<double>::infinity();
  BipartiteVector worst;
  for (int s = 0; s < cfg.trace_bound_samples; ++s) {
    const BipartiteVector o = randomMaximallyEntangled(dims, rng);
    const double val = expectation(w.matrix(), o.coords());
    if (val < sampled_min) {
      sampled_min = val;
      worst = o;
    }
  }
  if (cfg.trace_bound_samples > 0) add(v, "sampled_min", sampled_min);

  std::optional<BipartiteVector> found;
  if (!cols.empty()) {
    ComplexMatrix basis(dims.total(), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) {
      basis.col(static_cast<Eigen::Index>(c)) = eig.eigenvectors.col(cols[c]);
    }
    OptimizerConfig opt = cfg.optimizer;
    opt.seed = deriveSeed(cfg.seed, 0x7c);
    found = maximallyEntangledInSubspace(basis, dims, opt);
  }

  if (cfg.trace_bound_samples > 0 && sampled_min < target - tol) {
    v.status = Status::BoundViolated;
    v.note = "a maximally entangled state falls below -tr(W)/min(m, n)";
    v.certificates.push_back({"violating_state", column(worst.coords())});
    return v;
  }
  if (found) {
    add(v, "value_at_certificate", expectation(w.matrix(), found->coords()));
    v.certificates.push_back({"omega", column(found->coords())});
    v.status = Status::Optimal;
  } else {
    v.status = Status::Inconclusive;
  }
  gate(v, cfg);
  return v;
}

CriterionVerdict weakOptimalityCriterion(const BipartiteOperator& w,
                                         const CriteriaConfig& cfg) {
  requireHermitian(w, criterion::kWeak);
  const double tol = cfg.eigen_tol * scaleOf(w.matrix());
  CriterionVerdict v = makeVerdict(criterion::kWeak);

  const auto closest = [](const ComplexMatrix& h) {
    const EigenDecomposition eig = hermitianEig(h);
    Eigen::Index idx = 0;
    eig.eigenvalues.cwiseAbs().minCoeff(&idx);
    return std::make_pair(eig.eigenvalues(idx), ComplexVector(eig.eigenvectors.col(idx)));
  };
  const auto [first, first_vec] = closest(firstShift(w));
  const auto [second, second_vec] = closest(secondShift(w));
  add(v, "closest_eigenvalue_first", first);
  add(v, "closest_eigenvalue_second", second);

  if (std::abs(second) <= tol) {
    v.status = Status::WeaklyOptimal;
    v.certificates.push_back({"zero_eigenvector", column(second_vec)});
  } else if (std::abs(first) <= tol) {
    v.status = Status::WeaklyOptimal;
    v.certificates.push_back({"zero_eigenvector", column(first_vec)});
  } else {
    v.status = Status::Inconclusive;
  }
  gate(v, cfg);
  return v;
}

SeesawResult collectProductZeros(const BipartiteOperator& w, int restarts,
                                 std::uint64_t seed, const CriteriaConfig& cfg) {
  requireHermitian(w, "collect_product_zeros");
  if (restarts < 1) throw std::invalid_argument("seesaw restarts must be positive");
  SeesawResult result;
  result.min_value = std::numeric_limits<double>::infinity();
  for (int r = 0; r < restarts; ++r) {
    std::mt19937_64 rng(deriveSeed(seed, static_cast<std::uint64_t>(r)));
    ComplexVector x = randomUnitVector(w.dimA(), rng);
    ComplexVector y = randomUnitVector(w.dimB(), rng);
    double value = expectation(w.matrix(), BipartiteVector::product(x, y).coords());
    for (int it = 0; it < cfg.seesaw_max_iterations; ++it) {
      const double before = value;
      std::tie(x, value) = bottomContracted(w, y, true);
      std::tie(y, value) = bottomContracted(w, x, false);
      if (before - value < cfg.seesaw_improvement) break;
    }
    ProductZero z{x, y, value};
    if (value < result.min_value) {
      result.min_value = value;
      result.minimizer = z;
    }
    if (value <= cfg.zero_tol) result.zeros.push_back(std::move(z));
  }
  return result;
}

CriterionVerdict spanningCertificate(const BipartiteOperator& w,
                                     const std::vector<ProductZero>& zeros,
                                     const CriteriaConfig& cfg) {
  requireHermitian(w, criterion::kSpanning);
  const Dims dims = w.dims();
  const int full = dims.total();
  CriterionVerdict v = makeVerdict(criterion::kSpanning);
  add(v, "num_zeros", static_cast<double>(zeros.size()));
  add(v, "full_dim", full);
  if (zeros.empty()) {
    add(v, "span_dim", 0);
    v.status = Status::Inconclusive;
    v.note = "no product zeros";
    return v;
  }

  ComplexMatrix stacked(full, static_cast<Eigen::Index>(zeros.size()));
  ComplexMatrix rho = ComplexMatrix::Zero(full, full);
  double weight = 0.0;
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < zeros.size(); ++i) {
    const ProductZero& z = zeros[i];
    if (z.x.size() != dims.a || z.y.size() != dims.b) {
      throw DimensionError("spanning: product zero does not match the witness dims");
    }
    const ComplexVector p = BipartiteVector::product(z.x, z.y).coords();
    const double norm2 = p.squaredNorm();
    if (!(norm2 > 0.0)) throw std::invalid_argument("spanning: zero product vector");
    const double value = expectation(w.matrix(), p) / norm2;
    if (value > cfg.zero_tol) {
      std::ostringstream msg;
      msg << "spanning: supplied vector " << i << " is not a product zero (<z|W|z> = "
          << value << ")";
      throw std::invalid_argument(msg.str());
    }
    worst = std::max(worst, value);
    stacked.col(static_cast<Eigen::Index>(i)) = p / std::sqrt(norm2);
    rho += p * p.adjoint();
    weight += norm2;
  }
  rho /= weight;

  const int span = numericalRank(stacked, cfg.span_tol);
  add(v, "span_dim", span);
  add(v, "max_zero_value", worst);
  if (span < full) {
    v.status = Status::Inconclusive;
    return v;
  }
  const int rho_rank = numericalRank(rho, cfg.span_tol * cfg.span_tol);
  const double trace_w_rho = (w.matrix() * rho).trace().real();
  add(v, "rho_rank", rho_rank);
  add(v, "rho_min_eigenvalue", minEigenvalue(rho));
  add(v, "trace_w_rho", trace_w_rho);
  v.certificates.push_back({"rho", rho});
  const bool ok = rho_rank == full && std::abs(trace_w_rho) <= cfg.zero_tol * scaleOf(w.matrix());
  v.status = ok ? Status::Optimal : Status::Inconclusive;
  gate(v, cfg);
  return v;
}

CriterionVerdict spanningFromSeparableState(const BipartiteOperator& w,
                                            const BipartiteOperator& rho,
                                            const std::vector<WeightedProduct>& decomposition,
                                            const CriteriaConfig& cfg) {
  requireHermitian(w, criterion::kSpanning);
  if (!(rho.dims() == w.dims())) {
    throw DimensionError("spanning: state and witness dims differ");
  }
  if (!isHermitian(rho.matrix())) throw NumericalError("spanning: state is not Hermitian");
  const Dims dims = w.dims();
  const int full = dims.total();
  const double rho_scale = scaleOf(rho.matrix());
  if (std::abs(rho.matrix().trace().real() - 1.0) > 1e-10) {
    throw NumericalError("spanning: state does not have unit trace");
  }
  const PsdCheck psd = isPsd(rho.matrix(), kRankTol);
  if (!psd.psd) throw NumericalError("spanning: state is not positive semi-definite");
  const int rank = numericalRank(rho.matrix(), kRankTol);
  if (rank < full) {
    std::ostringstream msg;
    msg << "spanning: state is not full rank (rank " << rank << " of " << full << ")";
    throw NumericalError(msg.str());
  }

  ComplexMatrix assembled = ComplexMatrix::Zero(full, full);
  CriterionVerdict v = makeVerdict(criterion::kSpanning);
  double worst = -std::numeric_limits<double>::infinity();
  std::optional<ComplexVector> negative;
  for (const WeightedProduct& term : decomposition) {
    if (term.x.size() != dims.a || term.y.size() != dims.b) {
      throw DimensionError("spanning: decomposition term does not match the dims");
    }
    if (term.weight < 0.0) throw NumericalError("spanning: negative decomposition weight");
    const ComplexVector p = BipartiteVector::product(term.x, term.y).coords();
    assembled += term.weight * p * p.adjoint();
    const double norm2 = p.squaredNorm();
    if (!(norm2 > 0.0)) throw std::invalid_argument("spanning: zero product vector");
    const double value = expectation(w.matrix(), p) / norm2;
    if (value > worst) worst = value;
    if (value < -cfg.zero_tol && !negative) negative = p / std::sqrt(norm2);
  }
  if ((assembled - rho.matrix()).cwiseAbs().maxCoeff() > 1e-10 * rho_scale) {
    throw NumericalError("spanning: decomposition does not reassemble the state");
  }

  const double trace_w_rho = (w.matrix() * rho.matrix()).trace().real();
  add(v, "num_terms", static_cast<double>(decomposition.size()));
  add(v, "rho_rank", rank);
  add(v, "rho_min_eigenvalue", psd.min_eigenvalue);
  add(v, "trace_w_rho", trace_w_rho);
  add(v, "max_term_value", worst);
  if (negative) {
    v.status = Status::NotBlockPositive;
    v.note = "a product vector has negative expectation";
    v.certificates.push_back({"product_vector", column(*negative)});
    return v;
  }
  const double tol = cfg.zero_tol * scaleOf(w.matrix());
  v.status = (std::abs(trace_w_rho) <= tol && worst <= cfg.zero_tol) ? Status::Optimal
                                                                     : Status::Inconclusive;
  if (v.status == Status::Optimal) v.certificates.push_back({"rho", rho.matrix()});
  gate(v, cfg);
  return v;
}

CriterionVerdict mapTraceBounds(const SuperOperator& s, const CriteriaConfig& cfg) {
  if (s.dimIn() != s.dimOut()) throw DimensionError("map trace bounds need a square map");
  const int n = s.dimIn();
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  const double trace = superoperatorTrace(s);
  const ComplexMatrix image = s.apply(id);
  const double image_trace = image.trace().real();
  const double norm_image = operatorNorm(image);
  const double norm_adjoint = operatorNorm(adjoint(s).apply(id));
  const ChannelProperties props = channelProperties(s);
  const double slack = cfg.psd_tol * std::max(1.0, n * scaleOf(s.choi().matrix()));

  CriterionVerdict v = makeVerdict(criterion::kMapTraceBounds);
  const double bound_i = -image_trace;
  const double bound_ii = -n * std::min(norm_image, norm_adjoint);
  add(v, "trace", trace);
  add(v, "bound_image_trace", bound_i);
  add(v, "bound_norm", bound_ii);
  add(v, "trace_preserving", props.trace_preserving ? 1.0 : 0.0);
  add(v, "unital", props.unital ? 1.0 : 0.0);
  bool violated = trace < bound_i - slack || trace < bound_ii - slack;
  if (props.trace_preserving || props.unital) {
    add(v, "bound_channel", -n);
    violated = violated || trace < -n - slack;
  }
  add(v, "saturated", std::abs(trace - bound_i) <= slack ? 1.0 : 0.0);
  v.status = violated ? Status::NotBlockPositive : Status::Consistent;
  if (violated) v.note = "trace bound violated: the map is not positive";
  return v;
}

CriterionVerdict mapTraceOptimality(const SuperOperator& s,
                                    const std::optional<ComplexMatrix>& u,
                                    const CriteriaConfig& cfg) {
  if (s.dimIn() != s.dimOut()) throw DimensionError("map trace optimality needs a square map");
  const int n = s.dimIn();
  const ComplexMatrix uu = u.value_or(ComplexMatrix::Identity(n, n));
  if (uu.rows() != n || uu.cols() != n) throw DimensionError("U must be n x n");
  if ((uu.adjoint() * uu - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff() >
      kUnitaryTol) {
    throw NumericalError("map trace optimality: U is not unitary");
  }
  const double value = expectation(s.choi().matrix(), vec(uu).coords());
  const double target = -s.apply(ComplexMatrix::Identity(n, n)).trace().real();
  const double tol = cfg.eigen_tol * scaleOf(s.choi().matrix());

  CriterionVerdict v = makeVerdict(criterion::kMapTraceOptimality);
  add(v, "value", value);
  add(v, "target", target);
  add(v, "gap", value - target);
  if (std::abs(value - target) <= tol) {
    v.status = Status::Optimal;
    v.certificates.push_back({"unitary", uu});
  } else if (value < target - tol) {
    v.status = Status::NotBlockPositive;
    v.note = "value below -tr(Phi(1)): the map is not positive";
  } else {
    v.status = Status::Inconclusive;
  }
  gate(v, cfg);
  return v;
}

CriterionVerdict witnessFunctionalCriterion(const BipartiteOperator& w,
                                            const OptimizerConfig& opt,
                                            const CriteriaConfig& cfg) {
  requireHermitian(w, criterion::kWitnessFunctional);
  const OptimizationResult r = minimizeWitnessFunctional(w, opt);
  const int n = w.dimA();
  const double threshold = -w.matrix().trace().real() / n;
  const double tol = cfg.eigen_tol * scaleOf(w.matrix());

  CriterionVerdict v = makeVerdict(criterion::kWitnessFunctional);
  add(v, "best_value", r.best_value);
  add(v, "threshold", threshold);
  add(v, "gap", r.best_value - threshold);
  add(v, "restarts", opt.restarts);
  add(v, "iterations", r.iterations_used);
  add(v, "converged", r.converged ? 1.0 : 0.0);
  if (std::abs(r.best_value - threshold) <= tol) {
    v.status = Status::Optimal;
    v.certificates.push_back({"unitary", r.best_point});
  } else if (r.best_value < threshold - tol) {
    v.status = Status::BoundViolated;
    v.note = "functional below -tr(W)/n";
    v.certificates.push_back({"unitary", r.best_point});
  } else {
    v.status = Status::Inconclusive;
  }
  gate(v, cfg);
  return v;
}

Status aggregate(const std::vector<CriterionVerdict>& verdicts) {
  bool violated = false;
  Status best = Status::Inconclusive;
  for (const auto& v : verdicts) {
    if (v.status == Status::NotBlockPositive) return Status::NotBlockPositive;
    if (v.status == Status::BoundViolated) violated = true;
    if (statusRank(v.status) > statusRank(best)) best = v.status;
  }
  return violated ? Status::BoundViolated : best;
}

WitnessReport runAll(const WitnessSpec& spec, const CriteriaConfig& base) {
  const BipartiteOperator& w = spec.witness;
  requireHermitian(w, "run_all");
  for (const auto& id : base.criteria) {
    const auto& ids = criterionIds();
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
      throw std::invalid_argument("unknown criterion '" + id + "'");
    }
  }
  CriteriaConfig cfg = base;
  cfg.block_positive_attested = base.block_positive_attested || spec.block_positive_attested;

  WitnessReport report;
  report.name = spec.name;
  report.dims = w.dims();
  report.block_positive_attested = cfg.block_positive_attested;
  report.seed = cfg.seed;

  if (cfg.enabled(criterion::kNecessary)) report.verdicts.push_back(necessaryInequalities(w, cfg));
  if (cfg.enabled(criterion::kSpectral)) report.verdicts.push_back(spectralBounds(w, cfg));
  if (cfg.enabled(criterion::kKernel)) report.verdicts.push_back(kernelSchmidtCriterion(w, cfg));
  if (cfg.enabled(criterion::kTraceBound)) report.verdicts.push_back(traceBoundCriterion(w, cfg));
  if (cfg.enabled(criterion::kWeak)) report.verdicts.push_back(weakOptimalityCriterion(w, cfg));
  if (cfg.enabled(criterion::kSpanning)) {
    const int restarts = std::max(cfg.seesaw_restarts, 2 * w.dims().total());
    const SeesawResult seesaw =
        collectProductZeros(w, restarts, deriveSeed(cfg.seed, 0x55), cfg);
    if (seesaw.min_value < -cfg.zero_tol * scaleOf(w.matrix())) {
      CriterionVerdict v = makeVerdict(criterion::kSpanning);
      add(v, "min_product_value", seesaw.min_value);
      v.status = Status::NotBlockPositive;
      v.note = "seesaw found a product vector with negative expectation";
      v.certificates.push_back(
          {"product_vector",
           column(BipartiteVector::product(seesaw.minimizer.x, seesaw.minimizer.y).coords())});
      report.verdicts.push_back(std::move(v));
    } else {
      CriterionVerdict v = spanningCertificate(w, seesaw.zeros, cfg);
      v.evidence.insert(v.evidence.begin(), {"min_product_value", seesaw.min_value});
      report.verdicts.push_back(std::move(v));
    }
  }
  if (spec.source_map && spec.source_map->dimIn() == spec.source_map->dimOut()) {
    if (cfg.enabled(criterion::kMapTraceBounds)) {
      report.verdicts.push_back(mapTraceBounds(*spec.source_map, cfg));
    }
    if (cfg.enabled(criterion::kMapTraceOptimality)) {
      report.verdicts.push_back(mapTraceOptimality(*spec.source_map, cfg.map_unitary, cfg));
    }
  }
  report.overall = aggregate(report.verdicts);
  report.config = cfg;
  return report;
}

WitnessReport runOptimize(const WitnessSpec& spec, const OptimizerConfig& opt,
                          const CriteriaConfig& base) {
  CriteriaConfig cfg = base;
  cfg.block_positive_attested = base.block_positive_attested || spec.block_positive_attested;
  cfg.optimizer = opt;
  WitnessReport report;
  report.name = spec.name;
  report.dims = spec.witness.dims();
  report.block_positive_attested = cfg.block_positive_attested;
  report.seed = opt.seed;
  report.verdicts.push_back(witnessFunctionalCriterion(spec.witness, opt, cfg));
  report.overall = aggregate(report.verdicts);
  report.config = cfg;
  return report;
}

}  // namespace witopt

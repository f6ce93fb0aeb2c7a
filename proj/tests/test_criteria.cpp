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


#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "oracle.hpp"
#include "witopt/criteria.hpp"

namespace witopt {
namespace {

double maxDiff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

CriteriaConfig attested() {
  CriteriaConfig c;
  c.block_positive_attested = true;
  return c;
}

double ev(const CriterionVerdict& v, const std::string& key) {
  const auto value = v.evidenceValue(key);
  EXPECT_TRUE(value.has_value()) << key;
  return value.value_or(std::nan(""));
}

int oracleSchmidtRank(const ComplexVector& v, int m, int n) {
  oracle::Mat c(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) c(i, j) = v(i * n + j);
  Eigen::JacobiSVD<oracle::Mat> svd(c);
  const auto s = svd.singularValues();
  int r = 0;
  for (int i = 0; i < s.size(); ++i)
    if (s(i) > 1e-7 * s(0)) ++r;
  return r;
}

oracle::Mat randomInvertible(int n, std::mt19937_64& rng) {
  return oracle::randomMatrix(n, n, rng) + 3.0 * oracle::Mat::Identity(n, n);
}

// Rank-one witness |00><00| added to the flip: weakly optimal, no zero eigenvalue.
BipartiteOperator flipPlusCorner() {
  ComplexMatrix w = oracle::flip(2);
  w(0, 0) += 1.0;
  return {{2, 2}, w};
}

TEST(StatusNames, RoundTrip) {
  for (Status s : {Status::Inconclusive, Status::Consistent, Status::WeaklyOptimal,
                   Status::Optimal, Status::BoundViolated, Status::NotBlockPositive}) {
    EXPECT_EQ(statusFromString(toString(s)), s);
  }
  EXPECT_EQ(toString(Status::NotBlockPositive), "NOT_BLOCK_POSITIVE");
  EXPECT_FALSE(statusFromString("optimal").has_value());
  EXPECT_EQ(criterionIds().size(), 8u);
}

TEST(NecessaryInequalities, Reduction) {
  for (int n : {2, 3, 4}) {
    const CriterionVerdict v = necessaryInequalities(reductionWitness(n).witness);
    EXPECT_EQ(v.status, Status::Consistent);
    EXPECT_NEAR(ev(v, "lambda_min_second"), 0.0, 1e-12);
    EXPECT_NEAR(ev(v, "lambda_min_first"), 0.0, 1e-12);
  }
}

TEST(NecessaryInequalities, NegativeOperatorAndNonHermitian) {
  ComplexMatrix w = ComplexMatrix::Zero(4, 4);
  w(0, 0) = -1.0;
  const CriterionVerdict v = necessaryInequalities({{2, 2}, w});
  EXPECT_EQ(v.status, Status::NotBlockPositive);
  EXPECT_LT(ev(v, "trace"), 0.0);
  EXPECT_FALSE(v.note.empty());

  ComplexMatrix nh = ComplexMatrix::Identity(4, 4);
  nh(0, 1) = 1.0;
  EXPECT_THROW(necessaryInequalities({{2, 2}, nh}), NumericalError);
}

TEST(NecessaryInequalities, CatalogAndShift) {
  for (const std::string& name : catalogNames()) {
    const WitnessSpec s = catalogWitness(name, std::nullopt);
    EXPECT_EQ(necessaryInequalities(s.witness).status, Status::Consistent) << name;
    EXPECT_EQ(spectralBounds(s.witness).status, Status::Consistent) << name;
  }
  // A threshold above the witness scale turns every inequality negative.
  CriteriaConfig cfg;
  cfg.threshold_c = 10.0;
  EXPECT_EQ(necessaryInequalities(flipOperator(2), cfg).status, Status::NotBlockPositive);
  cfg.threshold_c = 0.0;
  EXPECT_EQ(necessaryInequalities(BipartiteOperator::identity({2, 3}), cfg).status,
            Status::Consistent);
}

TEST(NecessaryInequalities, DecomposableOperatorsPass) {
  std::mt19937_64 rng(51);
  for (int t = 0; t < 20; ++t) {
    const int m = 2 + t % 2, n = 2 + (t / 2) % 3;
    const oracle::Mat p = oracle::randomPsd(m * n, rng);
    const oracle::Mat q = oracle::transposeSecond(oracle::randomPsd(m * n, rng), m, n);
    const BipartiteOperator w({m, n}, p + q);
    EXPECT_EQ(necessaryInequalities(w).status, Status::Consistent);
    EXPECT_EQ(spectralBounds(w).status, Status::Consistent);
  }
}

TEST(SpectralBounds, TightExamplesAndViolation) {
  for (int n : {2, 3}) {
    const CriterionVerdict f = spectralBounds(flipOperator(n));
    EXPECT_EQ(f.status, Status::Consistent);
    EXPECT_NEAR(ev(f, "lambda_min"), -1.0, 1e-12);
    EXPECT_NEAR(ev(f, "bound_tr2"), -1.0, 1e-12);
    EXPECT_NEAR(ev(f, "margin"), 0.0, 1e-12);

    const CriterionVerdict r = spectralBounds(reductionWitness(n).witness);
    EXPECT_NEAR(ev(r, "lambda_min"), 1.0 - n, 1e-12);
    EXPECT_NEAR(ev(r, "bound_tr2"), -(n - 1.0), 1e-12);
  }
  EXPECT_EQ(spectralBounds(BipartiteOperator({2, 2}, -ComplexMatrix::Identity(4, 4))).status,
            Status::NotBlockPositive);
}

TEST(KernelSchmidt, FlipEvenOddAndReduction) {
  const CriteriaConfig cfg = attested();
  for (int n : {2, 4}) {
    const BipartiteOperator w = flipOperator(n);
    const CriterionVerdict v = kernelSchmidtCriterion(w, cfg);
    EXPECT_EQ(v.status, Status::Optimal) << n;
    const Certificate* c = v.certificate("kernel_vector");
    ASSERT_NE(c, nullptr);
    const oracle::Mat shifted =
        w.matrix() + oracle::kron(oracle::traceSecond(w.matrix(), n, n),
                                  oracle::Mat::Identity(n, n));
    EXPECT_LT((shifted * c->value.col(0)).norm(), 1e-8);
    EXPECT_EQ(oracleSchmidtRank(c->value.col(0), n, n), n);
  }

  const CriterionVerdict odd = kernelSchmidtCriterion(flipOperator(3), cfg);
  EXPECT_EQ(odd.status, Status::Inconclusive);
  EXPECT_EQ(ev(odd, "rank_found"), 2.0);
  EXPECT_EQ(ev(odd, "kernel_dim"), 3.0);

  for (int n : {2, 3, 5}) {
    const CriterionVerdict r = kernelSchmidtCriterion(reductionWitness(n).witness, cfg);
    EXPECT_EQ(r.status, Status::Optimal);
    EXPECT_EQ(ev(r, "kernel_dim"), 1.0);
    EXPECT_NEAR(ev(r, "smallest_coefficient"), 1.0 / std::sqrt(double(n)), 1e-10);
  }
}

TEST(KernelSchmidt, EmptyKernelAndAttestation) {
  const CriterionVerdict id = kernelSchmidtCriterion(BipartiteOperator::identity({2, 2}), attested());
  EXPECT_EQ(id.status, Status::Inconclusive);
  EXPECT_EQ(id.note, "empty kernel");

  const CriterionVerdict unattested = kernelSchmidtCriterion(flipOperator(2));
  EXPECT_EQ(unattested.status, Status::Consistent);
  EXPECT_NE(unattested.note.find("not attested"), std::string::npos);
}

TEST(KernelSchmidt, LocalTransformInvariance) {
  std::mt19937_64 rng(52);
  const CriteriaConfig cfg = attested();
  for (const WitnessSpec& s : {flipWitness(2), flipWitness(3), flipWitness(4),
                               reductionWitness(3), choiWitness()}) {
    const Status base = kernelSchmidtCriterion(s.witness, cfg).status;
    for (int t = 0; t < 3; ++t) {
      const BipartiteOperator moved =
          localTransform(s.witness, randomInvertible(s.witness.dimA(), rng));
      EXPECT_EQ(kernelSchmidtCriterion(moved, cfg).status, base) << s.name;
    }
  }
}

TEST(KernelSchmidt, Rectangular) {
  // Reduction-like operator on 2 (x) 3 built from the embedded Gamma.
  oracle::Vec g = oracle::Vec::Zero(6);
  g(0) = g(4) = 1.0;
  const BipartiteOperator w({2, 3}, ComplexMatrix(oracle::Mat::Identity(6, 6) - g * g.adjoint()));
  const CriterionVerdict v = kernelSchmidtCriterion(w, attested());
  EXPECT_EQ(ev(v, "target_rank"), 2.0);
  EXPECT_EQ(ev(v, "side"), 2.0);
}

TEST(TraceBound, ReductionAndBreuerHallOptimal) {
  const CriteriaConfig cfg = attested();
  for (int n : {2, 3, 4}) {
    const CriterionVerdict v = traceBoundCriterion(reductionWitness(n).witness, cfg);
    EXPECT_EQ(v.status, Status::Optimal);
    EXPECT_NEAR(ev(v, "target"), 1.0 - n, 1e-12);
    EXPECT_NEAR(ev(v, "value_at_gamma"), 1.0 - n, 1e-12);
  }
  for (int d : {4, 6}) {
    const WitnessSpec bh = breuerHallWitness(d);
    const CriterionVerdict v = traceBoundCriterion(bh.witness, cfg);
    EXPECT_EQ(v.status, Status::Optimal) << d;
    const Certificate* c = v.certificate("omega");
    ASSERT_NE(c, nullptr);
    const ComplexVector o = c->value.col(0);
    EXPECT_NEAR((o.adjoint() * bh.witness.matrix() * o)(0, 0).real(),
                -bh.witness.matrix().trace().real() / d, 1e-7);
    EXPECT_EQ(oracleSchmidtRank(o, d, d), d);
  }
  // Sub-unitary U: value at Gamma/sqrt(2n) is 1 + tr(U^dagger U)/(2n) - 2n.
  const ComplexMatrix u = 0.5 * defaultAntisymmetricUnitary(4);
  const CriterionVerdict sub = traceBoundCriterion(breuerHallWitness(4, u).witness, cfg);
  EXPECT_NEAR(ev(sub, "value_at_gamma"), 1.0 + 1.0 / 4.0 - 4.0, 1e-12);
  EXPECT_EQ(sub.status, Status::Optimal);
}

TEST(TraceBound, ChoiInconclusive) {
  const CriterionVerdict v = traceBoundCriterion(choiWitness().witness, attested());
  EXPECT_EQ(v.status, Status::Inconclusive);
  EXPECT_NEAR(ev(v, "value_at_gamma"), -1.0, 1e-12);
  EXPECT_NEAR(ev(v, "target"), -3.0, 1e-12);
  EXPECT_GT(ev(v, "lambda_min"), -3.0);
  EXPECT_EQ(ev(v, "eigenspace_dim"), 0.0);
}

TEST(TraceBound, InequalityHoldsOnRandomMaximallyEntangled) {
  std::mt19937_64 rng(53);
  for (const std::string& name : catalogNames()) {
    const WitnessSpec s = catalogWitness(name, std::nullopt);
    const int n = s.witness.dimA();
    const double bound = -s.witness.matrix().trace().real() / n;
    double lo = 1e300;
    for (int t = 0; t < 1000; ++t) {
      Eigen::HouseholderQR<oracle::Mat> qr(oracle::randomMatrix(n, n, rng));
      const oracle::Mat q = qr.householderQ();
      const oracle::Vec o = oracle::kron(oracle::Mat::Identity(n, n), q) * oracle::gamma(n) /
                            std::sqrt(double(n));
      lo = std::min(lo, (o.adjoint() * s.witness.matrix() * o)(0, 0).real());
    }
    EXPECT_GE(lo, bound - 1e-9) << name;
    EXPECT_NE(traceBoundCriterion(s.witness, attested()).status, Status::BoundViolated) << name;
  }
}

TEST(TraceBound, ViolationFlagged) {
  // 0.1 - |Gamma><Gamma| dips below -tr/n on maximally entangled states.
  const oracle::Vec g = oracle::gamma(2);
  const BipartiteOperator w({2, 2}, ComplexMatrix(0.1 * oracle::Mat::Identity(4, 4) - g * g.adjoint()));
  const CriterionVerdict v = traceBoundCriterion(w, attested());
  EXPECT_EQ(v.status, Status::BoundViolated);
  EXPECT_NE(v.certificate("violating_state"), nullptr);
}

TEST(WeakOptimality, Examples) {
  const CriteriaConfig cfg = attested();
  EXPECT_EQ(weakOptimalityCriterion(BipartiteOperator::identity({2, 2}), cfg).status,
            Status::Inconclusive);
  EXPECT_EQ(weakOptimalityCriterion(flipPlusCorner(), cfg).status, Status::Inconclusive);
  for (int n : {2, 3}) {
    const BipartiteOperator w = reductionWitness(n).witness;
    const CriterionVerdict v = weakOptimalityCriterion(w, cfg);
    EXPECT_EQ(v.status, Status::WeaklyOptimal);
    const Certificate* c = v.certificate("zero_eigenvector");
    ASSERT_NE(c, nullptr);
    const oracle::Mat shifted =
        w.matrix() + oracle::kron(oracle::traceSecond(w.matrix(), n, n),
                                  oracle::Mat::Identity(n, n));
    EXPECT_LT((shifted * c->value.col(0)).norm(), 1e-10);
  }
  EXPECT_EQ(weakOptimalityCriterion(reductionWitness(2).witness).status, Status::Consistent);
}

TEST(Seesaw, FlipIdentityAndBrokenChoi) {
  const SeesawResult f = collectProductZeros(flipOperator(2), 32, 7);
  EXPECT_GE(f.zeros.size(), 4u);
  for (const ProductZero& z : f.zeros) {
    const oracle::Vec p = oracle::kron(z.x, z.y);
    EXPECT_LE((p.adjoint() * oracle::flip(2) * p)(0, 0).real(), 1e-9);
    EXPECT_NEAR(p.norm(), 1.0, 1e-12);
  }
  EXPECT_EQ(spanningCertificate(flipOperator(2), f.zeros, attested()).status, Status::Optimal);

  const SeesawResult id = collectProductZeros(BipartiteOperator::identity({2, 3}), 8, 7);
  EXPECT_TRUE(id.zeros.empty());
  EXPECT_NEAR(id.min_value, 1.0, 1e-12);

  ComplexMatrix broken = choiWitness().witness.matrix();
  for (int idx : {1, 5, 6}) broken(idx, idx) -= 3.0;
  const SeesawResult b = collectProductZeros({{3, 3}, broken}, 16, 7);
  EXPECT_LT(b.min_value, -1e-3);
  std::mt19937_64 rng(54);
  EXPECT_LE(b.min_value, oracle::productMinBySampling(broken, 3, 3, 2000, rng) + 1e-9);
}

TEST(Seesaw, DeterministicForSeed) {
  const BipartiteOperator w = choiWitness().witness;
  const SeesawResult a = collectProductZeros(w, 10, 99);
  const SeesawResult b = collectProductZeros(w, 10, 99);
  EXPECT_EQ(a.min_value, b.min_value);
  EXPECT_EQ(a.zeros.size(), b.zeros.size());
  EXPECT_THROW(collectProductZeros(w, 0, 1), std::invalid_argument);
}

std::vector<ProductZero> appendixZeros() {
  const double r = 1.0 / std::sqrt(2.0);
  ComplexVector k0(2), k1(2), plus(2), minus(2), right(2), left(2);
  k0 << 1.0, 0.0;
  k1 << 0.0, 1.0;
  plus << r, r;
  minus << r, -r;
  right << r, Complex(0.0, r);
  left << r, Complex(0.0, -r);
  return {{k0, k1, 0.0}, {k1, k0, 0.0}, {plus, minus, 0.0}, {right, left, 0.0}};
}

TEST(Spanning, AppendixState) {
  const CriterionVerdict v = spanningCertificate(flipOperator(2), appendixZeros(), attested());
  EXPECT_EQ(v.status, Status::Optimal);
  EXPECT_EQ(ev(v, "span_dim"), 4.0);
  const Certificate* c = v.certificate("rho");
  ASSERT_NE(c, nullptr);
  const Complex i(0.0, 1.0);
  oracle::Mat expected(4, 4);
  expected << 2.0, -1.0 + i, 1.0 - i, 0.0,  //
      -1.0 - i, 6.0, -2.0, 1.0 - i,         //
      1.0 + i, -2.0, 6.0, -1.0 + i,         //
      0.0, 1.0 + i, -1.0 - i, 2.0;
  EXPECT_LT(maxDiff(16.0 * c->value, expected), 1e-12);
  EXPECT_NEAR((c->value * oracle::flip(2)).trace().real(), 0.0, 1e-14);
  EXPECT_GT(oracle::jacobiEigenvalues(c->value)(0), 1e-3);
}

TEST(Spanning, HyperplaneAndRejectedZero) {
  std::vector<ProductZero> three = appendixZeros();
  three.pop_back();
  const CriterionVerdict v = spanningCertificate(flipOperator(2), three, attested());
  EXPECT_EQ(v.status, Status::Inconclusive);
  EXPECT_EQ(ev(v, "span_dim"), 3.0);

  std::vector<ProductZero> bad = appendixZeros();
  bad[0].y = bad[0].x;  // |00>, value 1
  EXPECT_THROW(spanningCertificate(flipOperator(2), bad), std::invalid_argument);
  EXPECT_EQ(spanningCertificate(flipOperator(2), {}, attested()).status, Status::Inconclusive);
}

std::vector<WeightedProduct> weighted(const std::vector<double>& w) {
  std::vector<WeightedProduct> out;
  const auto zeros = appendixZeros();
  for (std::size_t i = 0; i < zeros.size(); ++i) out.push_back({w[i], zeros[i].x, zeros[i].y});
  return out;
}

BipartiteOperator assemble(const std::vector<WeightedProduct>& terms) {
  ComplexMatrix rho = ComplexMatrix::Zero(4, 4);
  for (const auto& t : terms) {
    const oracle::Vec p = oracle::kron(t.x, t.y);
    rho += t.weight * p * p.adjoint();
  }
  return {{2, 2}, rho};
}

TEST(SpanningFromState, AppendixAndReweighting) {
  const auto equal = weighted({0.25, 0.25, 0.25, 0.25});
  const CriterionVerdict v = spanningFromSeparableState(flipOperator(2), assemble(equal), equal,
                                                        attested());
  EXPECT_EQ(v.status, Status::Optimal);
  EXPECT_EQ(ev(v, "rho_rank"), 4.0);

  std::mt19937_64 rng(55);
  std::uniform_real_distribution<double> u(0.05, 1.0);
  for (int t = 0; t < 5; ++t) {
    std::vector<double> p = {u(rng), u(rng), u(rng), u(rng)};
    const double s = p[0] + p[1] + p[2] + p[3];
    for (double& x : p) x /= s;
    const auto terms = weighted(p);
    const CriterionVerdict r =
        spanningFromSeparableState(flipOperator(2), assemble(terms), terms, attested());
    EXPECT_EQ(r.status, Status::Optimal);
    EXPECT_NEAR(ev(r, "trace_w_rho"), 0.0, 1e-14);
  }
}

TEST(SpanningFromState, MixedIdentityAndErrors) {
  std::vector<WeightedProduct> basis;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      basis.push_back({0.25, ComplexVector::Unit(2, i), ComplexVector::Unit(2, j)});
  const BipartiteOperator mixed({2, 2}, ComplexMatrix(0.25 * ComplexMatrix::Identity(4, 4)));
  const CriterionVerdict v = spanningFromSeparableState(BipartiteOperator::identity({2, 2}), mixed,
                                                        basis, attested());
  EXPECT_EQ(v.status, Status::Inconclusive);
  EXPECT_NEAR(ev(v, "trace_w_rho"), 1.0, 1e-14);

  const std::vector<WeightedProduct> one = {{1.0, ComplexVector::Unit(2, 0), ComplexVector::Unit(2, 1)}};
  EXPECT_THROW(spanningFromSeparableState(flipOperator(2), assemble(one), one), NumericalError);

  auto wrong = weighted({0.25, 0.25, 0.25, 0.25});
  const BipartiteOperator rho = assemble(wrong);
  wrong[0].weight = 0.3;
  wrong[1].weight = 0.2;
  EXPECT_THROW(spanningFromSeparableState(flipOperator(2), rho, wrong), NumericalError);
}

TEST(SpanningFromState, NegativeTermDetected) {
  // F - 0.1 I is not block-positive; |01> has value -0.1.
  const BipartiteOperator w({2, 2}, ComplexMatrix(oracle::flip(2) - 0.1 * oracle::Mat::Identity(4, 4)));
  const auto terms = weighted({0.25, 0.25, 0.25, 0.25});
  EXPECT_EQ(spanningFromSeparableState(w, assemble(terms), terms, attested()).status,
            Status::NotBlockPositive);
}

TEST(MapTraceBounds, Examples) {
  for (int n : {2, 3, 4}) {
    const CriterionVerdict r = mapTraceBounds(SuperOperator::reduction(n));
    EXPECT_EQ(r.status, Status::Consistent);
    EXPECT_DOUBLE_EQ(ev(r, "trace"), n - n * n);
    EXPECT_DOUBLE_EQ(ev(r, "bound_image_trace"), n - n * n);
    EXPECT_EQ(ev(r, "saturated"), 1.0);

    const CriterionVerdict scaled = mapTraceBounds(SuperOperator::reduction(n).scaled(1.0 / (n - 1)));
    EXPECT_EQ(ev(scaled, "trace_preserving"), 1.0);
    EXPECT_NEAR(ev(scaled, "trace"), -n, 1e-12);
    EXPECT_NEAR(ev(scaled, "bound_channel"), -n, 1e-12);

    const CriterionVerdict id = mapTraceBounds(SuperOperator::identity(n));
    EXPECT_EQ(id.status, Status::Consistent);
    EXPECT_DOUBLE_EQ(ev(id, "trace"), n * n);
  }
  EXPECT_EQ(mapTraceBounds(SuperOperator::identity(2).scaled(-1.0)).status,
            Status::NotBlockPositive);
  EXPECT_THROW(mapTraceBounds(SuperOperator::fromKraus({1.0}, {ComplexMatrix::Ones(2, 3)})),
               DimensionError);
}

TEST(MapTraceBounds, DictionaryWithChoiMatrix) {
  std::mt19937_64 rng(56);
  for (int t = 0; t < 5; ++t) {
    const int n = 2 + t % 3;
    const SuperOperator s(BipartiteOperator({n, n}, oracle::randomHermitian(n * n, rng)));
    const oracle::Vec g = oracle::gamma(n);
    EXPECT_NEAR(ev(mapTraceBounds(s), "trace"),
                (g.adjoint() * s.choi().matrix() * g)(0, 0).real(), 1e-10);
  }
}

TEST(MapTraceOptimality, Examples) {
  const CriteriaConfig cfg = attested();
  for (int n : {2, 3, 4}) {
    EXPECT_EQ(mapTraceOptimality(SuperOperator::reduction(n), std::nullopt, cfg).status,
              Status::Optimal);
  }
  const CriterionVerdict t2 = mapTraceOptimality(SuperOperator::transpose(2), pauliY(), cfg);
  EXPECT_EQ(t2.status, Status::Optimal);
  EXPECT_NEAR(ev(t2, "value"), -2.0, 1e-14);

  const CriterionVerdict t3 =
      mapTraceOptimality(SuperOperator::transpose(3), analyticConjTraceMinimizer(3), cfg);
  EXPECT_EQ(t3.status, Status::Inconclusive);
  EXPECT_NEAR(ev(t3, "value"), -1.0, 1e-14);
  EXPECT_NEAR(ev(t3, "target"), -3.0, 1e-14);

  for (const WitnessSpec& s : {robertsonGen1(2), robertsonGen1(3), robertsonGen2(4)}) {
    const CriterionVerdict v = mapTraceOptimality(*s.source_map, std::nullopt, cfg);
    EXPECT_EQ(v.status, Status::Optimal) << s.name;
    EXPECT_NEAR(superoperatorTrace(*s.source_map), -s.source_map->dimIn(), 1e-12);
  }

  EXPECT_THROW(mapTraceOptimality(SuperOperator::reduction(2), 2.0 * pauliY(), cfg),
               NumericalError);
  EXPECT_EQ(mapTraceOptimality(SuperOperator::identity(2).scaled(-1.0), std::nullopt, cfg).status,
            Status::NotBlockPositive);
}

TEST(WitnessFunctionalCriterion, Examples) {
  OptimizerConfig opt;
  opt.restarts = 8;
  opt.gradient_mode = GradientMode::Analytic;
  const CriteriaConfig cfg = attested();
  const CriterionVerdict red = witnessFunctionalCriterion(reductionWitness(3).witness, opt, cfg);
  EXPECT_EQ(red.status, Status::Optimal);
  EXPECT_NEAR(ev(red, "best_value"), -2.0, 1e-9);

  const CriterionVerdict f3 = witnessFunctionalCriterion(flipOperator(3), opt, cfg);
  EXPECT_EQ(f3.status, Status::Inconclusive);
  EXPECT_NEAR(ev(f3, "best_value"), -1.0 / 3.0, 1e-8);
  EXPECT_NEAR(ev(f3, "gap"), 2.0 / 3.0, 1e-8);

  const CriterionVerdict f2 = witnessFunctionalCriterion(flipOperator(2), opt, cfg);
  EXPECT_EQ(f2.status, Status::Optimal);
  const Certificate* u = f2.certificate("unitary");
  ASSERT_NE(u, nullptr);
  EXPECT_NEAR((u->value.conjugate() * u->value).trace().real(), -2.0, 1e-8);

  const CriterionVerdict c = witnessFunctionalCriterion(choiWitness().witness, opt, cfg);
  EXPECT_EQ(c.status, Status::Inconclusive);
  EXPECT_GT(ev(c, "gap"), 1.0);
}

CriterionVerdict with(const char* id, Status s) {
  CriterionVerdict v;
  v.criterion_id = id;
  v.status = s;
  return v;
}

TEST(Aggregate, Order) {
  using S = Status;
  EXPECT_EQ(aggregate({}), S::Inconclusive);
  EXPECT_EQ(aggregate({with("a", S::Inconclusive), with("b", S::Consistent)}), S::Consistent);
  EXPECT_EQ(aggregate({with("a", S::WeaklyOptimal), with("b", S::Consistent)}), S::WeaklyOptimal);
  EXPECT_EQ(aggregate({with("a", S::WeaklyOptimal), with("b", S::Optimal)}), S::Optimal);
  EXPECT_EQ(aggregate({with("a", S::Optimal), with("b", S::NotBlockPositive)}),
            S::NotBlockPositive);
  EXPECT_EQ(aggregate({with("a", S::Optimal), with("b", S::BoundViolated)}), S::BoundViolated);
  EXPECT_EQ(aggregate({with("a", S::BoundViolated), with("b", S::NotBlockPositive)}),
            S::NotBlockPositive);
}

TEST(RunAll, FlipFourOptimalViaKernel) {
  const WitnessReport r = runAll(flipWitness(4), {});
  EXPECT_EQ(r.overall, Status::Optimal);
  EXPECT_EQ(r.verdict(criterion::kKernel)->status, Status::Optimal);
  EXPECT_TRUE(r.block_positive_attested);
}

TEST(RunAll, FlipThreeOptimalOnlyViaSpanning) {
  const WitnessReport r = runAll(flipWitness(3), {});
  EXPECT_EQ(r.overall, Status::Optimal);
  EXPECT_EQ(r.verdict(criterion::kKernel)->status, Status::Inconclusive);
  EXPECT_EQ(r.verdict(criterion::kTraceBound)->status, Status::Inconclusive);
  const CriterionVerdict* span = r.verdict(criterion::kSpanning);
  ASSERT_NE(span, nullptr);
  EXPECT_EQ(span->status, Status::Optimal);
  const Certificate* rho = span->certificate("rho");
  ASSERT_NE(rho, nullptr);
  EXPECT_GT(oracle::jacobiEigenvalues(rho->value)(0), 0.0);
  EXPECT_LE(std::abs((oracle::flip(3) * rho->value).trace().real()), 1e-8);
  EXPECT_NEAR(rho->value.trace().real(), 1.0, 1e-12);
}

TEST(RunAll, ChoiNotOptimal) {
  const WitnessReport r = runAll(choiWitness(), {});
  EXPECT_TRUE(r.overall == Status::Consistent || r.overall == Status::Inconclusive);
  EXPECT_NE(r.verdict(criterion::kSpanning)->status, Status::Optimal);
}

TEST(RunAll, SubsetDeterminismAndErrors) {
  CriteriaConfig cfg;
  cfg.criteria = {criterion::kNecessary, criterion::kSpanning};
  const WitnessReport a = runAll(reductionWitness(3), cfg);
  ASSERT_EQ(a.verdicts.size(), 2u);
  EXPECT_EQ(a.verdicts[0].criterion_id, criterion::kNecessary);
  EXPECT_EQ(a.verdicts[1].criterion_id, criterion::kSpanning);
  const WitnessReport b = runAll(reductionWitness(3), cfg);
  EXPECT_EQ(a.verdicts[1].evidence, b.verdicts[1].evidence);

  cfg.criteria = {"bogus"};
  EXPECT_THROW(runAll(reductionWitness(3), cfg), std::invalid_argument);
}

TEST(RunAll, UnattestedUserMatrixIsCapped) {
  WitnessSpec s{"user", flipOperator(2), std::nullopt, false};
  const WitnessReport r = runAll(s, {});
  EXPECT_EQ(r.overall, Status::Consistent);
  EXPECT_FALSE(r.block_positive_attested);
  CriteriaConfig cfg;
  cfg.block_positive_attested = true;
  EXPECT_EQ(runAll(s, cfg).overall, Status::Optimal);
}

TEST(RunAll, NonBlockPositiveDetected) {
  WitnessSpec s{"neg", BipartiteOperator({2, 2}, ComplexMatrix(oracle::flip(2) -
                                                               0.1 * oracle::Mat::Identity(4, 4))),
                std::nullopt, false};
  const WitnessReport r = runAll(s, {});
  EXPECT_EQ(r.overall, Status::NotBlockPositive);
  const CriterionVerdict* span = r.verdict(criterion::kSpanning);
  ASSERT_NE(span, nullptr);
  EXPECT_EQ(span->status, Status::NotBlockPositive);
  const Certificate* p = span->certificate("product_vector");
  ASSERT_NE(p, nullptr);
  EXPECT_LT((p->value.col(0).adjoint() * s.witness.matrix() * p->value.col(0))(0, 0).real(), 0.0);
}

TEST(RunOptimize, Reduction) {
  OptimizerConfig opt;
  opt.restarts = 4;
  opt.seed = 17;
  const WitnessReport r = runOptimize(reductionWitness(3), opt, {});
  EXPECT_EQ(r.overall, Status::Optimal);
  EXPECT_EQ(r.seed, 17u);
  ASSERT_EQ(r.verdicts.size(), 1u);
  EXPECT_EQ(r.verdicts[0].criterion_id, criterion::kWitnessFunctional);
}

}  // namespace
}  // namespace witopt

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

#include <functional>
#include <optional>
#include <vector>

#include "witopt/tensor.hpp"

namespace witopt {

/// Linear map C^{in x in} -> C^{out x out}, stored as its Choi matrix
/// C(Phi) = sum_jk |j><k| (x) Phi(|j><k|) on C^in (x) C^out.
class SuperOperator {
 public:
  SuperOperator() = default;
  explicit SuperOperator(BipartiteOperator choi);

  /// Tabulates the map on matrix units.
  static SuperOperator fromFunction(
      int dim_in, int dim_out,
      const std::function<ComplexMatrix(const ComplexMatrix&)>& phi);

  /// Sum of alpha_i K_i X K_i^dagger.
  static SuperOperator fromKraus(const std::vector<double>& weights,
                                 const std::vector<ComplexMatrix>& ops);

  static SuperOperator identity(int n);
  static SuperOperator transpose(int n);
  /// X -> tr(X) 1 - X
  static SuperOperator reduction(int n);

  int dimIn() const { return choi_.dimA(); }
  int dimOut() const { return choi_.dimB(); }
  const BipartiteOperator& choi() const { return choi_; }

  /// Phi(X) = tr_1((X^T (x) 1) C(Phi)).
  ComplexMatrix apply(const ComplexMatrix& x) const;

  SuperOperator scaled(double factor) const;

 private:
  BipartiteOperator choi_;
};

struct KrausDecomposition {
  std::vector<double> weights;
  std::vector<ComplexMatrix> operators;  // pairwise Hilbert-Schmidt orthogonal

  ComplexMatrix apply(const ComplexMatrix& x) const;
};

struct ChannelProperties {
  bool hermitian_preserving = false;
  bool completely_positive = false;
  bool trace_preserving = false;
  bool unital = false;
  int choi_rank = 0;
  bool full_choi_rank = false;
};

struct CompressionResult {
  SuperOperator map;
  // False when X lacked full column rank; the full-Choi-rank guarantee then
  // does not carry over.
  bool full_rank_input = true;
};

enum class PptStatus { Ppt, Npt };

struct PptVerdict {
  PptStatus status = PptStatus::Ppt;
  double min_eigenvalue = 0.0;
  // True only for 2x2, 2x3 and 3x2, where PPT is equivalent to separability.
  bool separability_decided = false;
  bool separable = false;
};

ComplexMatrix applyMap(const SuperOperator& s, const ComplexMatrix& x);

/// Choi matrix of the Hilbert-Schmidt adjoint, F C(Phi)^T F.
SuperOperator adjoint(const SuperOperator& s);

/// Side::Second applies id (x) Phi, Side::First applies Phi^dagger (x) id.
BipartiteOperator extendApply(const SuperOperator& s, const BipartiteOperator& w,
                              Side side);

/// sum_jk <j|Phi(|j><k|)|k> = <Gamma|C(Phi)|Gamma>. Real part for
/// Hermitian-preserving maps.
double superoperatorTrace(const SuperOperator& s);
Complex superoperatorTraceComplex(const SuperOperator& s);

KrausDecomposition krausDecompose(const SuperOperator& s, double tol = kRankTol);

ChannelProperties channelProperties(const SuperOperator& s,
                                    double tol = kRankTol);

/// X -> (1 - p) X + p tr(X) 1/n. The default p = n/(n+1) gives the
/// entanglement-breaking channel (X + tr(X) 1)/(n+1) with full Choi rank.
SuperOperator depolarizingChannel(int n, std::optional<double> p = std::nullopt);

/// Returns X^dagger Psi(.) X, whose Choi matrix is
/// (1 (x) X)^dagger C(Psi) (1 (x) X).
CompressionResult compressChannel(const SuperOperator& s, const ComplexMatrix& x,
                                  double tol = kRankTol);

/// Inverse Choi: the map whose Choi matrix is w.
SuperOperator choiInverse(const BipartiteOperator& w);

PptVerdict pptCheck(const BipartiteOperator& rho, double tol = kRankTol);

}  // namespace witopt

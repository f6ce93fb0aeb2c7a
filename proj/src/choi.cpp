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

#include "witopt/choi.hpp"

#include <cmath>

namespace witopt {

namespace {

ComplexMatrix matrixUnit(int n, int j, int k) {
  ComplexMatrix e = ComplexMatrix::Zero(n, n);
  e(j, k) = 1.0;
  return e;
}

}  // namespace

SuperOperator::SuperOperator(BipartiteOperator choi) : choi_(std::move(choi)) {}

SuperOperator SuperOperator::fromFunction(
    int dim_in, int dim_out,
    const std::function<ComplexMatrix(const ComplexMatrix&)>& phi) {
  if (dim_in < 1 || dim_out < 1) throw DimensionError("map dims must be >= 1");
  ComplexMatrix c(dim_in * dim_out, dim_in * dim_out);
  for (int j = 0; j < dim_in; ++j) {
    for (int k = 0; k < dim_in; ++k) {
      const ComplexMatrix y = phi(matrixUnit(dim_in, j, k));
      if (y.rows() != dim_out || y.cols() != dim_out) {
        throw DimensionError("map returned a matrix of the wrong size");
      }
      c.block(j * dim_out, k * dim_out, dim_out, dim_out) = y;
    }
  }
  return SuperOperator(BipartiteOperator(Dims{dim_in, dim_out}, std::move(c)));
}

SuperOperator SuperOperator::fromKraus(const std::vector<double>& weights,
                                       const std::vector<ComplexMatrix>& ops) {
  if (ops.empty() || weights.size() != ops.size()) {
    throw std::invalid_argument("fromKraus: need matching non-empty lists");
  }
  const auto out = static_cast<int>(ops.front().rows());
  const auto in = static_cast<int>(ops.front().cols());
  ComplexMatrix c = ComplexMatrix::Zero(in * out, in * out);
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (ops[i].rows() != out || ops[i].cols() != in) {
      throw DimensionError("fromKraus: Kraus operators differ in shape");
    }
    const ComplexVector v = vec(ops[i]).coords();
    c += weights[i] * v * v.adjoint();
  }
  return SuperOperator(BipartiteOperator(Dims{in, out}, std::move(c)));
}

SuperOperator SuperOperator::identity(int n) {
  const ComplexVector g = gammaVector(n).coords();
  return SuperOperator(BipartiteOperator(Dims{n, n}, g * g.adjoint()));
}

SuperOperator SuperOperator::transpose(int n) {
  return SuperOperator(flipOperator(n));
}

SuperOperator SuperOperator::reduction(int n) {
  const ComplexVector g = gammaVector(n).coords();
  ComplexMatrix c = ComplexMatrix::Identity(n * n, n * n) - g * g.adjoint();
  return SuperOperator(BipartiteOperator(Dims{n, n}, std::move(c)));
}

ComplexMatrix SuperOperator::apply(const ComplexMatrix& x) const {
  const int in = dimIn();
  const int out = dimOut();
  if (x.rows() != in || x.cols() != in) {
    throw DimensionError("applyMap: input must be dim_in x dim_in");
  }
  const ComplexMatrix& c = choi_.matrix();
  ComplexMatrix y = ComplexMatrix::Zero(out, out);
  for (int j = 0; j < in; ++j) {
    for (int k = 0; k < in; ++k) {
      if (x(j, k) != Complex(0.0)) {
        y += x(j, k) * c.block(j * out, k * out, out, out);
      }
    }
  }
  return y;
}

SuperOperator SuperOperator::scaled(double factor) const {
  return SuperOperator(BipartiteOperator(choi_.dims(), factor * choi_.matrix()));
}

ComplexMatrix KrausDecomposition::apply(const ComplexMatrix& x) const {
  if (operators.empty()) {
    throw std::logic_error("empty Kraus decomposition has no output shape");
  }
  ComplexMatrix y = ComplexMatrix::Zero(operators.front().rows(),
                                        operators.front().rows());
  for (std::size_t i = 0; i < operators.size(); ++i) {
    y += weights[i] * operators[i] * x * operators[i].adjoint();
  }
  return y;
}

ComplexMatrix applyMap(const SuperOperator& s, const ComplexMatrix& x) {
  return s.apply(x);
}

SuperOperator adjoint(const SuperOperator& s) {
  const int in = s.dimIn();
  const int out = s.dimOut();
  const ComplexMatrix f = swapOperator(Dims{in, out});
  ComplexMatrix c = f * s.choi().matrix().transpose() * f.adjoint();
  return SuperOperator(BipartiteOperator(Dims{out, in}, std::move(c)));
}

BipartiteOperator extendApply(const SuperOperator& s, const BipartiteOperator& w,
                              Side side) {
  const int in = s.dimIn();
  const int out = s.dimOut();
  const ComplexMatrix& x = w.matrix();
  if (side == Side::Second) {
    if (w.dimB() != in) {
      throw DimensionError("extendApply: second factor must match dim_in");
    }
    const int m = w.dimA();
    ComplexMatrix y(m * out, m * out);
    for (int i = 0; i < m; ++i) {
      for (int k = 0; k < m; ++k) {
        y.block(i * out, k * out, out, out) = s.apply(x.block(i * in, k * in, in, in));
      }
    }
    return {Dims{m, out}, std::move(y)};
  }
  // Phi^dagger acts C^{out x out} -> C^{in x in} on the first factor.
  if (w.dimA() != out) {
    throw DimensionError("extendApply: first factor must match dim_out");
  }
  const SuperOperator adj = adjoint(s);
  const int b = w.dimB();
  ComplexMatrix y = ComplexMatrix::Zero(in * b, in * b);
  for (int j = 0; j < b; ++j) {
    for (int l = 0; l < b; ++l) {
      ComplexMatrix block(out, out);
      for (int i = 0; i < out; ++i) {
        for (int k = 0; k < out; ++k) block(i, k) = x(i * b + j, k * b + l);
      }
      const ComplexMatrix mapped = adj.apply(block);
      for (int i = 0; i < in; ++i) {
        for (int k = 0; k < in; ++k) y(i * b + j, k * b + l) = mapped(i, k);
      }
    }
  }
  return {Dims{in, b}, std::move(y)};
}

Complex superoperatorTraceComplex(const SuperOperator& s) {
  if (s.dimIn() != s.dimOut()) {
    throw DimensionError("superoperator trace needs a square map");
  }
  const int n = s.dimIn();
  const ComplexMatrix& c = s.choi().matrix();
  Complex t = 0.0;
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) t += c(j * n + j, k * n + k);
  }
  return t;
}

double superoperatorTrace(const SuperOperator& s) {
  return superoperatorTraceComplex(s).real();
}

KrausDecomposition krausDecompose(const SuperOperator& s, double tol) {
  const EigenDecomposition ed = hermitianEig(s.choi().matrix());
  const double scale = ed.eigenvalues.cwiseAbs().maxCoeff();
  KrausDecomposition out;
  const Dims dims = s.choi().dims();
  for (Eigen::Index k = 0; k < ed.eigenvalues.size(); ++k) {
    const double lambda = ed.eigenvalues(k);
    if (scale == 0.0 || std::abs(lambda) <= tol * scale) continue;
    out.weights.push_back(lambda);
    out.operators.push_back(unvec(ed.eigenvectors.col(k), dims));
  }
  return out;
}

ChannelProperties channelProperties(const SuperOperator& s, double tol) {
  ChannelProperties p;
  const ComplexMatrix& c = s.choi().matrix();
  p.hermitian_preserving = isHermitian(c);
  p.choi_rank = numericalRank(c, tol);
  p.full_choi_rank = p.choi_rank == c.rows();
  const double scale = std::max(1.0, c.cwiseAbs().maxCoeff());
  const auto near = [&](const ComplexMatrix& a, const ComplexMatrix& b) {
    return (a - b).cwiseAbs().maxCoeff() <= 1e-10 * scale;
  };
  p.trace_preserving =
      near(partialTrace(s.choi(), Side::Second),
           ComplexMatrix::Identity(s.dimIn(), s.dimIn()));
  p.unital = near(partialTrace(s.choi(), Side::First),
                  ComplexMatrix::Identity(s.dimOut(), s.dimOut()));
  p.completely_positive = p.hermitian_preserving && isPsd(c, tol).psd;
  return p;
}

SuperOperator depolarizingChannel(int n, std::optional<double> p) {
  if (n < 1) throw DimensionError("depolarizing channel needs n >= 1");
  const double prob = p.value_or(static_cast<double>(n) / (n + 1));
  if (!(prob >= 0.0 && prob <= 1.0)) {
    throw std::invalid_argument("depolarizing probability must lie in [0, 1]");
  }
  const ComplexVector g = gammaVector(n).coords();
  ComplexMatrix c = (1.0 - prob) * (g * g.adjoint()) +
                    (prob / n) * ComplexMatrix::Identity(n * n, n * n);
  return SuperOperator(BipartiteOperator(Dims{n, n}, std::move(c)));
}

CompressionResult compressChannel(const SuperOperator& s, const ComplexMatrix& x,
                                  double tol) {
  if (x.rows() != s.dimOut()) {
    throw DimensionError("compressChannel: X must have dim_out rows");
  }
  const auto mp = static_cast<int>(x.cols());
  const ComplexMatrix lift =
      kron(ComplexMatrix::Identity(s.dimIn(), s.dimIn()), x);
  ComplexMatrix c = lift.adjoint() * s.choi().matrix() * lift;
  CompressionResult r{
      SuperOperator(BipartiteOperator(Dims{s.dimIn(), mp}, std::move(c))),
      numericalRank(x, tol) == mp};
  return r;
}

SuperOperator choiInverse(const BipartiteOperator& w) { return SuperOperator(w); }

PptVerdict pptCheck(const BipartiteOperator& rho, double tol) {
  const PsdCheck state = isPsd(rho.matrix(), tol);
  if (!state.psd) throw NumericalError("pptCheck: input is not PSD");
  const PsdCheck pt = isPsd(partialTranspose(rho, Side::Second).matrix(), tol);
  PptVerdict v;
  v.status = pt.psd ? PptStatus::Ppt : PptStatus::Npt;
  v.min_eigenvalue = pt.min_eigenvalue;
  const int m = rho.dimA();
  const int n = rho.dimB();
  const bool small = (m == 2 && (n == 2 || n == 3)) || (m == 3 && n == 2);
  if (!pt.psd) {
    v.separability_decided = true;
    v.separable = false;
  } else if (small) {
    v.separability_decided = true;
    v.separable = true;
  }
  return v;
}

}  // namespace witopt

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

#include "witopt/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace witopt {

namespace {

void requireFinite(const ComplexMatrix& m, const char* what) {
  if (!m.allFinite()) {
    throw NumericalError(std::string(what) + ": non-finite entries");
  }
}

double maxAbsEntry(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

// Rotate the vector so its dominant component is real and positive.
void fixPhase(Eigen::Ref<ComplexVector> v) {
  Eigen::Index best = 0;
  double best_abs = -1.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    // A tiny slack keeps the choice stable when magnitudes tie up to rounding.
    const double a = std::abs(v(i));
    if (a > best_abs * (1.0 + 1e-12) + 1e-300) {
      best_abs = a;
      best = i;
    }
  }
  if (best_abs > 0.0) {
    v *= std::conj(v(best)) / best_abs;
  }
}

}  // namespace

BipartiteOperator::BipartiteOperator(Dims dims, ComplexMatrix matrix)
    : dims_(dims), matrix_(std::move(matrix)) {
  if (dims_.a < 1 || dims_.b < 1) {
    throw DimensionError("bipartite dimensions must be positive");
  }
  if (matrix_.rows() != dims_.total() || matrix_.cols() != dims_.total()) {
    std::ostringstream msg;
    msg << "operator is " << matrix_.rows() << "x" << matrix_.cols()
        << " but dims " << dims_.a << "x" << dims_.b << " need "
        << dims_.total() << "x" << dims_.total();
    throw DimensionError(msg.str());
  }
  requireFinite(matrix_, "bipartite operator");
}

BipartiteOperator BipartiteOperator::identity(Dims dims) {
  return {dims, ComplexMatrix::Identity(dims.total(), dims.total())};
}

BipartiteOperator BipartiteOperator::zero(Dims dims) {
  return {dims, ComplexMatrix::Zero(dims.total(), dims.total())};
}

BipartiteVector::BipartiteVector(Dims dims, ComplexVector coords)
    : dims_(dims), coords_(std::move(coords)) {
  if (dims_.a < 1 || dims_.b < 1) {
    throw DimensionError("bipartite dimensions must be positive");
  }
  if (coords_.size() != dims_.total()) {
    throw DimensionError("vector length does not match bipartite dims");
  }
  if (!coords_.allFinite()) {
    throw NumericalError("bipartite vector: non-finite entries");
  }
}

BipartiteVector BipartiteVector::product(const ComplexVector& x,
                                         const ComplexVector& y) {
  ComplexVector c(x.size() * y.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    c.segment(i * y.size(), y.size()) = x(i) * y;
  }
  return {Dims{static_cast<int>(x.size()), static_cast<int>(y.size())},
          std::move(c)};
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix partialTrace(const BipartiteOperator& w, Side traced) {
  const int m = w.dimA();
  const int n = w.dimB();
  const ComplexMatrix& x = w.matrix();
  if (traced == Side::First) {
    ComplexMatrix r = ComplexMatrix::Zero(n, n);
    for (int i = 0; i < m; ++i) r += x.block(i * n, i * n, n, n);
    return r;
  }
  ComplexMatrix r(m, m);
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k < m; ++k) r(i, k) = x.block(i * n, k * n, n, n).trace();
  }
  return r;
}

BipartiteOperator partialTranspose(const BipartiteOperator& w, Side side) {
  const int m = w.dimA();
  const int n = w.dimB();
  const ComplexMatrix& x = w.matrix();
  ComplexMatrix out(x.rows(), x.cols());
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k < m; ++k) {
      if (side == Side::Second) {
        out.block(i * n, k * n, n, n) = x.block(i * n, k * n, n, n).transpose();
      } else {
        out.block(i * n, k * n, n, n) = x.block(k * n, i * n, n, n);
      }
    }
  }
  return {w.dims(), std::move(out)};
}

BipartiteVector vec(const ComplexMatrix& x) {
  const auto rows = x.rows();
  const auto cols = x.cols();
  ComplexVector c(rows * cols);
  for (Eigen::Index j = 0; j < cols; ++j) c.segment(j * rows, rows) = x.col(j);
  return {Dims{static_cast<int>(cols), static_cast<int>(rows)}, std::move(c)};
}

ComplexMatrix unvec(const ComplexVector& coords, Dims dims) {
  if (coords.size() != dims.total()) {
    throw DimensionError("unvec: vector length does not factor as declared");
  }
  ComplexMatrix x(dims.b, dims.a);
  for (int j = 0; j < dims.a; ++j) x.col(j) = coords.segment(j * dims.b, dims.b);
  return x;
}

ComplexMatrix unvec(const BipartiteVector& v) {
  return unvec(v.coords(), v.dims());
}

ComplexMatrix swapOperator(Dims dims) {
  const int a = dims.a;
  const int b = dims.b;
  ComplexMatrix f = ComplexMatrix::Zero(a * b, a * b);
  // |j> (x) |i> <- |i> (x) |j>
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) f(j * a + i, i * b + j) = 1.0;
  }
  return f;
}

BipartiteOperator flipOperator(int n) {
  if (n < 1) throw DimensionError("flip dimension must be >= 1");
  return {Dims{n, n}, swapOperator(Dims{n, n})};
}

BipartiteVector gammaVector(int n) {
  if (n < 1) throw DimensionError("dimension must be >= 1");
  ComplexVector c = ComplexVector::Zero(n * n);
  for (int j = 0; j < n; ++j) c(j * n + j) = 1.0;
  return {Dims{n, n}, std::move(c)};
}

bool isHermitian(const ComplexMatrix& h, double tol) {
  if (h.rows() != h.cols()) return false;
  const double scale = std::max(1.0, maxAbsEntry(h));
  return maxAbsEntry(h - h.adjoint()) <= tol * scale;
}

EigenDecomposition hermitianEig(const ComplexMatrix& h, double herm_tol) {
  if (h.rows() != h.cols()) throw DimensionError("hermitianEig: not square");
  requireFinite(h, "hermitianEig");
  if (!isHermitian(h, herm_tol)) {
    throw NumericalError("hermitianEig: matrix is not Hermitian");
  }
  const ComplexMatrix sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("hermitianEig: eigensolver did not converge");
  }
  EigenDecomposition out{solver.eigenvalues(), solver.eigenvectors()};
  for (Eigen::Index k = 0; k < out.eigenvectors.cols(); ++k) {
    fixPhase(out.eigenvectors.col(k));
  }
  return out;
}

ComplexMatrix kernelBasis(const ComplexMatrix& h, double tol) {
  const EigenDecomposition ed = hermitianEig(h);
  const double scale = ed.eigenvalues.size() == 0
                           ? 0.0
                           : ed.eigenvalues.cwiseAbs().maxCoeff();
  std::vector<Eigen::Index> keep;
  for (Eigen::Index k = 0; k < ed.eigenvalues.size(); ++k) {
    if (std::abs(ed.eigenvalues(k)) <= tol * scale) keep.push_back(k);
  }
  ComplexMatrix basis(h.rows(), static_cast<Eigen::Index>(keep.size()));
  for (std::size_t c = 0; c < keep.size(); ++c) {
    basis.col(static_cast<Eigen::Index>(c)) = ed.eigenvectors.col(keep[c]);
  }
  return basis;
}

namespace {

// Coefficient matrix M(i, j) = <ij|v>, so v = sum_k s_k u_k (x) conj(w_k)
// for the SVD M = U S W^dagger.
ComplexMatrix coefficientMatrix(const ComplexVector& coords, Dims dims) {
  if (coords.size() != dims.total()) {
    throw DimensionError("vector length does not match bipartite dims");
  }
  ComplexMatrix m(dims.a, dims.b);
  for (int i = 0; i < dims.a; ++i) {
    for (int j = 0; j < dims.b; ++j) m(i, j) = coords(i * dims.b + j);
  }
  return m;
}

int rankFromValues(const RealVector& s, double tol) {
  if (s.size() == 0) return 0;
  const double top = s.maxCoeff();
  if (top <= 0.0) return 0;
  int r = 0;
  for (Eigen::Index k = 0; k < s.size(); ++k) {
    if (s(k) > tol * top) ++r;
  }
  return r;
}

}  // namespace

SchmidtDecomposition schmidtDecompose(const BipartiteVector& v, double tol) {
  if (v.norm() == 0.0) throw NumericalError("schmidtDecompose: zero vector");
  const ComplexMatrix m = coefficientMatrix(v.coords(), v.dims());
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  SchmidtDecomposition out;
  out.coefficients = svd.singularValues();
  out.left = svd.matrixU();
  out.right = svd.matrixV().conjugate();
  out.tolerance_used = tol;
  out.numerical_rank = rankFromValues(out.coefficients, tol);
  return out;
}

RealVector schmidtCoefficients(const ComplexVector& coords, Dims dims) {
  const ComplexMatrix m = coefficientMatrix(coords, dims);
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues();
}

int schmidtRank(const ComplexVector& coords, Dims dims, double tol) {
  return rankFromValues(schmidtCoefficients(coords, dims), tol);
}

PsdCheck isPsd(const ComplexMatrix& h, double tol) {
  const EigenDecomposition ed = hermitianEig(h);
  if (ed.eigenvalues.size() == 0) return {true, 0.0};
  const double lo = ed.eigenvalues(0);
  const double hi = ed.eigenvalues(ed.eigenvalues.size() - 1);
  return {lo >= -tol * std::max(1.0, std::abs(hi)), lo};
}

double minEigenvalue(const ComplexMatrix& h) {
  return hermitianEig(h).eigenvalues(0);
}

double maxEigenvalue(const ComplexMatrix& h) {
  const RealVector ev = hermitianEig(h).eigenvalues;
  return ev(ev.size() - 1);
}

int numericalRank(const ComplexMatrix& m, double tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return rankFromValues(svd.singularValues(), tol);
}

double operatorNorm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues()(0);
}

double expectation(const ComplexMatrix& h, const ComplexVector& v) {
  return v.dot(h * v).real();
}

std::string toString(Side side) {
  return side == Side::First ? "first" : "second";
}

}  // namespace witopt

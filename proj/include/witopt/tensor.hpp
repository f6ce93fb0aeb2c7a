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

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace witopt {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Raised when operand shapes do not fit together.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an input violates a numerical precondition (Hermiticity,
/// positivity, unitarity, ...).
class NumericalError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class Side { First, Second };

/// Local dimensions of a bipartite space C^a (x) C^b. Basis vector
/// |i> (x) |j> sits at index i * b + j.
struct Dims {
  int a = 1;
  int b = 1;

  int total() const { return a * b; }
  bool operator==(const Dims&) const = default;
};

/// Dense operator on C^a (x) C^b, dimensions carried explicitly.
class BipartiteOperator {
 public:
  BipartiteOperator() = default;
  BipartiteOperator(Dims dims, ComplexMatrix matrix);

  static BipartiteOperator identity(Dims dims);
  static BipartiteOperator zero(Dims dims);

  const Dims& dims() const { return dims_; }
  int dimA() const { return dims_.a; }
  int dimB() const { return dims_.b; }
  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  Dims dims_;
  ComplexMatrix matrix_;
};

/// Vector on C^a (x) C^b.
class BipartiteVector {
 public:
  BipartiteVector() = default;
  BipartiteVector(Dims dims, ComplexVector coords);

  static BipartiteVector product(const ComplexVector& x,
                                 const ComplexVector& y);

  const Dims& dims() const { return dims_; }
  const ComplexVector& coords() const { return coords_; }
  double norm() const { return coords_.norm(); }

 private:
  Dims dims_;
  ComplexVector coords_;
};

struct EigenDecomposition {
  RealVector eigenvalues;      // ascending
  ComplexMatrix eigenvectors;  // orthonormal columns
};

struct SchmidtDecomposition {
  RealVector coefficients;  // descending, non-negative
  ComplexMatrix left;       // columns: orthonormal family in C^a
  ComplexMatrix right;      // columns: orthonormal family in C^b
  int numerical_rank = 0;
  double tolerance_used = 0.0;
};

struct PsdCheck {
  bool psd = false;
  double min_eigenvalue = 0.0;
};

// Default tolerances. All are relative to the scale of the input.
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kRankTol = 1e-9;

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// tr_1 returns the dim_b x dim_b reduced operator, tr_2 the dim_a x dim_a one.
ComplexMatrix partialTrace(const BipartiteOperator& w, Side traced);

BipartiteOperator partialTranspose(const BipartiteOperator& w, Side side);

/// Column vectorization vec(X) = sum_j |j> (x) X|j>. For X with r rows and c
/// columns the result lives on C^c (x) C^r, so vec(ABC) = (C^T (x) A) vec(B).
BipartiteVector vec(const ComplexMatrix& x);

/// Inverse of vec: a vector on C^a (x) C^b becomes a b x a matrix.
ComplexMatrix unvec(const BipartiteVector& v);
ComplexMatrix unvec(const ComplexVector& coords, Dims dims);

/// Swap operator F(x (x) y) = y (x) x from C^a (x) C^b to C^b (x) C^a.
ComplexMatrix swapOperator(Dims dims);

/// Flip on C^n (x) C^n.
BipartiteOperator flipOperator(int n);

/// Unnormalized |Gamma> = sum_j |jj> on C^n (x) C^n.
BipartiteVector gammaVector(int n);

bool isHermitian(const ComplexMatrix& h, double tol = kHermitianTol);

/// Ascending eigenvalues. Eigenvector phases are fixed so the
/// largest-magnitude component (first one on ties) is real positive.
EigenDecomposition hermitianEig(const ComplexMatrix& h,
                                double herm_tol = kHermitianTol);

/// Orthonormal basis (as columns) of eigenvectors with
/// |lambda| <= tol * max|lambda|.
ComplexMatrix kernelBasis(const ComplexMatrix& h, double tol = kRankTol);

SchmidtDecomposition schmidtDecompose(const BipartiteVector& v,
                                      double tol = kRankTol);

/// Numerical Schmidt rank only; cheaper than a full decomposition.
int schmidtRank(const ComplexVector& coords, Dims dims, double tol = kRankTol);
RealVector schmidtCoefficients(const ComplexVector& coords, Dims dims);

/// psd iff lambda_min >= -tol * max(1, |lambda_max|).
PsdCheck isPsd(const ComplexMatrix& h, double tol = kRankTol);

double minEigenvalue(const ComplexMatrix& h);
double maxEigenvalue(const ComplexMatrix& h);

/// Numerical rank of an arbitrary matrix from its singular values.
int numericalRank(const ComplexMatrix& m, double tol = kRankTol);

/// Largest singular value.
double operatorNorm(const ComplexMatrix& m);

/// <v|H|v>, real part.
double expectation(const ComplexMatrix& h, const ComplexVector& v);

std::string toString(Side side);

}  // namespace witopt

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

// Brute-force reference implementations used as test oracles. They are
// written from index formulas and share no code with the library.

#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

namespace oracle {

using C = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline Mat randomMatrix(int r, int c, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Mat m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = C(n(rng), n(rng));
  return m;
}

inline Vec randomVector(int d, std::mt19937_64& rng) {
  return randomMatrix(d, 1, rng).col(0);
}

inline Mat randomHermitian(int d, std::mt19937_64& rng) {
  const Mat a = randomMatrix(d, d, rng);
  return 0.5 * (a + a.adjoint());
}

inline Mat randomPsd(int d, std::mt19937_64& rng) {
  const Mat a = randomMatrix(d, d, rng);
  return a * a.adjoint();
}

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

// sum_j <j|_1 W |j>_1 on C^m (x) C^n.
inline Mat traceFirst(const Mat& w, int m, int n) {
  Mat out = Mat::Zero(n, n);
  for (int j = 0; j < m; ++j)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) out(a, b) += w(j * n + a, j * n + b);
  return out;
}

inline Mat traceSecond(const Mat& w, int m, int n) {
  Mat out = Mat::Zero(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int j = 0; j < n; ++j) out(a, b) += w(a * n + j, b * n + j);
  return out;
}

inline Mat transposeSecond(const Mat& w, int m, int n) {
  Mat out(m * n, m * n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < n; ++l) out(i * n + j, k * n + l) = w(i * n + l, k * n + j);
  return out;
}

inline Mat flip(int n) {
  Mat f = Mat::Zero(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) f(j * n + i, i * n + j) = 1.0;
  return f;
}

inline Vec gamma(int n) {
  Vec g = Vec::Zero(n * n);
  for (int j = 0; j < n; ++j) g(j * n + j) = 1.0;
  return g;
}

// sum_j |j> (x) X|j>.
inline Vec vec(const Mat& x) {
  Vec v(x.rows() * x.cols());
  for (int j = 0; j < x.cols(); ++j)
    for (int i = 0; i < x.rows(); ++i) v(j * x.rows() + i) = x(i, j);
  return v;
}

// Choi matrix sum_jk |j><k| (x) Phi(|j><k|).
template <typename F>
Mat choi(int n_in, int n_out, F&& phi) {
  Mat c = Mat::Zero(n_in * n_out, n_in * n_out);
  for (int j = 0; j < n_in; ++j)
    for (int k = 0; k < n_in; ++k) {
      Mat e = Mat::Zero(n_in, n_in);
      e(j, k) = 1.0;
      const Mat out = phi(e);
      for (int a = 0; a < n_out; ++a)
        for (int b = 0; b < n_out; ++b) c(j * n_out + a, k * n_out + b) = out(a, b);
    }
  return c;
}

// Eigenvalues of a Hermitian matrix by cyclic Jacobi rotations on the real
// symmetric embedding [[Re, -Im], [Im, Re]], whose spectrum doubles every
// eigenvalue. Independent of the library's solver.
inline Eigen::VectorXd jacobiEigenvalues(const Mat& h) {
  const int n = static_cast<int>(h.rows());
  Eigen::MatrixXd a(2 * n, 2 * n);
  a << h.real(), -h.imag(), h.imag(), h.real();
  const int d = 2 * n;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < d; ++p)
      for (int q = p + 1; q < d; ++q) off += a(p, q) * a(p, q);
    if (off < 1e-28) break;
    for (int p = 0; p < d; ++p)
      for (int q = p + 1; q < d; ++q) {
        if (std::abs(a(p, q)) < 1e-300) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < d; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < d; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
  }
  Eigen::VectorXd all(d);
  for (int i = 0; i < d; ++i) all(i) = a(i, i);
  std::sort(all.data(), all.data() + d);
  Eigen::VectorXd ev(n);
  for (int i = 0; i < n; ++i) ev(i) = all(2 * i);
  return ev;
}

// Smallest <x (x) y|W|x (x) y> over random unit x, y. An upper bound on the
// true product minimum.
inline double productMinBySampling(const Mat& w, int m, int n, int samples,
                                   std::mt19937_64& rng) {
  double best = 1e300;
  for (int s = 0; s < samples; ++s) {
    const Vec x = randomVector(m, rng).normalized();
    const Vec y = randomVector(n, rng).normalized();
    const Vec z = kron(x, y);
    best = std::min(best, (z.adjoint() * w * z)(0, 0).real());
  }
  return best;
}

}  // namespace oracle

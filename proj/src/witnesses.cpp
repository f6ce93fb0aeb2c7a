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

#include "witopt/witnesses.hpp"

#include <algorithm>
#include <sstream>

namespace witopt {

namespace {

constexpr double kMatrixTol = 1e-10;

ComplexMatrix projector(int n, int i, int j) {
  ComplexMatrix p = ComplexMatrix::Zero(n * n, n * n);
  p(i * n + j, i * n + j) = 1.0;
  return p;
}

double maxAbs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

void requireSquare(const ComplexMatrix& u, int size, const char* who) {
  if (u.rows() != size || u.cols() != size) {
    std::ostringstream msg;
    msg << who << ": U must be " << size << "x" << size;
    throw DimensionError(msg.str());
  }
}

void requireAntisymmetric(const ComplexMatrix& u, const char* who) {
  if (maxAbs(u + u.transpose()) > kMatrixTol * std::max(1.0, maxAbs(u))) {
    throw NumericalError(std::string(who) + ": U is not antisymmetric (U^T != -U)");
  }
}

void requireSubUnitary(const ComplexMatrix& u, const char* who) {
  const double top = maxEigenvalue(u.adjoint() * u);
  if (top > 1.0 + kMatrixTol) {
    std::ostringstream msg;
    msg << who << ": U is not sub-unitary (largest eigenvalue of U^dagger U is "
        << top << ")";
    throw NumericalError(msg.str());
  }
}

void requireUnitary(const ComplexMatrix& u, const char* who) {
  const auto n = u.rows();
  if (maxAbs(u.adjoint() * u - ComplexMatrix::Identity(n, n)) > kMatrixTol) {
    throw NumericalError(std::string(who) + ": U is not unitary");
  }
}

}  // namespace

ComplexMatrix pauliY() {
  ComplexMatrix y(2, 2);
  y << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
  return y;
}

ComplexMatrix defaultAntisymmetricUnitary(int size) {
  if (size < 2 || size % 2 != 0) {
    throw DimensionError("antisymmetric unitaries need an even size");
  }
  return kron(ComplexMatrix::Identity(size / 2, size / 2), pauliY());
}

WitnessSpec flipWitness(int n) {
  if (n < 2) throw DimensionError("flip witness needs n >= 2");
  return {"flip", flipOperator(n), SuperOperator::transpose(n), true};
}

WitnessSpec reductionWitness(int n) {
  if (n < 2) throw DimensionError("reduction witness needs n >= 2");
  const SuperOperator r = SuperOperator::reduction(n);
  // The reduction map is self-adjoint, so C(R^dagger) = C(R).
  return {"reduction", r.choi(), r, true};
}

WitnessSpec choiWitness(ChoiVariant variant) {
  constexpr int n = 3;
  const ComplexVector g = gammaVector(n).coords();
  ComplexMatrix w = 2.0 * ComplexMatrix::Identity(9, 9) -
                    2.0 * (projector(n, 0, 2) + projector(n, 1, 0) + projector(n, 2, 1)) -
                    g * g.adjoint();
  if (variant == ChoiVariant::Original) {
    const SuperOperator phi = SuperOperator::fromFunction(n, n, [](const ComplexMatrix& x) {
      ComplexMatrix d = ComplexMatrix::Zero(3, 3);
      d(0, 0) = x(2, 2);
      d(1, 1) = x(0, 0);
      d(2, 2) = x(1, 1);
      return ComplexMatrix(2.0 * x.trace() * ComplexMatrix::Identity(3, 3) - 2.0 * d - x);
    });
    return {"choi", BipartiteOperator({n, n}, std::move(w)), phi, true};
  }
  w -= projector(n, 0, 1) + projector(n, 1, 2) + projector(n, 2, 0);
  BipartiteOperator wop({n, n}, std::move(w));
  return {"choi-improved", wop, adjoint(choiInverse(wop)), true};
}

WitnessSpec breuerHallWitness(int dim, std::optional<ComplexMatrix> u) {
  if (dim < 2 || dim % 2 != 0) {
    throw DimensionError("breuer-hall witness needs an even total dimension >= 2");
  }
  const ComplexMatrix uu = u.value_or(defaultAntisymmetricUnitary(dim));
  requireSquare(uu, dim, "breuer-hall");
  requireAntisymmetric(uu, "breuer-hall");
  requireSubUnitary(uu, "breuer-hall");

  const ComplexVector g = gammaVector(dim).coords();
  const ComplexMatrix lift = kron(ComplexMatrix::Identity(dim, dim), uu);
  ComplexMatrix w = ComplexMatrix::Identity(dim * dim, dim * dim) - g * g.adjoint() -
                    lift * swapOperator({dim, dim}) * lift.adjoint();
  const SuperOperator phi =
      SuperOperator::fromFunction(dim, dim, [&uu, dim](const ComplexMatrix& x) {
        return ComplexMatrix(x.trace() * ComplexMatrix::Identity(dim, dim) - x -
                             uu * x.transpose() * uu.adjoint());
      });
  return {"breuer-hall", BipartiteOperator({dim, dim}, std::move(w)), phi, true};
}

SuperOperator robertsonMap(int block, const SuperOperator& r) {
  if (block < 1) throw DimensionError("robertson block size must be >= 1");
  if (r.dimIn() != block || r.dimOut() != block) {
    throw DimensionError("robertson: R must act on block x block matrices");
  }
  const int n = block;
  return SuperOperator::fromFunction(2 * n, 2 * n, [&r, n](const ComplexMatrix& x) {
    const ComplexMatrix x11 = x.topLeftCorner(n, n);
    const ComplexMatrix x12 = x.topRightCorner(n, n);
    const ComplexMatrix x21 = x.bottomLeftCorner(n, n);
    const ComplexMatrix x22 = x.bottomRightCorner(n, n);
    const ComplexMatrix id = ComplexMatrix::Identity(n, n);
    ComplexMatrix y(2 * n, 2 * n);
    y.topLeftCorner(n, n) = x22.trace() * id;
    y.topRightCorner(n, n) = -x12 - r.apply(x21);
    y.bottomLeftCorner(n, n) = -x21 - r.apply(x12);
    y.bottomRightCorner(n, n) = x11.trace() * id;
    return ComplexMatrix(y / static_cast<double>(n));
  });
}

WitnessSpec robertsonGen1(int n) {
  if (n < 1) throw DimensionError("robertson-gen1 needs block size >= 1");
  return witnessFromMap("robertson-gen1", robertsonMap(n, SuperOperator::reduction(n)),
                        true);
}

WitnessSpec robertsonGen2(int block, std::optional<ComplexMatrix> u) {
  if (block < 2 || block % 2 != 0) {
    throw DimensionError(
        "robertson-gen2 needs an even block size (antisymmetric unitaries "
        "exist only in even dimensions)");
  }
  const ComplexMatrix uu = u.value_or(defaultAntisymmetricUnitary(block));
  requireSquare(uu, block, "robertson-gen2");
  requireAntisymmetric(uu, "robertson-gen2");
  requireUnitary(uu, "robertson-gen2");
  const SuperOperator r =
      SuperOperator::fromFunction(block, block, [&uu](const ComplexMatrix& x) {
        return ComplexMatrix(uu * x.transpose() * uu.adjoint());
      });
  return witnessFromMap("robertson-gen2", robertsonMap(block, r), true);
}

WitnessSpec robertsonGeneral(const SuperOperator& r, bool positivity_attested) {
  return witnessFromMap("robertson-general", robertsonMap(r.dimIn(), r),
                        positivity_attested);
}

BipartiteOperator localTransform(const BipartiteOperator& w, const ComplexMatrix& x) {
  if (x.rows() != w.dimA() || x.cols() != w.dimA()) {
    throw DimensionError("localTransform: X must be dim_a x dim_a");
  }
  const ComplexMatrix lift =
      kron(x, ComplexMatrix::Identity(w.dimB(), w.dimB()));
  return {w.dims(), lift * w.matrix() * lift.adjoint()};
}

WitnessSpec witnessFromMap(std::string name, const SuperOperator& phi,
                           bool positivity_attested) {
  return {std::move(name), adjoint(phi).choi(), phi, positivity_attested};
}

const std::vector<std::string>& catalogNames() {
  static const std::vector<std::string> names = {
      "flip", "reduction", "choi", "choi-improved",
      "breuer-hall", "robertson-gen1", "robertson-gen2"};
  return names;
}

int catalogDefaultDim(const std::string& name) {
  if (name == "flip") return 2;
  if (name == "reduction") return 3;
  if (name == "choi" || name == "choi-improved") return 3;
  if (name == "breuer-hall" || name == "robertson-gen1") return 4;
  if (name == "robertson-gen2") return 8;
  throw std::invalid_argument("unknown witness '" + name + "'");
}

WitnessSpec catalogWitness(const std::string& name, std::optional<int> dim) {
  const int d = dim.value_or(catalogDefaultDim(name));
  if (name == "flip") return flipWitness(d);
  if (name == "reduction") return reductionWitness(d);
  if (name == "choi" || name == "choi-improved") {
    if (d != 3) throw DimensionError(name + " is only defined for dimension 3");
    return choiWitness(name == "choi" ? ChoiVariant::Original : ChoiVariant::Improved);
  }
  if (name == "breuer-hall") return breuerHallWitness(d);
  if (name == "robertson-gen1") {
    if (d < 2 || d % 2 != 0) {
      throw DimensionError("robertson-gen1 needs an even total dimension");
    }
    return robertsonGen1(d / 2);
  }
  if (name == "robertson-gen2") {
    if (d < 4 || d % 4 != 0) {
      throw DimensionError("robertson-gen2 needs a total dimension divisible by 4");
    }
    return robertsonGen2(d / 2);
  }
  throw std::invalid_argument("unknown witness '" + name + "'");
}

}  // namespace witopt

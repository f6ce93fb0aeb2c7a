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

#include <optional>
#include <string>
#include <vector>

#include "witopt/choi.hpp"

namespace witopt {

/// A witness W = C(Phi^dagger) together with the positive map Phi it came
/// from, when known.
struct WitnessSpec {
  std::string name;
  BipartiteOperator witness;
  std::optional<SuperOperator> source_map;
  // Block-positivity is taken as given for catalog entries; user matrices
  // must declare it.
  bool block_positive_attested = false;
};

enum class ChoiVariant { Original, Improved };
enum class RobertsonVariant { Gen1, Gen2, General };

/// 2x2 Pauli sigma_y.
ComplexMatrix pauliY();

/// 1_k (x) sigma_y, the default antisymmetric unitary of size 2k.
ComplexMatrix defaultAntisymmetricUnitary(int size);

WitnessSpec flipWitness(int n);
WitnessSpec reductionWitness(int n);
WitnessSpec choiWitness(ChoiVariant variant = ChoiVariant::Original);

/// Witness of X -> tr(X) 1 - X - U X^T U^dagger on C^{dim x dim}. U must be
/// antisymmetric and sub-unitary; defaults to 1 (x) sigma_y.
WitnessSpec breuerHallWitness(int dim,
                              std::optional<ComplexMatrix> u = std::nullopt);

/// The 2N x 2N block map
///   X -> (1/N) [[tr(X22) 1, -X12 - R(X21)], [-X21 - R(X12), tr(X11) 1]].
SuperOperator robertsonMap(int block, const SuperOperator& r);

/// Gen1: R = reduction map, block size n (total dimension 2n).
WitnessSpec robertsonGen1(int n);
/// Gen2: R(X) = U X^T U^dagger with U an antisymmetric unitary of the (even)
/// block size; defaults to 1 (x) sigma_y.
WitnessSpec robertsonGen2(int block, std::optional<ComplexMatrix> u = std::nullopt);
/// General: caller-supplied R. Positivity of the resulting block map is not
/// checked; `positivity_attested` is recorded on the spec.
WitnessSpec robertsonGeneral(const SuperOperator& r, bool positivity_attested);

/// (X (x) 1) W (X^dagger (x) 1).
BipartiteOperator localTransform(const BipartiteOperator& w,
                                 const ComplexMatrix& x);

/// Witness built from a positive map: C(Phi^dagger).
WitnessSpec witnessFromMap(std::string name, const SuperOperator& phi,
                           bool positivity_attested);

/// Names accepted by catalogWitness, in listing order.
const std::vector<std::string>& catalogNames();

/// Default --dim for a catalog family (ignored by fixed-size entries).
int catalogDefaultDim(const std::string& name);

/// Look up a catalog witness. `dim` is the local dimension for flip and
/// reduction and the total local dimension for breuer-hall and the
/// Robertson maps. Throws std::invalid_argument for unknown names and
/// DimensionError for unsupported dimensions.
WitnessSpec catalogWitness(const std::string& name, std::optional<int> dim);

}  // namespace witopt

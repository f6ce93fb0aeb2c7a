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
#include <stdexcept>
#include <string>

#include "witopt/criteria.hpp"

namespace witopt {

inline constexpr const char* kToolName = "witopt";
inline constexpr const char* kVersion = "0.1.0";

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix file layout:
///   {"dims": [m, n], "re": [[...]], "im": [[...]],
///    "metadata": {"name": "...", "block_positive": true}}
/// "im" and "metadata" are optional on input.
struct MatrixFile {
  BipartiteOperator matrix;
  std::string name;
  bool block_positive = false;
};

MatrixFile parseMatrixFile(const std::string& text);
std::string writeMatrixFile(const MatrixFile& file);

/// Deterministic JSON rendering: fixed key order, full double precision,
/// no timestamps.
std::string reportToJson(const WitnessReport& report);

/// One line per criterion, e.g. "kernel-schmidt: OPTIMAL, rank 4/4".
std::string reportSummary(const WitnessReport& report);
std::string verdictSummaryLine(const CriterionVerdict& verdict);

/// Printed reproductions: "appendix-a", "appendix-b", "appendix-c".
std::string demoText(const std::string& which, std::uint64_t seed = 1);
const std::vector<std::string>& demoNames();

}  // namespace witopt

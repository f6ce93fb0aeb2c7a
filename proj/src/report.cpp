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

#include "witopt/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace witopt {

using Json = nlohmann::ordered_json;

namespace {

Json realPart(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).real());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json imagPart(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).imag());
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix readPart(const Json& rows, int size, const char* key) {
  if (!rows.is_array() || static_cast<int>(rows.size()) != size) {
    throw ParseError(std::string("matrix file: \"") + key + "\" must have " +
                     std::to_string(size) + " rows");
  }
  ComplexMatrix m(size, size);
  for (int i = 0; i < size; ++i) {
    const Json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != size) {
      throw ParseError(std::string("matrix file: row ") + std::to_string(i) + " of \"" + key +
                       "\" must have " + std::to_string(size) + " entries");
    }
    for (int j = 0; j < size; ++j) {
      const Json& x = row[static_cast<std::size_t>(j)];
      if (!x.is_number()) throw ParseError("matrix file: entries must be numbers");
      const double value = x.get<double>();
      if (!std::isfinite(value)) throw ParseError("matrix file: entries must be finite");
      m(i, j) = value;
    }
  }
  return m;
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", std::abs(x) < 5e-15 ? 0.0 : x);
  return buf;
}

// Display only: entries below 1e-9 print as 0.
std::string fmtComplex(Complex z) {
  const double re = std::abs(z.real()) < 1e-9 ? 0.0 : z.real();
  const double im = std::abs(z.imag()) < 1e-9 ? 0.0 : z.imag();
  char buf[96];
  if (im == 0.0) {
    std::snprintf(buf, sizeof(buf), "%.6g", re);
  } else {
    std::snprintf(buf, sizeof(buf), "%.6g%+.6gi", re, im);
  }
  return buf;
}

double ev(const CriterionVerdict& v, const char* key) {
  return v.evidenceValue(key).value_or(std::nan(""));
}

std::string matrixLines(const ComplexMatrix& m, const std::string& indent) {
  std::ostringstream out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out << indent;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%10s", fmtComplex(m(i, j)).c_str());
      out << buf << (j + 1 < m.cols() ? " " : "");
    }
    out << "\n";
  }
  return out.str();
}

ComplexVector ket(std::initializer_list<Complex> entries) {
  ComplexVector v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (Complex c : entries) v(i++) = c;
  return v;
}

std::string demoAppendixA() {
  const double r = 1.0 / std::sqrt(2.0);
  const Complex i(0.0, 1.0);
  const ComplexVector zero = ket({1.0, 0.0});
  const ComplexVector one = ket({0.0, 1.0});
  const ComplexVector plus = ket({r, r});
  const ComplexVector minus = ket({r, -r});
  const ComplexVector right = ket({r, r * i});
  const ComplexVector left = ket({r, -r * i});
  const std::vector<std::pair<std::string, ProductZero>> zeros = {
      {"|0>|1>", {zero, one, 0.0}},
      {"|1>|0>", {one, zero, 0.0}},
      {"|+>|->", {plus, minus, 0.0}},
      {"|R>|L>", {right, left, 0.0}},
  };
  const BipartiteOperator flip = flipOperator(2);

  std::ostringstream out;
  out << "Product zeros of the flip F on C^2 (x) C^2\n";
  std::vector<ProductZero> list;
  for (const auto& [label, z] : zeros) {
    const double value =
        expectation(flip.matrix(), BipartiteVector::product(z.x, z.y).coords());
    out << "  " << label << "  <z|F|z> = " << fmt(value) << "\n";
    list.push_back(z);
  }
  CriteriaConfig cfg;
  cfg.block_positive_attested = true;
  const CriterionVerdict v = spanningCertificate(flip, list, cfg);
  const Certificate* rho = v.certificate("rho");
  out << "span dimension = " << fmt(ev(v, "span_dim")) << " of 4\n";
  if (rho != nullptr) {
    out << "16 rho =\n" << matrixLines(16.0 * rho->value, "  ");
    out << "rank(rho) = " << numericalRank(rho->value) << "\n";
    out << "tr(rho F) = " << fmt((rho->value * flip.matrix()).trace().real()) << "\n";
  }
  out << "spanning: " << toString(v.status) << "\n";
  return out.str();
}

std::string demoAppendixB(std::uint64_t seed) {
  OptimizerConfig opt;
  opt.restarts = 8;
  opt.gradient_mode = GradientMode::Analytic;
  opt.seed = seed;
  std::ostringstream out;
  out << "min over U(n) of tr(conj(U) U)\n";
  out << "   n   closed form   at minimizer       numeric\n";
  for (int n = 1; n <= 6; ++n) {
    const OptimizationResult r = minimizeConjTrace(n, opt);
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%4d %13s %14s %13.8f\n", n, fmt(conjTraceMinimum(n)).c_str(),
                  fmt(conjTrace(analyticConjTraceMinimizer(n))).c_str(), r.best_value);
    out << buf;
  }
  return out.str();
}

std::string demoAppendixC() {
  CriteriaConfig cfg;
  cfg.block_positive_attested = true;
  std::ostringstream out;
  out << "Block maps Phi_2n: superoperator trace and trace optimality (U = 1)\n";
  const auto row = [&](const std::string& label, const SuperOperator& phi, int n) {
    const CriterionVerdict v = mapTraceOptimality(phi, std::nullopt, cfg);
    out << "  " << label << "  tr(Phi) = " << fmt(superoperatorTrace(phi))
        << "  expected " << fmt(-2.0 * n) << "  -tr(Phi(1)) = " << fmt(ev(v, "target"))
        << "  " << toString(v.status) << "\n";
  };
  for (int n : {2, 3}) {
    row("reduction blocks, n=" + std::to_string(n),
        robertsonMap(n, SuperOperator::reduction(n)), n);
  }
  const WitnessSpec gen2 = robertsonGen2(4);
  row("transpose blocks, 4n=8", *gen2.source_map, 4);
  return out.str();
}

}  // namespace

MatrixFile parseMatrixFile(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("matrix file: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("matrix file: top level must be an object");
  if (!doc.contains("dims") || !doc["dims"].is_array() || doc["dims"].size() != 2 ||
      !doc["dims"][0].is_number_integer() || !doc["dims"][1].is_number_integer()) {
    throw ParseError("matrix file: \"dims\" must be [m, n]");
  }
  const int m = doc["dims"][0].get<int>();
  const int n = doc["dims"][1].get<int>();
  if (m < 1 || n < 1) throw ParseError("matrix file: dims must be positive");
  if (!doc.contains("re")) throw ParseError("matrix file: missing \"re\"");
  const int size = m * n;
  ComplexMatrix mat = readPart(doc["re"], size, "re");
  if (doc.contains("im")) {
    mat += Complex(0.0, 1.0) * readPart(doc["im"], size, "im");
  }
  MatrixFile file;
  file.matrix = BipartiteOperator({m, n}, std::move(mat));
  if (doc.contains("metadata")) {
    const Json& meta = doc["metadata"];
    if (!meta.is_object()) throw ParseError("matrix file: \"metadata\" must be an object");
    if (meta.contains("name")) {
      if (!meta["name"].is_string()) throw ParseError("matrix file: name must be a string");
      file.name = meta["name"].get<std::string>();
    }
    if (meta.contains("block_positive")) {
      if (!meta["block_positive"].is_boolean()) {
        throw ParseError("matrix file: block_positive must be true or false");
      }
      file.block_positive = meta["block_positive"].get<bool>();
    }
  }
  return file;
}

std::string writeMatrixFile(const MatrixFile& file) {
  Json doc;
  doc["dims"] = {file.matrix.dimA(), file.matrix.dimB()};
  doc["re"] = realPart(file.matrix.matrix());
  doc["im"] = imagPart(file.matrix.matrix());
  doc["metadata"] = {{"name", file.name}, {"block_positive", file.block_positive}};
  return doc.dump(2) + "\n";
}

std::string reportToJson(const WitnessReport& report) {
  const CriteriaConfig& c = report.config;
  Json doc;
  doc["tool"] = kToolName;
  doc["version"] = kVersion;
  doc["input"] = {{"name", report.name},
                  {"dims", {report.dims.a, report.dims.b}},
                  {"block_positive_attested", report.block_positive_attested}};
  doc["seed"] = report.seed;
  doc["tolerances"] = {{"eigen", c.eigen_tol},   {"kernel", c.kernel_tol},
                       {"schmidt", c.schmidt_tol}, {"psd", c.psd_tol},
                       {"zero", c.zero_tol},     {"span", c.span_tol},
                       {"threshold_c", c.threshold_c}};
  doc["search"] = {{"seesaw_restarts", c.seesaw_restarts},
                   {"seesaw_max_iterations", c.seesaw_max_iterations},
                   {"trace_bound_samples", c.trace_bound_samples},
                   {"optimizer_restarts", c.optimizer.restarts},
                   {"optimizer_max_iterations", c.optimizer.max_iterations},
                   {"optimizer_step_size", c.optimizer.step_size},
                   {"optimizer_gradient",
                    c.optimizer.gradient_mode == GradientMode::Analytic ? "analytic"
                                                                        : "finite-difference"},
                   {"optimizer_fd_epsilon", c.optimizer.fd_epsilon},
                   {"optimizer_convergence_tol", c.optimizer.convergence_tol}};
  Json criteria = Json::array();
  for (const auto& v : report.verdicts) {
    Json entry;
    entry["id"] = v.criterion_id;
    entry["status"] = toString(v.status);
    Json evidence = Json::object();
    for (const auto& [k, x] : v.evidence) evidence[k] = x;
    entry["evidence"] = std::move(evidence);
    if (!v.note.empty()) entry["note"] = v.note;
    Json certs = Json::array();
    for (const auto& cert : v.certificates) {
      certs.push_back({{"name", cert.name},
                       {"re", realPart(cert.value)},
                       {"im", imagPart(cert.value)}});
    }
    entry["certificates"] = std::move(certs);
    criteria.push_back(std::move(entry));
  }
  doc["criteria"] = std::move(criteria);
  doc["overall"] = toString(report.overall);
  return doc.dump(2) + "\n";
}

std::string verdictSummaryLine(const CriterionVerdict& v) {
  std::string key;
  const std::string& id = v.criterion_id;
  if (id == criterion::kNecessary) {
    key = "min eigenvalue " +
          fmt(std::min(ev(v, "lambda_min_first"), ev(v, "lambda_min_second")));
  } else if (id == criterion::kSpectral) {
    key = "lambda_min " + fmt(ev(v, "lambda_min")) + ", margin " + fmt(ev(v, "margin"));
  } else if (id == criterion::kKernel) {
    key = "rank " + fmt(ev(v, "rank_found")) + "/" + fmt(ev(v, "target_rank")) +
          ", kernel dim " + fmt(ev(v, "kernel_dim"));
  } else if (id == criterion::kTraceBound) {
    key = "target " + fmt(ev(v, "target")) + ", value at Gamma " +
          fmt(ev(v, "value_at_gamma"));
  } else if (id == criterion::kWeak) {
    const double a = ev(v, "closest_eigenvalue_first");
    const double b = ev(v, "closest_eigenvalue_second");
    key = "closest eigenvalue " + fmt(std::abs(a) < std::abs(b) ? a : b);
  } else if (id == criterion::kSpanning) {
    if (auto span = v.evidenceValue("span_dim")) {
      key = "span " + fmt(*span) + "/" + fmt(ev(v, "full_dim"));
    } else {
      key = "min product value " + fmt(ev(v, "min_product_value"));
    }
  } else if (id == criterion::kMapTraceBounds) {
    key = "trace " + fmt(ev(v, "trace")) + ", -tr(Phi(1)) " + fmt(ev(v, "bound_image_trace"));
  } else if (id == criterion::kMapTraceOptimality) {
    key = "value " + fmt(ev(v, "value")) + ", target " + fmt(ev(v, "target"));
  } else if (id == criterion::kWitnessFunctional) {
    key = "value " + fmt(ev(v, "best_value")) + ", threshold " + fmt(ev(v, "threshold")) +
          ", gap " + fmt(ev(v, "gap"));
  }
  std::string line = id + ": " + toString(v.status);
  if (!key.empty()) line += ", " + key;
  return line;
}

std::string reportSummary(const WitnessReport& report) {
  std::ostringstream out;
  out << "witness: " << report.name << " (" << report.dims.a << "x" << report.dims.b
      << "), seed " << report.seed
      << (report.block_positive_attested ? "" : ", block-positivity not attested") << "\n";
  for (const auto& v : report.verdicts) {
    out << "  " << verdictSummaryLine(v) << "\n";
    if (v.criterion_id == criterion::kWitnessFunctional && v.status == Status::Optimal) {
      if (const Certificate* u = v.certificate("unitary")) {
        out << "  certificate U =\n" << matrixLines(u->value, "    ");
      }
    }
  }
  out << "overall: " << toString(report.overall) << "\n";
  return out.str();
}

const std::vector<std::string>& demoNames() {
  static const std::vector<std::string> names = {"appendix-a", "appendix-b", "appendix-c"};
  return names;
}

std::string demoText(const std::string& which, std::uint64_t seed) {
  if (which == "appendix-a") return demoAppendixA();
  if (which == "appendix-b") return demoAppendixB(seed);
  if (which == "appendix-c") return demoAppendixC();
  throw std::invalid_argument("unknown demo '" + which + "'");
}

}  // namespace witopt

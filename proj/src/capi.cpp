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

#include "witopt/witopt.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <sstream>
#include <string>

#include "witopt/criteria.hpp"
#include "witopt/report.hpp"

struct witopt_operator {
  witopt::WitnessSpec spec;
};

struct witopt_report {
  witopt::WitnessReport report;
};

namespace {

thread_local std::string g_last_error;

witopt_status fail(witopt_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

template <typename F>
witopt_status guard(F&& body) {
  try {
    body();
    g_last_error.clear();
    return WITOPT_OK;
  } catch (const witopt::ParseError& e) {
    return fail(WITOPT_ERR_PARSE, e.what());
  } catch (const witopt::DimensionError& e) {
    return fail(WITOPT_ERR_DIMENSION, e.what());
  } catch (const witopt::NumericalError& e) {
    return fail(WITOPT_ERR_NUMERICAL, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(WITOPT_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(WITOPT_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(WITOPT_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(WITOPT_ERR_INTERNAL, "unknown error");
  }
}

char* copyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

witopt_verdict toVerdict(witopt::Status s) {
  switch (s) {
    case witopt::Status::Optimal: return WITOPT_OPTIMAL;
    case witopt::Status::WeaklyOptimal: return WITOPT_WEAKLY_OPTIMAL;
    case witopt::Status::NotBlockPositive: return WITOPT_NOT_BLOCK_POSITIVE;
    case witopt::Status::BoundViolated: return WITOPT_BOUND_VIOLATED;
    case witopt::Status::Consistent: return WITOPT_CONSISTENT;
    case witopt::Status::Inconclusive: return WITOPT_INCONCLUSIVE;
  }
  return WITOPT_INCONCLUSIVE;
}

std::vector<std::string> splitList(const char* text) {
  std::vector<std::string> out;
  if (text == nullptr) return out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

void requireNonNull(const void* p, const char* what) {
  if (p == nullptr) throw std::invalid_argument(std::string(what) + " must not be NULL");
}

witopt_check_options defaults() {
  witopt_check_options o;
  witopt_check_options_init(&o);
  return o;
}

}  // namespace

extern "C" {

const char* witopt_version(void) { return witopt::kVersion; }

const char* witopt_last_error(void) { return g_last_error.c_str(); }

void witopt_string_free(char* s) { std::free(s); }

const char* witopt_status_name(witopt_status status) {
  switch (status) {
    case WITOPT_OK: return "ok";
    case WITOPT_ERR_INVALID_ARGUMENT: return "invalid argument";
    case WITOPT_ERR_DIMENSION: return "dimension error";
    case WITOPT_ERR_NUMERICAL: return "numerical error";
    case WITOPT_ERR_PARSE: return "parse error";
    case WITOPT_ERR_NOT_FOUND: return "not found";
    case WITOPT_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

const char* witopt_verdict_name(witopt_verdict verdict) {
  switch (verdict) {
    case WITOPT_OPTIMAL: return "OPTIMAL";
    case WITOPT_WEAKLY_OPTIMAL: return "WEAKLY_OPTIMAL";
    case WITOPT_NOT_BLOCK_POSITIVE: return "NOT_BLOCK_POSITIVE";
    case WITOPT_BOUND_VIOLATED: return "BOUND_VIOLATED";
    case WITOPT_CONSISTENT: return "CONSISTENT";
    case WITOPT_INCONCLUSIVE: return "INCONCLUSIVE";
  }
  return "UNKNOWN";
}

witopt_status witopt_operator_create(int dim_a, int dim_b, const double* re, const double* im,
                                     const char* name, int block_positive,
                                     witopt_operator** out) {
  return guard([&] {
    requireNonNull(out, "out");
    requireNonNull(re, "re");
    *out = nullptr;
    if (dim_a < 1 || dim_b < 1) throw witopt::DimensionError("dims must be positive");
    const int size = dim_a * dim_b;
    witopt::ComplexMatrix m(size, size);
    for (int i = 0; i < size; ++i) {
      for (int j = 0; j < size; ++j) {
        const std::size_t k = static_cast<std::size_t>(i) * size + j;
        m(i, j) = witopt::Complex(re[k], im != nullptr ? im[k] : 0.0);
      }
    }
    auto* op = new witopt_operator;
    op->spec.name = name != nullptr ? name : "matrix";
    op->spec.witness = witopt::BipartiteOperator({dim_a, dim_b}, std::move(m));
    op->spec.block_positive_attested = block_positive != 0;
    *out = op;
  });
}

witopt_status witopt_operator_from_json(const char* text, witopt_operator** out) {
  return guard([&] {
    requireNonNull(out, "out");
    requireNonNull(text, "text");
    *out = nullptr;
    witopt::MatrixFile file = witopt::parseMatrixFile(text);
    auto* op = new witopt_operator;
    op->spec.name = file.name.empty() ? "matrix" : file.name;
    op->spec.witness = std::move(file.matrix);
    op->spec.block_positive_attested = file.block_positive;
    *out = op;
  });
}

witopt_status witopt_operator_to_json(const witopt_operator* op, char** out) {
  return guard([&] {
    requireNonNull(op, "operator");
    requireNonNull(out, "out");
    *out = copyString(witopt::writeMatrixFile(
        {op->spec.witness, op->spec.name, op->spec.block_positive_attested}));
  });
}

witopt_status witopt_operator_dims(const witopt_operator* op, int* dim_a, int* dim_b) {
  return guard([&] {
    requireNonNull(op, "operator");
    if (dim_a != nullptr) *dim_a = op->spec.witness.dimA();
    if (dim_b != nullptr) *dim_b = op->spec.witness.dimB();
  });
}

witopt_status witopt_operator_entries(const witopt_operator* op, double* re, double* im) {
  return guard([&] {
    requireNonNull(op, "operator");
    requireNonNull(re, "re");
    const witopt::ComplexMatrix& m = op->spec.witness.matrix();
    const auto size = m.rows();
    for (Eigen::Index i = 0; i < size; ++i) {
      for (Eigen::Index j = 0; j < size; ++j) {
        const std::size_t k = static_cast<std::size_t>(i * size + j);
        re[k] = m(i, j).real();
        if (im != nullptr) im[k] = m(i, j).imag();
      }
    }
  });
}

witopt_status witopt_operator_name(const witopt_operator* op, char** out) {
  return guard([&] {
    requireNonNull(op, "operator");
    requireNonNull(out, "out");
    *out = copyString(op->spec.name);
  });
}

int witopt_operator_has_map(const witopt_operator* op) {
  return op != nullptr && op->spec.source_map.has_value() ? 1 : 0;
}

witopt_status witopt_operator_map_trace(const witopt_operator* op, double* out) {
  return guard([&] {
    requireNonNull(op, "operator");
    requireNonNull(out, "out");
    if (!op->spec.source_map) throw std::invalid_argument("operator has no source map");
    *out = witopt::superoperatorTrace(*op->spec.source_map);
  });
}

void witopt_operator_destroy(witopt_operator* op) { delete op; }

size_t witopt_catalog_size(void) { return witopt::catalogNames().size(); }

const char* witopt_catalog_name(size_t index) {
  const auto& names = witopt::catalogNames();
  return index < names.size() ? names[index].c_str() : nullptr;
}

int witopt_catalog_default_dim(const char* name) {
  if (name == nullptr) return 0;
  try {
    return witopt::catalogDefaultDim(name);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return 0;
  }
}

witopt_status witopt_catalog_witness(const char* name, int dim, witopt_operator** out) {
  if (name != nullptr) {
    const auto& names = witopt::catalogNames();
    if (std::find(names.begin(), names.end(), name) == names.end()) {
      return fail(WITOPT_ERR_NOT_FOUND, std::string("unknown witness '") + name + "'");
    }
  }
  return guard([&] {
    requireNonNull(name, "name");
    requireNonNull(out, "out");
    *out = nullptr;
    std::optional<int> d;
    if (dim > 0) d = dim;
    *out = new witopt_operator{witopt::catalogWitness(name, d)};
  });
}

void witopt_check_options_init(witopt_check_options* options) {
  if (options == nullptr) return;
  options->seed = 1;
  options->tol = 0.0;
  options->restarts = 0;
  options->criteria = nullptr;
  options->threshold = 0.0;
  options->assume_block_positive = 0;
  options->analytic_gradient = 0;
}

witopt_status witopt_check(const witopt_operator* op, const witopt_check_options* options,
                           witopt_report** out) {
  return guard([&] {
    requireNonNull(op, "operator");
    requireNonNull(out, "out");
    *out = nullptr;
    const witopt_check_options o = options != nullptr ? *options : defaults();
    witopt::CriteriaConfig cfg;
    cfg.seed = o.seed;
    if (o.tol > 0.0) cfg.eigen_tol = o.tol;
    if (o.restarts > 0) cfg.seesaw_restarts = o.restarts;
    cfg.criteria = splitList(o.criteria);
    cfg.threshold_c = o.threshold;
    cfg.block_positive_attested = o.assume_block_positive != 0;
    *out = new witopt_report{witopt::runAll(op->spec, cfg)};
  });
}

witopt_status witopt_optimize(const witopt_operator* op, const witopt_check_options* options,
                              witopt_report** out) {
  return guard([&] {
    requireNonNull(op, "operator");
    requireNonNull(out, "out");
    *out = nullptr;
    const witopt_check_options o = options != nullptr ? *options : defaults();
    witopt::OptimizerConfig opt;
    opt.seed = o.seed;
    if (o.restarts > 0) opt.restarts = o.restarts;
    opt.gradient_mode = o.analytic_gradient != 0 ? witopt::GradientMode::Analytic
                                                 : witopt::GradientMode::FiniteDifference;
    witopt::CriteriaConfig cfg;
    cfg.seed = o.seed;
    if (o.tol > 0.0) cfg.eigen_tol = o.tol;
    cfg.block_positive_attested = o.assume_block_positive != 0;
    *out = new witopt_report{witopt::runOptimize(op->spec, opt, cfg)};
  });
}

witopt_verdict witopt_report_overall(const witopt_report* report) {
  return report != nullptr ? toVerdict(report->report.overall) : WITOPT_INCONCLUSIVE;
}

size_t witopt_report_criterion_count(const witopt_report* report) {
  return report != nullptr ? report->report.verdicts.size() : 0;
}

const char* witopt_report_criterion_id(const witopt_report* report, size_t index) {
  if (report == nullptr || index >= report->report.verdicts.size()) return nullptr;
  return report->report.verdicts[index].criterion_id.c_str();
}

witopt_status witopt_report_criterion_verdict(const witopt_report* report, const char* id,
                                              witopt_verdict* out) {
  if (report != nullptr && id != nullptr && report->report.verdict(id) == nullptr) {
    return fail(WITOPT_ERR_NOT_FOUND, std::string("criterion '") + id + "' not in report");
  }
  return guard([&] {
    requireNonNull(report, "report");
    requireNonNull(id, "id");
    requireNonNull(out, "out");
    *out = toVerdict(report->report.verdict(id)->status);
  });
}

witopt_status witopt_report_evidence(const witopt_report* report, const char* id,
                                     const char* key, double* out) {
  if (report != nullptr && id != nullptr && key != nullptr) {
    const auto* v = report->report.verdict(id);
    if (v == nullptr || !v->evidenceValue(key)) {
      return fail(WITOPT_ERR_NOT_FOUND,
                  std::string("no evidence '") + key + "' for criterion '" + id + "'");
    }
  }
  return guard([&] {
    requireNonNull(report, "report");
    requireNonNull(id, "id");
    requireNonNull(key, "key");
    requireNonNull(out, "out");
    *out = *report->report.verdict(id)->evidenceValue(key);
  });
}

witopt_status witopt_report_json(const witopt_report* report, char** out) {
  return guard([&] {
    requireNonNull(report, "report");
    requireNonNull(out, "out");
    *out = copyString(witopt::reportToJson(report->report));
  });
}

witopt_status witopt_report_summary(const witopt_report* report, char** out) {
  return guard([&] {
    requireNonNull(report, "report");
    requireNonNull(out, "out");
    *out = copyString(witopt::reportSummary(report->report));
  });
}

void witopt_report_destroy(witopt_report* report) { delete report; }

witopt_status witopt_demo(const char* name, uint64_t seed, char** out) {
  return guard([&] {
    requireNonNull(name, "name");
    requireNonNull(out, "out");
    *out = copyString(witopt::demoText(name, seed));
  });
}

}  // extern "C"

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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "witopt/witopt.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNotBlockPositive = 2;

struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OperatorDeleter {
  void operator()(witopt_operator* op) const { witopt_operator_destroy(op); }
};
struct ReportDeleter {
  void operator()(witopt_report* r) const { witopt_report_destroy(r); }
};
using OperatorPtr = std::unique_ptr<witopt_operator, OperatorDeleter>;
using ReportPtr = std::unique_ptr<witopt_report, ReportDeleter>;

void check(witopt_status status) {
  if (status != WITOPT_OK) {
    throw CliError(std::string(witopt_status_name(status)) + ": " + witopt_last_error());
  }
}

std::string take(char* s) {
  std::string out(s != nullptr ? s : "");
  witopt_string_free(s);
  return out;
}

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void writeOutput(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliError("cannot write '" + path + "'");
  out << text;
  if (!out) throw CliError("failed writing '" + path + "'");
}

bool isCatalogName(const std::string& name) {
  for (std::size_t i = 0; i < witopt_catalog_size(); ++i) {
    if (name == witopt_catalog_name(i)) return true;
  }
  return false;
}

OperatorPtr loadWitness(const std::string& witness, int dim) {
  witopt_operator* op = nullptr;
  if (isCatalogName(witness)) {
    check(witopt_catalog_witness(witness.c_str(), dim, &op));
  } else {
    std::ifstream probe(witness);
    if (!probe) throw CliError("'" + witness + "' is neither a catalog witness nor a readable file");
    check(witopt_operator_from_json(readFile(witness).c_str(), &op));
  }
  return OperatorPtr(op);
}

struct Options {
  std::string witness;
  int dim = 0;
  std::string criteria;
  int restarts = 0;
  std::uint64_t seed = 1;
  double tol = 0.0;
  double threshold = 0.0;
  bool analytic = false;
  std::string json;
  std::string out;
  std::string name;
};

witopt_check_options toOptions(const Options& o) {
  witopt_check_options opts;
  witopt_check_options_init(&opts);
  opts.seed = o.seed;
  opts.tol = o.tol;
  opts.restarts = o.restarts;
  opts.criteria = o.criteria.empty() ? nullptr : o.criteria.c_str();
  opts.threshold = o.threshold;
  opts.analytic_gradient = o.analytic ? 1 : 0;
  return opts;
}

int runCheck(const Options& o, bool optimize) {
  const OperatorPtr op = loadWitness(o.witness, o.dim);
  const witopt_check_options opts = toOptions(o);
  witopt_report* raw = nullptr;
  check(optimize ? witopt_optimize(op.get(), &opts, &raw) : witopt_check(op.get(), &opts, &raw));
  const ReportPtr report(raw);
  char* text = nullptr;
  check(witopt_report_summary(report.get(), &text));
  const std::string summary = take(text);
  if (!o.json.empty()) {
    check(witopt_report_json(report.get(), &text));
    const std::string json = take(text);
    writeOutput(o.json, json);
    if (o.json != "-") std::cout << summary;
  } else {
    std::cout << summary;
  }
  const witopt_verdict overall = witopt_report_overall(report.get());
  return overall == WITOPT_NOT_BLOCK_POSITIVE || overall == WITOPT_BOUND_VIOLATED
             ? kExitNotBlockPositive
             : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement witness optimality checker"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(witopt_version()));
  Options o;

  auto* catalog = app.add_subcommand("catalog", "List or emit catalog witnesses");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "List catalog witnesses");
  auto* emit = catalog->add_subcommand("emit", "Write a catalog witness as a matrix file");
  emit->add_option("name", o.name, "Catalog witness name")->required();
  emit->add_option("--dim", o.dim, "Local dimension (total local dimension for block maps)");
  emit->add_option("--out", o.out, "Output file (default: stdout)");

  auto* chk = app.add_subcommand("check", "Run the optimality criteria on a witness");
  chk->add_option("--witness", o.witness, "Catalog name or matrix file")->required();
  chk->add_option("--dim", o.dim, "Dimension for catalog witnesses");
  chk->add_option("--criteria", o.criteria, "Comma-separated criterion ids");
  chk->add_option("--restarts", o.restarts, "Seesaw restarts");
  chk->add_option("--seed", o.seed, "Random seed");
  chk->add_option("--tol", o.tol, "Eigenvalue-match tolerance");
  chk->add_option("--threshold", o.threshold, "Threshold C for the shifted inequalities");
  chk->add_option("--json", o.json, "Write the JSON report here ('-' for stdout)");

  auto* opt = app.add_subcommand("optimize", "Minimize the witness functional over U(n)");
  opt->add_option("--witness", o.witness, "Catalog name or matrix file")->required();
  opt->add_option("--dim", o.dim, "Dimension for catalog witnesses");
  opt->add_option("--restarts", o.restarts, "Optimizer restarts");
  opt->add_option("--seed", o.seed, "Random seed");
  opt->add_option("--tol", o.tol, "Saturation tolerance");
  opt->add_flag("--analytic", o.analytic, "Use analytic gradients");
  opt->add_option("--json", o.json, "Write the JSON report here ('-' for stdout)");

  auto* demo = app.add_subcommand("demo", "Print a worked reproduction");
  demo->add_option("name", o.name, "appendix-a | appendix-b | appendix-c")
      ->required()
      ->check(CLI::IsMember({"appendix-a", "appendix-b", "appendix-c"}));
  demo->add_option("--seed", o.seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (*list) {
      for (std::size_t i = 0; i < witopt_catalog_size(); ++i) {
        const char* name = witopt_catalog_name(i);
        std::cout << name << "  (default dim " << witopt_catalog_default_dim(name) << ")\n";
      }
      return kExitOk;
    }
    if (*emit) {
      witopt_operator* raw = nullptr;
      check(witopt_catalog_witness(o.name.c_str(), o.dim, &raw));
      const OperatorPtr op(raw);
      char* text = nullptr;
      check(witopt_operator_to_json(op.get(), &text));
      writeOutput(o.out, take(text));
      return kExitOk;
    }
    if (*chk) return runCheck(o, false);
    if (*opt) return runCheck(o, true);
    if (*demo) {
      char* text = nullptr;
      check(witopt_demo(o.name.c_str(), o.seed, &text));
      std::cout << take(text);
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "witopt: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

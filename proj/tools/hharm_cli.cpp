// Copyright 2026 The hharm Authors.
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

// Command-line front end.
//
//   hharm kernel --n 4 --r1 2 --r2 2 --s 1
//   hharm verify --n 6 --all
//   hharm fourier-coeffs --n 3 --basis tilde
//   hharm fwht input.txt --n 3
//
// Exit codes: 0 success, 1 a check failed, 2 usage or guard error.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "hharm/hharm.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
  int n = -1;
  std::string format = "text";
  std::string out;
};

/// Writes to --out when given, otherwise to stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw std::invalid_argument("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

int require_n(const Options& opt) {
  if (opt.n < 0) throw std::invalid_argument("--n is required");
  return opt.n;
}

int cmd_kernel(const Options& opt, int r1, int r2, int s) {
  const int n = require_n(opt);
  hharm::require_guard(n, hharm::kMaxSubsetN, "kernel");
  const hharm::ParamTriple p(n, r1, r2, s);
  const hharm::KernelTable table(p);
  Sink sink(opt.out);
  std::ostream& os = sink.stream();
  if (opt.format == "json") {
    nlohmann::ordered_json doc;
    doc["table"] = "kernel";
    doc["n"] = n;
    doc["r1"] = r1;
    doc["r2"] = r2;
    doc["s"] = s;
    auto rows = nlohmann::ordered_json::array();
    for (int k = table.k_min(); k <= table.k_max(); ++k) {
      rows.push_back({{"k", k}, {"value", hharm::to_string(table.at(k))}});
    }
    doc["rows"] = std::move(rows);
    os << doc.dump() << '\n';
  } else if (opt.format == "csv") {
    os << "k,value\n";
    for (int k = table.k_min(); k <= table.k_max(); ++k) os << k << ',' << table.at(k) << '\n';
  } else {
    os << "# lambda " << p.str() << "\n# k value\n";
    for (int k = table.k_min(); k <= table.k_max(); ++k) os << k << ' ' << table.at(k) << '\n';
  }
  return kExitOk;
}

int cmd_verify(const Options& opt, std::vector<std::string> suites, bool all, bool timing) {
  if (all) {
    suites.clear();
    for (const auto& info : hharm::suite_registry()) suites.emplace_back(info.name);
  }
  if (suites.empty()) throw std::invalid_argument("verify: give --suite NAME or --all");
  // Validate every name and size before running anything.
  for (const auto& name : suites) {
    const auto& info = hharm::find_suite(name);
    if (opt.n >= 0) hharm::require_guard(opt.n, info.max_n, std::string("suite ") + info.name);
  }
  Sink sink(opt.out);
  std::ostream& os = sink.stream();
  if (opt.format == "csv") hharm::write_csv_header(os);
  bool passed = true;
  for (const auto& name : suites) {
    const hharm::Report report = hharm::run_suite(name, opt.n, timing);
    passed = passed && report.passed();
    if (opt.format == "json") {
      os << hharm::to_json(report).dump() << '\n';
    } else if (opt.format == "csv") {
      hharm::write_csv(os, report);
    } else {
      hharm::write_text(os, report);
    }
  }
  if (opt.format == "text") os << "verify: " << (passed ? "PASS" : "FAIL") << '\n';
  return passed ? kExitOk : kExitFailed;
}

int cmd_fourier_coeffs(const Options& opt, const std::string& basis) {
  const int n = require_n(opt);
  hharm::require_guard(n, hharm::kMaxSubsetN, "fourier-coeffs");
  const bool tilde = basis == "tilde";
  Sink sink(opt.out);
  std::ostream& os = sink.stream();
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  if (opt.format == "csv") os << "r1,r2,s,value,k_symmetric\n";
  if (opt.format == "text") os << "# " << basis << " coefficients, n=" << n << "\n# r1 r2 s value k_symmetric\n";
  for (const auto& p : hharm::valid_triples(n)) {
    const std::string value =
        tilde ? hharm::fourier_coeff_tilde(p).str() : hharm::to_string(hharm::fourier_coeff_plain(p));
    const bool symmetric = hharm::fourier_coeff_tilde(p) ==
                           hharm::fourier_coeff_tilde(hharm::ParamTriple(n, p.r2(), p.r1(), p.s()));
    if (opt.format == "json") {
      rows.push_back({{"r1", p.r1()}, {"r2", p.r2()}, {"s", p.s()}, {"value", value},
                      {"k_symmetric", symmetric}});
    } else {
      const char sep = opt.format == "csv" ? ',' : ' ';
      os << p.r1() << sep << p.r2() << sep << p.s() << sep << value << sep
         << (symmetric ? "yes" : "no") << '\n';
    }
  }
  if (opt.format == "json") {
    nlohmann::ordered_json doc;
    doc["table"] = "fourier-coeffs";
    doc["n"] = n;
    doc["basis"] = basis;
    doc["rows"] = std::move(rows);
    os << doc.dump() << '\n';
  }
  return kExitOk;
}

int cmd_fwht(const Options& opt, const std::string& input) {
  const int n = require_n(opt);
  hharm::require_guard(n, hharm::kMaxSubsetN, "fwht");
  std::ifstream in(input);
  if (!in) throw std::invalid_argument("cannot open input file " + input);
  std::vector<hharm::BigInt> v;
  std::string token;
  while (in >> token) {
    try {
      v.emplace_back(token);
    } catch (const std::exception&) {
      throw std::invalid_argument("not an integer: '" + token + "'");
    }
  }
  const auto result = hharm::fwht(std::move(v), n);
  Sink sink(opt.out);
  std::ostream& os = sink.stream();
  for (std::size_t i = 0; i < result.size(); ++i) os << (i == 0 ? "" : " ") << result[i];
  os << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact harmonic analysis on the Boolean lattice under the symmetric group"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--n", opt.n, "Ground-set size")->check(CLI::NonNegativeNumber);
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--out", opt.out, "Write output to FILE instead of stdout");

  int r1 = 0, r2 = 0, s = 0;
  auto* kernel = app.add_subcommand("kernel", "Kernel values over the orbit window");
  kernel->fallthrough();
  kernel->add_option("--r1", r1, "Domain level")->required();
  kernel->add_option("--r2", r2, "Codomain level")->required();
  kernel->add_option("--s", s, "Isotypic index")->required();

  std::vector<std::string> suites;
  bool all = false;
  bool timing = false;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->fallthrough();
  verify->add_option("--suite", suites, "Suite to run (repeatable)")->take_all();
  verify->add_flag("--all", all, "Run every suite");
  verify->add_flag("--timing", timing, "Include wall time (ms) in reports");

  std::string basis = "plain";
  auto* coeffs = app.add_subcommand("fourier-coeffs", "Coefficients of F in the Lambda basis");
  coeffs->fallthrough();
  coeffs->add_option("--basis", basis, "plain or tilde")->check(CLI::IsMember({"plain", "tilde"}));

  std::string input;
  auto* fwht = app.add_subcommand("fwht", "Fast Walsh-Hadamard transform of an integer vector");
  fwht->fallthrough();
  fwht->add_option("input", input, "Whitespace-separated integers")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*kernel) return cmd_kernel(opt, r1, r2, s);
    if (*verify) return cmd_verify(opt, suites, all, timing);
    if (*coeffs) return cmd_fourier_coeffs(opt, basis);
    if (*fwht) return cmd_fwht(opt, input);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}

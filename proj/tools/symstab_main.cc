// Copyright 2026 The symstab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// symstab command line.
//
//   symstab analyze STATE.json [--json]
//   symstab equiv A.json B.json [--json]
//   symstab sample --n N --mode amp|points [--m M] --trials T --seed S [--out F]
//
// Exit codes: 0 success, 1 malformed input or invalid flags, 2 numeric or
// internal failure, 3 qubit-count mismatch.

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "symstab/experiments.h"
#include "symstab/invariants.h"
#include "symstab/io.h"
#include "symstab/majorana.h"
#include "symstab/oracle.h"
#include "symstab/slocc.h"
#include "symstab/stabilizer.h"

namespace {

using nlohmann::json;
using namespace symstab;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitNumeric = 2;
constexpr int kExitMismatch = 3;

std::string FormatComplex(Complex z) {
  char buffer[96];
  std::snprintf(buffer, sizeof(buffer), "%.12g%+.12gi", z.real(), z.imag());
  return buffer;
}

std::string FormatMatrix(const Mat2& g) {
  return "[[" + FormatComplex(g(0, 0)) + ", " + FormatComplex(g(0, 1)) + "], [" +
         FormatComplex(g(1, 0)) + ", " + FormatComplex(g(1, 1)) + "]]";
}

std::string FormatList(const std::vector<int>& values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(values[i]);
  }
  return out + "}";
}

std::string FormatPlane(const ProjectivePoint& p) {
  const auto z = p.plane();
  return z ? FormatComplex(*z) : "inf";
}

json ComplexJson(Complex z) { return json::array({z.real(), z.imag()}); }

json MatrixJson(const Mat2& g) {
  return json::array({json::array({ComplexJson(g(0, 0)), ComplexJson(g(0, 1))}),
                      json::array({ComplexJson(g(1, 0)), ComplexJson(g(1, 1))})});
}

struct Options {
  Tolerances tol;
  bool json = false;
};

int Analyze(const std::string& path, const Options& options) {
  const LoadedState loaded = LoadStateFile(path);
  const SymmetricState& state = loaded.state;
  const MajoranaSet points = MajoranaDecompose(state, options.tol);
  const DegeneracyConfiguration config = ComputeDegeneracyConfiguration(points);
  const PrecheckResult precheck = ConfigPrecheck(config);
  const StabilizerVerdict verdict = DecideStabilizer(state, points, options.tol);
  const Complex f2 = F2(state);
  const std::optional<Complex> f4 =
      state.n() >= 2 ? std::optional<Complex>(F4(state)) : std::nullopt;
  const bool critical = IsCritical(state);
  const bool rescaled = std::abs(loaded.input_norm - 1.0) > 1e-12;

  if (options.json) {
    json report;
    report["n"] = state.n();
    json dicke = json::array();
    for (const Complex& x : state.amplitudes()) dicke.push_back(ComplexJson(x));
    report["dicke"] = dicke;
    report["input_norm"] = loaded.input_norm;
    report["normalized_on_load"] = rescaled;
    json clusters = json::array();
    for (const Cluster& c : points.clusters) {
      const auto z = c.point.plane();
      clusters.push_back({{"a", ComplexJson(c.point.a())},
                          {"b", ComplexJson(c.point.b())},
                          {"plane", z ? ComplexJson(*z) : json("inf")},
                          {"mult", c.multiplicity}});
    }
    report["clusters"] = clusters;
    report["configuration"] = config.multiplicities;
    report["partition"] = config.partition;
    report["diversity"] = config.diversity;
    report["precheck"] = ToString(precheck);
    report["verdict"] = verdict.trivial ? "trivial" : "nontrivial";
    report["method"] = ToString(verdict.method);
    if (verdict.certificate) {
      json lambdas = json::array();
      for (const Complex& l : verdict.certificate->lambdas) lambdas.push_back(ComplexJson(l));
      report["certificate"] = {{"g", MatrixJson(verdict.certificate->g.matrix())},
                               {"permutation", verdict.certificate->permutation},
                               {"lambdas", lambdas},
                               {"residual", verdict.residual},
                               {"dense_verified", verdict.dense_verified}};
    } else {
      report["certificate"] = nullptr;
    }
    report["f2"] = ComplexJson(f2);
    report["f4"] = f4 ? ComplexJson(*f4) : json(nullptr);
    report["critical"] = critical;
    std::cout << report.dump(2) << '\n';
    return kExitOk;
  }

  std::cout << "n: " << state.n() << '\n';
  if (rescaled) {
    std::cout << "note: input norm " << loaded.input_norm << ", normalized on load\n";
  }
  std::cout << "dicke amplitudes:\n";
  for (int k = 0; k <= state.n(); ++k) {
    std::cout << "  x" << k << " = " << FormatComplex(state.amplitude(k)) << '\n';
  }
  std::cout << "majorana clusters:\n";
  for (const Cluster& c : points.clusters) {
    std::cout << "  z = " << FormatPlane(c.point) << "  mult " << c.multiplicity << '\n';
  }
  std::cout << "configuration: " << FormatList(config.multiplicities) << '\n'
            << "diversity: " << config.diversity << '\n'
            << "precheck: " << ToString(precheck) << '\n'
            << "verdict: " << (verdict.trivial ? "trivial" : "nontrivial") << " ("
            << ToString(verdict.method) << ")\n";
  if (verdict.certificate) {
    std::cout << "certificate g: " << FormatMatrix(verdict.certificate->g.matrix()) << '\n'
              << "permutation: " << FormatList(verdict.certificate->permutation) << '\n'
              << "residual: " << verdict.residual
              << (verdict.dense_verified ? " (dense oracle)" : " (unverified-dense)") << '\n';
  }
  std::cout << "f2: " << FormatComplex(f2) << '\n'
            << "f4: " << (f4 ? FormatComplex(*f4) : std::string("n/a")) << '\n'
            << "critical: " << (critical ? "yes" : "no") << '\n';
  return kExitOk;
}

int Equiv(const std::string& path_a, const std::string& path_b, const Options& options) {
  const LoadedState a = LoadStateFile(path_a);
  const LoadedState b = LoadStateFile(path_b);
  if (a.state.n() != b.state.n()) {
    std::cerr << "error: qubit counts differ (" << a.state.n() << " vs " << b.state.n()
              << ")\n";
    return kExitMismatch;
  }
  const auto forward = Convert(a.state, b.state, options.tol);
  if (!forward) {
    if (options.json) {
      std::cout << json{{"equivalent", false}}.dump(2) << '\n';
    } else {
      std::cout << "inequivalent\n";
    }
    return kExitOk;
  }
  const auto backward = Convert(b.state, a.state, options.tol);
  if (!backward) throw InternalInconsistencyError("equivalence found in one direction only");
  const bool trivial_a = DecideStabilizer(a.state, options.tol).trivial;
  const bool trivial_b = DecideStabilizer(b.state, options.tol).trivial;
  // p_max = 1 both ways means g has both singular values equal to 1.
  const bool lu = std::abs(forward->p_max - 1.0) <= 1e-10 &&
                  std::abs(backward->p_max - 1.0) <= 1e-10;

  if (options.json) {
    auto direction = [](const ConversionReport& r, bool hypothesis) {
      return json{{"witness", MatrixJson(r.witness.matrix())},
                  {"g", MatrixJson(r.g.matrix())},
                  {"phase", ComplexJson(r.phase)},
                  {"p_max", r.p_max},
                  {"source_stabilizer_trivial", hypothesis}};
    };
    std::cout << json{{"equivalent", true},
                      {"forward", direction(*forward, trivial_a)},
                      {"backward", direction(*backward, trivial_b)},
                      {"lu_equivalent", lu}}
                     .dump(2)
              << '\n';
    return kExitOk;
  }

  auto print = [](const char* label, const ConversionReport& r, bool hypothesis) {
    std::cout << label << ":\n"
              << "  witness: " << FormatMatrix(r.witness.matrix()) << '\n'
              << "  g: " << FormatMatrix(r.g.matrix()) << '\n'
              << "  phase: " << FormatComplex(r.phase) << '\n';
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.15g", r.p_max);
    std::cout << "  p_max: " << buffer << '\n'
              << "  source stabilizer: "
              << (hypothesis ? "trivial (p_max hypothesis holds)"
                             : "nontrivial (p_max hypothesis not met; value for this witness)")
              << '\n';
  };
  std::cout << "equivalent\n";
  print("A -> B", *forward, trivial_a);
  print("B -> A", *backward, trivial_b);
  if (lu) std::cout << "states are LU-equivalent: deterministic conversion possible\n";
  return kExitOk;
}

struct SampleOptions {
  int n = 0;
  std::string mode;
  int m = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  std::string out;
};

int Sample(const SampleOptions& s, const Options& options) {
  SamplingSpec spec;
  if (s.mode == "amp") {
    if (s.m != 0) {
      std::cerr << "error: --m only applies to --mode points\n";
      return kExitInput;
    }
    spec = SamplingSpec::Amplitudes();
  } else {
    if (s.m < 1 || s.m > s.n) {
      std::cerr << "error: --mode points needs 1 <= --m <= --n\n";
      return kExitInput;
    }
    spec = SamplingSpec::Points(s.m);
  }
  const TrivialFractionRow row = TrivialFraction(s.n, spec, s.trials, s.seed, options.tol);
  const TrivialFractionRow rows[] = {row};
  if (s.out.empty()) {
    WriteCsv(std::cout, rows);
  } else {
    std::ofstream out(s.out);
    if (!out) {
      std::cerr << "error: cannot write " << s.out << '\n';
      return kExitInput;
    }
    WriteCsv(out, rows);
  }
  std::fprintf(stderr, "n=%d mode=%s trials=%d trivial=%d fraction=%.6f (empirical)%s\n",
               row.n, s.mode == "amp" ? "amp" : ("points m=" + std::to_string(s.m)).c_str(),
               row.trials, row.trivial, row.fraction,
               row.unverified_dense ? " unverified-dense" : "");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local stabilizers and SLOCC equivalence of symmetric qubit states"};
  app.require_subcommand(1);
  app.fallthrough();
  Options options;
  app.add_option("--tol-point", options.tol.point, "point coincidence tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--tol-degree", options.tol.degree, "relative polynomial coefficient cutoff")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--tol-certificate", options.tol.certificate, "certificate residual bound")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_flag("--json", options.json, "machine-readable output");

  std::string analyze_path;
  CLI::App* analyze = app.add_subcommand("analyze", "Majorana points, stabilizer, invariants");
  analyze->add_option("state", analyze_path, "state file")->required();

  std::string equiv_a;
  std::string equiv_b;
  CLI::App* equiv = app.add_subcommand("equiv", "SLOCC equivalence and p_max");
  equiv->add_option("a", equiv_a, "first state file")->required();
  equiv->add_option("b", equiv_b, "second state file")->required();

  SampleOptions sample_options;
  CLI::App* sample = app.add_subcommand("sample", "trivial-stabilizer fraction experiment");
  sample->add_option("--n", sample_options.n, "qubits")->required()->check(CLI::PositiveNumber);
  sample->add_option("--mode", sample_options.mode, "amp or points")
      ->required()
      ->check(CLI::IsMember({"amp", "points"}));
  sample->add_option("--m", sample_options.m, "distinct points (points mode)");
  sample->add_option("--trials", sample_options.trials, "number of trials")
      ->required()
      ->check(CLI::PositiveNumber);
  sample->add_option("--seed", sample_options.seed, "master seed")->capture_default_str();
  sample->add_option("--out", sample_options.out, "CSV output path (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*analyze) return Analyze(analyze_path, options);
    if (*equiv) return Equiv(equiv_a, equiv_b, options);
    if (*sample) return Sample(sample_options, options);
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << " (residual " << e.residual() << ")\n";
    return kExitNumeric;
  } catch (const Error& e) {
    std::cerr << "failure: " << e.what() << '\n';
    return kExitNumeric;
  }
  return kExitInput;
}

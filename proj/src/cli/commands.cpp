// Copyright 2026 The orthogate Authors
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

#include "cli/commands.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli/report.hpp"
#include "orthogate/capacity.hpp"
#include "orthogate/errors.hpp"
#include "orthogate/gate_io.hpp"
#include "orthogate/generators.hpp"
#include "orthogate/protocol.hpp"
#include "orthogate/symmetry.hpp"

namespace orthogate::cli {

namespace {

struct GateSource {
  std::string name;
  std::string file;
  std::size_t n = 3;
  std::uint64_t seed = 1;
  double alpha = 0.0;
  std::string b = "1,0";
};

struct Options {
  GateSource source;
  std::optional<double> tol;
  bool verbose = false;

  bool reverse = false;
  bool forward = false;
  std::size_t message = 0;
  bool all = false;
  std::vector<double> eta;

  std::vector<double> gamma;
  std::string out_path;
  bool random_symmetric = false;
};

void add_gate_options(CLI::App* cmd, GateSource& src) {
  auto* gate = cmd->add_option("--gate", src.name, "Built-in gate name (see `catalog`)");
  auto* file = cmd->add_option("--file", src.file, "Gate-spec JSON file");
  gate->excludes(file);
  cmd->add_option("--n", src.n, "Cardinality for shift / shifted-u / generators")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", src.seed, "Seed for randomly drawn operators");
  cmd->add_option("--alpha", src.alpha, "controlled-u phase alpha");
  cmd->add_option("--b", src.b, "controlled-u amplitude b as RE,IM");
}

cplx parse_complex(const std::string& text) {
  std::istringstream in(text);
  double re = 0.0;
  double im = 0.0;
  char comma = ',';
  in >> re;
  if (!in) throw ValidationError("--b: expected RE or RE,IM, got '" + text + "'");
  if (in >> comma) {
    if (comma != ',' || !(in >> im)) {
      throw ValidationError("--b: expected RE or RE,IM, got '" + text + "'");
    }
  }
  return {re, im};
}

double resolve_tolerance(const std::optional<double>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("ORTHOGATE_TOL"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const double value = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(value > 0.0)) {
      throw ValidationError(std::string("ORTHOGATE_TOL is not a positive number: '") + env + "'");
    }
    return value;
  }
  return kDefaultTol;
}

ControlledGate load_source(const GateSource& src, double tol) {
  if (!src.file.empty()) {
    try {
      return load_gate_file(src.file, tol);
    } catch (const ParseError& e) {
      throw ParseError(src.file + ":" + std::to_string(e.line()) + ":" +
                           std::to_string(e.column()) + ": " + e.what(),
                       e.line(), e.column());
    } catch (const ValidationError& e) {
      throw ValidationError(src.file + ": " + e.what());
    }
  }
  if (src.name.empty()) throw ValidationError("no gate given; use --gate NAME or --file PATH");
  CatalogParams params;
  params.n = src.n;
  params.seed = src.seed;
  params.alpha = src.alpha;
  params.b = parse_complex(src.b);
  return catalog(src.name, params, tol);
}

std::vector<double> phases_or_zero(const std::vector<double>& given, std::size_t n,
                                   const char* flag) {
  if (given.empty()) return std::vector<double>(n, 0.0);
  if (given.size() != n) {
    throw DimensionError(std::string(flag) + " has " + std::to_string(given.size()) +
                         " entries, expected " + std::to_string(n));
  }
  return given;
}

std::size_t message_index(std::size_t one_based, std::size_t n) {
  if (one_based < 1 || one_based > n) {
    throw DimensionError("-m " + std::to_string(one_based) + " out of range 1.." +
                         std::to_string(n));
  }
  return one_based - 1;
}

void emit(std::ostream& out, const json::Document& doc) { out << json::dump(doc) << '\n'; }

int cmd_check(const Options& opt, std::ostream& out, std::ostream& err) {
  const double tol = resolve_tolerance(opt.tol);
  const ControlledGate gate = load_source(opt.source, tol);
  json::Document doc = header("check", gate, tol);
  if (gate.reference()) {
    doc["orthogonality"] = orthogonality_json(verify_orthogonal(gate.unitaries(), *gate.reference(), tol));
  } else {
    doc["orthogonality"] = nullptr;
  }
  const CommutingCheck commuting = check_commuting(gate, tol);
  doc["commuting"] = {
      {"commuting", commuting.commuting},
      {"witness", commuting.witness ? witness_json(*commuting.witness) : json::Document(nullptr)}};
  const SymmetryReport report = analyze(gate, tol);
  doc["symmetry"] = symmetry_json(report);
  emit(out, doc);
  if (opt.verbose) {
    err << gate.label() << ": " << (report.symmetric ? "symmetric" : "asymmetric");
    if (report.witness) {
      const auto& w = *report.witness;
      err << " (products U" << w.n + 1 << "^dag U" << w.m + 1 << " and U" << w.p + 1
          << "^dag U" << w.q + 1 << " fail to commute, norm " << w.norm << ")";
    }
    err << '\n';
  }
  return report.symmetric ? kOk : kAsymmetric;
}

int cmd_simulate(const Options& opt, std::ostream& out, std::ostream& err) {
  const double tol = resolve_tolerance(opt.tol);
  const ControlledGate gate = load_source(opt.source, tol);
  const std::size_t n = gate.cardinality();
  if (!opt.all && opt.message == 0) throw ValidationError("simulate needs -m INDEX or --all");

  std::vector<std::size_t> messages;
  if (opt.all) {
    for (std::size_t i = 0; i < n; ++i) messages.push_back(i);
  } else {
    messages.push_back(message_index(opt.message, n));
  }

  json::Document doc = header("simulate", gate, tol);
  std::vector<ProtocolTranscript> transcripts;
  if (opt.reverse) {
    const std::vector<double> eta = phases_or_zero(opt.eta, n, "--eta");
    const SymmetryReport report = analyze(gate, tol);
    doc["direction"] = "reverse";
    doc["eta"] = eta;
    if (!report.symmetric) {
      doc["symmetry"] = symmetry_json(report);
      doc["status"] = "protocol-unavailable";
      emit(out, doc);
      err << "error: gate '" << gate.label()
          << "' is not symmetric, so the reverse protocol cannot carry N messages; "
             "see `capacity` for the achievable count\n";
      return kAsymmetric;
    }
    for (std::size_t r : messages) transcripts.push_back(run_reverse(gate, report, r, eta, tol));
  } else {
    doc["direction"] = "forward";
    for (std::size_t m : messages) transcripts.push_back(run_forward(gate, m, tol));
  }

  json::Document list = json::Document::array();
  bool all_decoded = true;
  for (const auto& t : transcripts) {
    list.push_back(transcript_json(t));
    all_decoded = all_decoded && t.decoded == t.message;
  }
  doc["transcripts"] = std::move(list);
  doc["all_decoded"] = all_decoded;
  if (opt.all) {
    Distinguishability d;
    if (opt.reverse) {
      d = check_distinguishability(transcripts, tol);
    } else {
      std::vector<StateVector> received;
      for (const auto& t : transcripts) {
        received.push_back(t.bob_output.value_or(StateVector::Zero(static_cast<Eigen::Index>(n))));
      }
      d.gram = gram(received);
      d.max_deviation = max_abs(d.gram - ComplexMatrix::Identity(d.gram.rows(), d.gram.cols()));
      d.distinguishable = d.max_deviation <= tol;
    }
    doc["distinguishability"] = distinguishability_json(d);
  }
  emit(out, doc);
  if (opt.verbose) {
    err << gate.label() << ": " << transcripts.size() << ' ' << (opt.reverse ? "reverse" : "forward")
        << " run(s), " << (all_decoded ? "all decoded" : "decoding failed") << '\n';
  }
  if (!all_decoded) {
    err << "error: a message was not decoded; the protocol preconditions do not hold numerically\n";
    return kNumericalFailure;
  }
  return kOk;
}

int cmd_capacity(const Options& opt, std::ostream& out, std::ostream& err) {
  const double tol = resolve_tolerance(opt.tol);
  const ControlledGate gate = load_source(opt.source, tol);
  const CapacityResult result = max_reverse_messages(gate, tol);
  const std::size_t bound = necessary_message_bound(gate, tol);
  json::Document doc = header("capacity", gate, tol);
  doc["certificate_tolerance"] = certificate_tolerance(tol);
  doc["capacity"] = capacity_json(result, bound);
  emit(out, doc);
  if (opt.verbose) {
    err << gate.label() << ": Bob can send " << result.messages << " of " << gate.cardinality()
        << " messages (necessary bound " << bound << ")\n";
  }
  return kOk;
}

int cmd_construct(const Options& opt, std::ostream& out, std::ostream& err) {
  const double tol = resolve_tolerance(opt.tol);
  std::optional<ControlledGate> gate;
  if (opt.random_symmetric) {
    if (!opt.source.name.empty() || !opt.source.file.empty()) {
      throw ValidationError("--random-symmetric cannot be combined with --gate or --file");
    }
    gate.emplace(random_symmetric_gate(opt.source.n, opt.source.seed));
  } else {
    gate.emplace(load_source(opt.source, tol));
  }

  json::Document doc = header("construct", *gate, tol);
  const SymmetryReport report = analyze(*gate, tol);
  if (!report.symmetric) {
    doc["symmetry"] = symmetry_json(report);
    doc["status"] = "protocol-unavailable";
    emit(out, doc);
    err << "error: gate '" << gate->label()
        << "' is not symmetric; no shared eigenbasis exists to build the states from\n";
    return kAsymmetric;
  }
  const std::vector<double> gamma_list = phases_or_zero(opt.gamma, gate->cardinality(), "--gamma");
  const RealVector gamma = Eigen::Map<const RealVector>(gamma_list.data(),
                                                        static_cast<Eigen::Index>(gamma_list.size()));
  const ConstructedStates states = construct_states(report, gamma, tol);
  const std::vector<StateVector> eigenstates = eigenstates_from_basis(report, states.basis, gamma, tol);
  doc["symmetry"] = symmetry_json(report);
  doc["construction"] = constructed_json(states, eigenstates);

  if (!opt.out_path.empty()) {
    const ControlledGate written(gate->label(), gate->unitaries(), states.reference, tol);
    std::ofstream file(opt.out_path, std::ios::binary);
    if (!file) throw ValidationError("cannot write '" + opt.out_path + "'");
    file << save_gate(written);
    if (!file) throw ValidationError("failed writing '" + opt.out_path + "'");
    doc["gate_spec_written"] = opt.out_path;
  }
  emit(out, doc);
  if (opt.verbose) {
    err << gate->label() << ": constructed reference and " << states.basis.size()
        << " basis states\n";
  }
  return kOk;
}

int cmd_catalog(std::ostream& out) {
  json::Document doc = json::Document::object();
  doc["command"] = "catalog";
  doc["tool_version"] = ORTHOGATE_VERSION;
  json::Document gates = json::Document::array();
  const std::vector<std::pair<const char*, const char*>> params = {
      {"cnot", ""},
      {"controlled-u", "--alpha FLOAT --b RE,IM"},
      {"controlled-pauli", ""},
      {"cprime", ""},
      {"shift", "--n INT"},
      {"shifted-u", "--n INT --seed INT"},
  };
  for (const auto& name : catalog_names()) {
    std::string flags;
    for (const auto& [k, v] : params) {
      if (name == k) flags = v;
    }
    gates.push_back({{"name", name}, {"parameters", flags}});
  }
  doc["gates"] = std::move(gates);
  emit(out, doc);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Symmetry, protocol and capacity analysis for orthogonal controlled gates",
               "orthogate"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ORTHOGATE_VERSION));

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--tol", opt.tol, "Numerical tolerance (default 1e-9, env ORTHOGATE_TOL)")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--verbose", opt.verbose, "Human-readable summary on stderr");
  };

  auto* check = app.add_subcommand("check", "Decide whether a gate is symmetric");
  add_gate_options(check, opt.source);
  add_common(check);

  auto* simulate = app.add_subcommand("simulate", "Run the forward or reverse protocol");
  add_gate_options(simulate, opt.source);
  add_common(simulate);
  auto* rev = simulate->add_flag("--reverse", opt.reverse, "Bob sends to Alice");
  auto* fwd = simulate->add_flag("--forward", opt.forward, "Alice sends to Bob (default)");
  rev->excludes(fwd);
  auto* msg = simulate->add_option("-m", opt.message, "Message index, 1-based");
  auto* all = simulate->add_flag("--all", opt.all, "Run every message and check the Gram matrix");
  msg->excludes(all);
  simulate->add_option("--eta", opt.eta, "Alice's phases eta_n, comma separated")
      ->delimiter(',');

  auto* capacity = app.add_subcommand("capacity", "Maximum zero-error reverse message count");
  add_gate_options(capacity, opt.source);
  add_common(capacity);

  auto* construct =
      app.add_subcommand("construct", "Reference state, basis and eigenstates of a symmetric gate");
  add_gate_options(construct, opt.source);
  add_common(construct);
  construct->add_option("--gamma", opt.gamma, "Phases gamma_r, comma separated")->delimiter(',');
  construct->add_option("--out", opt.out_path, "Write the gate spec to this path");
  construct->add_flag("--random-symmetric", opt.random_symmetric,
                      "Generate a random symmetric gate from --n and --seed");

  app.add_subcommand("catalog", "List built-in gates");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*check) return cmd_check(opt, out, err);
    if (*simulate) return cmd_simulate(opt, out, err);
    if (*capacity) return cmd_capacity(opt, out, err);
    if (*construct) return cmd_construct(opt, out, err);
    return cmd_catalog(out);
  } catch (const ProtocolUnavailable& e) {
    err << "error: " << e.what() << '\n';
    return kAsymmetric;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumericalFailure;
  } catch (const InconsistencyError& e) {
    err << "internal inconsistency: " << e.what() << '\n';
    return kNumericalFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace orthogate::cli

// Copyright 2026 The ldigraph Authors
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


#include "ldigraph/cli.h"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "ldigraph/acyclic.h"
#include "ldigraph/bench.h"
#include "ldigraph/characterize.h"
#include "ldigraph/families.h"
#include "ldigraph/io.h"
#include "ldigraph/tournaments.h"

namespace ldigraph {

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kTooLarge:
    case ErrorCode::kRetryLimitExceeded:
      return kExitLimit;
    case ErrorCode::kInternalInvariantViolation:
    case ErrorCode::kPredicateFailed:
      return kExitInvalid;
    default:
      return kExitInput;
  }
}

namespace {

std::string TwinReason(const Digraph& g) {
  const auto twins = TwinPairs(g);
  if (twins.empty()) return "";
  const auto [u, v] = twins.front();
  return std::string("vertices ") + std::to_string(u) + " and " +
         std::to_string(v) + " are twins (" +
         PairKindName(GetPairRelation(g, u, v).kind) + ")";
}

}  // namespace

Construction ConstructAuto(const Digraph& g, Claim claim,
                           const ExactOptions& options, bool want_trace) {
  const int n = g.order();
  Construction c;
  c.trace = nullptr;
  if (IsTournament(g)) {
    c.method = "tournament";
    TournamentSplit split;
    TournamentSplit* t = want_trace ? &split : nullptr;
    if (claim == Claim::kLocating) {
      c.set = TournamentLocatingSet(g, t);
      c.bound = {"tournament floor(n/2)", n / 2};
    } else {
      c.set = TournamentLdSet(g, t);
      c.bound = {"tournament ceil(n/2)", (n + 1) / 2};
    }
    if (want_trace) c.trace = ToJson(split);
    return c;
  }

  const auto twins = TwinPairs(g);
  std::vector<std::string> reasons = {"not a tournament"};
  if (!twins.empty()) {
    reasons.push_back(TwinReason(g));
  } else if (IsAcyclic(g)) {
    c.method = "acyclic";
    AcyclicTrace trace;
    c.set = AcyclicLdSet(g, want_trace ? &trace : nullptr);
    c.bound = {"acyclic twin-free ceil(n/2)", (n + 1) / 2};
    if (want_trace) c.trace = ToJson(trace);
    return c;
  } else if (n < 3) {
    reasons.push_back("order below 3");
  } else {
    PipelineTrace trace;
    const bool source_free = Sources(g).empty();
    c.method = source_free ? "source-free" : "twin-free";
    c.set = source_free ? LdSourceFreeTwinFree(g, options, &trace)
                        : LdTwinFree(g, options, &trace);
    c.bound = trace.bound;
    if (want_trace) c.trace = ToJson(trace);
    return c;
  }

  std::string message = "no construction applies:";
  for (const std::string& r : reasons) message += " " + r + ";";
  message.pop_back();
  std::vector<long long> data;
  if (!twins.empty()) data = {twins[0].first, twins[0].second};
  throw Error(ErrorCode::kNoApplicableConstruction, message, data);
}

namespace {

struct Globals {
  uint64_t seed = 0;
  int limit_n = kDefaultExactLimit;
  bool trace = false;
  bool json = false;
  std::string dot;
};

struct InputArgs {
  std::string path;
  std::string family;
};

void AddInput(CLI::App* cmd, InputArgs& in) {
  cmd->add_option("input", in.path, "digraph file ('-' for stdin)");
  cmd->add_option("-g,--family", in.family,
                  "generate the input from a family spec instead");
}

FamilySpec SpecWithSeed(const std::string& text, const Globals& g) {
  FamilySpec spec = ParseFamilySpec(text);
  if (IsRandomFamily(spec.family) && text.find("seed=") == std::string::npos) {
    spec.seed = g.seed;
  }
  return spec;
}

Digraph LoadInput(const InputArgs& in, const Globals& g) {
  if (!in.family.empty()) {
    if (!in.path.empty()) {
      throw Error(ErrorCode::kParseError,
                  "give either an input file or --family, not both", {0});
    }
    return Generate(SpecWithSeed(in.family, g));
  }
  if (in.path.empty()) {
    throw Error(ErrorCode::kParseError, "no input file given", {0});
  }
  if (in.path == "-") {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    return ParseDigraph(buf.str());
  }
  return ReadDigraphFile(in.path);
}

void WriteFile(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << content)) {
    throw Error(ErrorCode::kParseError, "cannot write '" + path + "'", {0});
  }
}

void MaybeDot(const Globals& g, const Digraph& d, const VertexSet* set) {
  if (!g.dot.empty()) WriteFile(g.dot, ToDot(d, set));
}

std::string Dump(const Json& j) { return j.dump() + "\n"; }

const char* YesNo(bool b) { return b ? "yes" : "no"; }

std::string WitnessText(const std::optional<Witness>& w) {
  if (!w) return "none";
  if (w->kind == Witness::Kind::kUndominated) {
    return "vertex " + std::to_string(w->first) + " is not dominated";
  }
  return "vertices " + std::to_string(w->first) + " and " +
         std::to_string(w->second) + " share a trace";
}

void PrintCertificate(std::ostream& out, const Globals& g, const Digraph& d,
                      const Certificate& cert,
                      const std::optional<SizeBound>& bound, const Json& trace) {
  if (g.json) {
    out << Dump(CertificateJson(d, cert, bound, g.trace ? trace : Json()));
    return;
  }
  out << "claim: " << ClaimName(cert.claim) << '\n'
      << "set: " << cert.set.ToString() << '\n'
      << "size: " << cert.set.size() << '\n'
      << "valid: " << YesNo(cert.valid) << '\n';
  if (!cert.valid) out << "witness: " << WitnessText(cert.witness) << '\n';
  if (bound) out << "bound: " << bound->name << " = " << bound->value << '\n';
  if (g.trace && !trace.is_null()) out << "trace: " << trace.dump() << '\n';
}

Claim ClaimOrThrow(const std::string& text) {
  auto claim = ParseClaim(text);
  if (!claim) {
    throw Error(ErrorCode::kParseError,
                "unknown claim '" + text + "' (dominating, locating, ld)", {0});
  }
  return *claim;
}

int Analyze(std::ostream& out, const Globals& g, const Digraph& d) {
  Json twins = Json::array();
  for (const auto& [u, v] : TwinPairs(d)) {
    Json t;
    t["pair"] = {u, v};
    t["kind"] = PairKindName(GetPairRelation(d, u, v).kind);
    twins.push_back(std::move(t));
  }
  Json quasi = Json::array();
  for (const auto& [u, v] : QuasiTwinPairs(d)) {
    const PairRelation r = GetPairRelation(d, u, v);
    quasi.push_back({r.inner, r.outer});
  }
  Json report;
  report["graph"] = GraphJson(d);
  report["n"] = d.order();
  report["arc_count"] = d.arc_count();
  const Json profile = ToJson(GetStructuralProfile(d));
  for (auto& [key, value] : profile.items()) {
    report[key] = value;
  }
  report["twin_pairs"] = std::move(twins);
  report["quasi_twin_pairs"] = std::move(quasi);
  report["sep_n_minus_1"] = ToJson(SepIsNMinus1(d));
  if (d.order() >= 2 && IsConnected(d)) {
    report["ld_n_minus_1"] = ToJson(LdIsNMinus1(d));
  } else {
    report["ld_n_minus_1"] = nullptr;
  }
  MaybeDot(g, d, nullptr);
  if (g.json) {
    out << Dump(report);
    return kExitOk;
  }
  for (auto& [key, value] : report.items()) {
    if (key == "graph") continue;
    out << key << ": " << value.dump() << '\n';
  }
  return kExitOk;
}

struct SolveArgs {
  InputArgs input;
  bool exact = false;
  bool construct = false;
  std::string claim = "ld";
  std::string dominating;
  std::string param;
};

int Solve(std::ostream& out, const Globals& g, const SolveArgs& a) {
  const Digraph d = LoadInput(a.input, g);
  const Claim claim = ClaimOrThrow(a.claim);
  const ExactOptions options{g.limit_n};
  VertexSet set;
  std::optional<SizeBound> bound;
  Json trace = nullptr;

  if (!a.dominating.empty() || !a.param.empty()) {
    if (a.exact) {
      throw Error(ErrorCode::kParseError,
                  "--dominating does not combine with --exact", {0});
    }
    Ratio x{1, 2};
    if (!a.param.empty()) {
      const std::string prefix = "x=";
      const size_t slash = a.param.find('/');
      try {
        if (a.param.rfind(prefix, 0) != 0 || slash == std::string::npos) {
          throw std::invalid_argument("format");
        }
        x = Ratio::Make(std::stoll(a.param.substr(2, slash - 2)),
                        std::stoll(a.param.substr(slash + 1)));
      } catch (const std::logic_error&) {
        throw Error(ErrorCode::kParseError,
                    "expected --param x=<num>/<den>, got '" + a.param + "'",
                    {0});
      }
    }
    if (a.dominating.empty()) {
      throw Error(ErrorCode::kParseError, "--param needs --dominating", {0});
    }
    auto [result, t] =
        LdFromDominating(d, ParseVertexList(a.dominating, d.order()), x);
    set = std::move(result);
    bound = t.bound;
    trace = ToJson(t);
  } else if (a.exact) {
    const ExactResult r = ExactMinimum(d, claim, options);
    set = r.witness;
    trace = Json::object();
    trace["method"] = "exact";
    trace["value"] = r.value;
    trace["explored"] = r.explored;
  } else {
    Construction c = ConstructAuto(d, claim, options, g.trace);
    set = std::move(c.set);
    bound = c.bound;
    if (g.trace) {
      trace = Json::object();
      trace["method"] = c.method;
      trace["steps"] = std::move(c.trace);
    }
  }
  const Certificate cert = Certify(d, set, claim);
  MaybeDot(g, d, &set);
  PrintCertificate(out, g, d, cert, bound, trace);
  return cert.valid ? kExitOk : kExitInvalid;
}

int GenerateCmd(std::ostream& out, const Globals& g, const std::string& text,
                const std::string& path) {
  const FamilySpec spec = SpecWithSeed(text, g);
  const Digraph d = Generate(spec);
  const std::string canonical = FormatFamilySpec(spec);
  MaybeDot(g, d, nullptr);
  std::string content;
  if (g.json) {
    Json j;
    j["spec"] = canonical;
    j["graph"] = GraphJson(d);
    content = Dump(j);
  } else {
    content = SerializeDigraph(d, "family " + canonical);
  }
  if (path.empty()) {
    out << content;
  } else {
    WriteFile(path, content);
  }
  return kExitOk;
}

int Verify(std::ostream& out, const Globals& g, const InputArgs& in,
           const std::string& set_text, const std::string& claim_text) {
  const Digraph d = LoadInput(in, g);
  const Claim claim = ClaimOrThrow(claim_text);
  const VertexSet set = ParseVertexList(set_text, d.order());
  const Certificate cert = Certify(d, set, claim);
  MaybeDot(g, d, &set);
  PrintCertificate(out, g, d, cert, std::nullopt, nullptr);
  return cert.valid ? kExitOk : kExitInvalid;
}

int Bench(std::ostream& out, std::ostream& err, const Globals& g,
          BenchOptions options, const std::string& csv) {
  options.seed = g.seed;
  options.exact_limit = g.limit_n;
  const BenchReport report = RunBench(options);
  if (!csv.empty()) WriteFile(csv, BenchCsv(report));
  out << (g.json ? Dump(BenchJson(report)) : BenchText(report));
  if (report.violations > 0) {
    err << "error: " << report.violations << " bound violations\n";
    return kExitInvalid;
  }
  if (report.skipped > 0) {
    err << "note: " << report.skipped
        << " values skipped beyond --limit-n " << g.limit_n << '\n';
    return kExitLimit;
  }
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Locating-dominating sets in digraphs"};
  app.name("ldtool");
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--seed", g.seed, "seed for random families and bench");
  app.add_option("--limit-n", g.limit_n, "largest order for the exact solver")
      ->check(CLI::Range(0, kMaxExactOrder));
  app.add_flag("--trace", g.trace, "include construction traces");
  app.add_option("--dot", g.dot, "also write the digraph as Graphviz");
  app.add_flag("--json", g.json, "machine-readable output");

  InputArgs analyze_in;
  CLI::App* analyze = app.add_subcommand("analyze", "structural report");
  AddInput(analyze, analyze_in);

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "find a small set");
  AddInput(solve, solve_args.input);
  auto* exact_flag =
      solve->add_flag("--exact", solve_args.exact, "exact minimum");
  auto* construct_flag = solve->add_flag(
      "--construct", solve_args.construct, "bounded construction (default)");
  exact_flag->excludes(construct_flag);
  solve->add_option("--claim", solve_args.claim, "dominating, locating or ld");
  solve->add_option("--dominating", solve_args.dominating,
                    "grow an LD set from this dominating set, e.g. 0,3");
  solve->add_option("--param", solve_args.param,
                    "part ratio for --dominating, e.g. x=1/2");

  std::string gen_spec, gen_out;
  CLI::App* generate = app.add_subcommand("generate", "build a family member");
  generate->add_option("spec", gen_spec, "e.g. gk:k=3")->required();
  generate->add_option("--out", gen_out, "output file (default stdout)");

  InputArgs verify_in;
  std::string verify_set, verify_claim = "ld";
  CLI::App* verify = app.add_subcommand("verify", "check a vertex set");
  AddInput(verify, verify_in);
  verify->add_option("--set", verify_set, "vertices, e.g. 0,3,7")->required();
  verify->add_option("--claim", verify_claim, "dominating, locating or ld");

  BenchOptions bench_options;
  std::string bench_csv;
  CLI::App* bench = app.add_subcommand("bench", "bounds benchmark table");
  bench->add_option("--min-n", bench_options.min_n, "smallest order");
  bench->add_option("--max-n", bench_options.max_n, "largest order");
  bench->add_option("--samples", bench_options.samples,
                    "random instances per class and order");
  bench->add_option("--jobs", bench_options.jobs, "worker threads")
      ->check(CLI::Range(1, 256));
  bench->add_option("--csv", bench_csv, "also write CSV here");

  std::vector<std::string> argv_store = {"ldtool"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& s : argv_store) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInput;
  }

  try {
    if (*analyze) return Analyze(out, g, LoadInput(analyze_in, g));
    if (*solve) return Solve(out, g, solve_args);
    if (*generate) return GenerateCmd(out, g, gen_spec, gen_out);
    if (*verify) return Verify(out, g, verify_in, verify_set, verify_claim);
    if (*bench) return Bench(out, err, g, bench_options, bench_csv);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return ExitCodeFor(e.code());
  }
  return kExitInput;
}

}  // namespace ldigraph

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


#include "ldigraph/bench.h"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

#include "ldigraph/acyclic.h"
#include "ldigraph/error.h"
#include "ldigraph/exact.h"
#include "ldigraph/families.h"
#include "ldigraph/general_method.h"
#include "ldigraph/tournaments.h"

namespace ldigraph {

void Stat::Add(int v) {
  max = count == 0 ? v : std::max(max, v);
  sum += v;
  ++count;
}

uint64_t SplitMix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

const char* const kBenchCsvHeader =
    "section,row,instance,n,instances,gamma_bound,ld_bound,construct_max,"
    "construct_mean,exact_gamma_max,exact_gamma_mean,exact_ld_max,"
    "exact_ld_mean,violations,skipped";

namespace {

int64_t CeilDiv(int64_t a, int64_t b) { return (a + b - 1) / b; }

int64_t CeilLog2(int64_t n) {
  int64_t k = 0;
  while ((int64_t{1} << k) < n) ++k;
  return k;
}

using Construct = std::function<int(const Digraph&, const ExactOptions&)>;

struct RowDef {
  const char* name;
  // Random model; empty for none.
  const char* model;
  std::function<bool(const Digraph&)> accept;  // extra filter, may be null
  std::function<int64_t(int)> gamma_bound;
  std::function<int64_t(int)> ld_bound;
  Construct construct;  // may be null
  std::function<std::vector<std::string>(int)> named;
};

std::vector<std::string> TriangleBased(int n, bool with_triangles) {
  std::vector<std::string> out;
  if (n >= 5 && (n - 2) % 3 == 0) out.push_back("gk:k=" + std::to_string((n - 2) / 3));
  if (with_triangles && n % 3 == 0) {
    out.push_back("triangles:k=" + std::to_string(n / 3));
  }
  return out;
}

const std::vector<RowDef>& Rows() {
  static const std::vector<RowDef> kRows = {
      {"source-free", "rand-sf:p=1/3", nullptr,
       [](int n) { return CeilDiv(2 * n, 3); },
       [](int n) { return int64_t{n} - 1; }, nullptr,
       [](int n) {
         return std::vector<std::string>{"bstar:n=" + std::to_string(n),
                                         "cycle:n=" + std::to_string(n)};
       }},
      {"twin-free source-free", "rand-sftf:p=1/3", nullptr,
       [](int n) { return CeilDiv(2 * n, 3); },
       [](int n) { return int64_t{4} * n / 5; },
       [](const Digraph& g, const ExactOptions& o) {
         return LdSourceFreeTwinFree(g, o).size();
       },
       [](int n) { return TriangleBased(n, true); }},
      {"twin-free source-free quasi-twin-free", "rand-sftf:p=1/3",
       [](const Digraph& g) { return IsQuasiTwinFree(g); },
       [](int n) { return CeilDiv(2 * n, 3); },
       [](int n) { return int64_t{3} * n / 4; },
       [](const Digraph& g, const ExactOptions& o) {
         return LdSourceFreeTwinFree(g, o).size();
       },
       [](int n) { return TriangleBased(n, false); }},
      {"tournaments", "rand-tournament", nullptr,
       [](int n) { return CeilLog2(n); },
       [](int n) { return CeilDiv(n, 2); },
       [](const Digraph& g, const ExactOptions&) {
         return TournamentLdSet(g).size();
       },
       [](int n) {
         std::vector<std::string> out{"tt:n=" + std::to_string(n)};
         if (n % 3 == 0) out.push_back("tk:k=" + std::to_string(n / 3));
         return out;
       }},
      {"acyclic twin-free", "rand-tfdag:p=1/3", nullptr,
       [](int n) { return CeilDiv(n, 2); },
       [](int n) { return CeilDiv(n, 2); },
       [](const Digraph& g, const ExactOptions&) {
         return AcyclicLdSet(g).size();
       },
       [](int n) {
         return std::vector<std::string>{"path:n=" + std::to_string(n),
                                         "tt:n=" + std::to_string(n)};
       }},
      {"strongly connected", "rand-digraph:p=1/2",
       [](const Digraph& g) { return IsStronglyConnected(g); },
       [](int n) { return CeilDiv(n, 2); },
       [](int n) { return int64_t{n} - 1; }, nullptr,
       [](int n) {
         std::vector<std::string> out{"cycle:n=" + std::to_string(n),
                                      "bstar:n=" + std::to_string(n)};
         for (auto& s : TriangleBased(n, false)) out.push_back(s);
         return out;
       }},
  };
  return kRows;
}

constexpr int kFilterAttempts = 50;

struct Task {
  int row = 0;
  int n = 0;
  int sample = -1;  // -1 for named instances
  std::string spec;
};

struct Outcome {
  bool present = false;
  std::optional<int> construct, gamma, ld;
  int violations = 0;
  int skipped = 0;
  std::string error;  // unexpected failure, reported after the run
};

std::string ModelSpec(const RowDef& row, int n, std::optional<uint64_t> seed) {
  std::string model = row.model;
  const size_t colon = model.find(':');
  std::string name = model.substr(0, colon);
  std::string params = colon == std::string::npos ? "" : model.substr(colon + 1);
  std::string out = name + ":n=" + std::to_string(n);
  if (!params.empty()) out += "," + params;
  if (seed) out += ",seed=" + std::to_string(*seed);
  return out;
}

std::optional<Digraph> Instance(const RowDef& row, const Task& task,
                                const BenchOptions& options) {
  if (task.sample < 0) return Generate(ParseFamilySpec(task.spec));
  for (int attempt = 0; attempt < kFilterAttempts; ++attempt) {
    const uint64_t key = (static_cast<uint64_t>(task.row) << 56) ^
                         (static_cast<uint64_t>(task.n) << 40) ^
                         (static_cast<uint64_t>(task.sample) << 8) ^
                         static_cast<uint64_t>(attempt);
    const uint64_t seed = SplitMix64(options.seed ^ SplitMix64(key));
    try {
      Digraph g = Generate(ParseFamilySpec(ModelSpec(row, task.n, seed)));
      if (!row.accept || row.accept(g)) return g;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kRetryLimitExceeded) throw;
    }
  }
  return std::nullopt;
}

Outcome Run(const Task& task, const BenchOptions& options) {
  Outcome out;
  const RowDef& row = Rows()[task.row];
  try {
    std::optional<Digraph> g = Instance(row, task, options);
    if (!g) return out;
    out.present = true;
    const int n = g->order();
    const ExactOptions exact{options.exact_limit};
    if (row.construct) {
      try {
        out.construct = row.construct(*g, exact);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kTooLarge) throw;
        ++out.skipped;
      }
    }
    if (n <= std::min(options.exact_limit, kMaxExactOrder)) {
      out.gamma = ExactGamma(*g, exact).value;
      out.ld = ExactLd(*g, exact).value;
    } else {
      ++out.skipped;
    }
    const int64_t gb = row.gamma_bound(n), lb = row.ld_bound(n);
    if (out.construct && *out.construct > lb) ++out.violations;
    if (out.gamma && *out.gamma > gb) ++out.violations;
    if (out.ld && *out.ld > lb) ++out.violations;
    if (out.ld && out.construct && *out.ld > *out.construct) ++out.violations;
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

void Accumulate(BenchLine& line, const Outcome& o) {
  if (!o.present) return;
  ++line.instances;
  if (o.construct) line.construct.Add(*o.construct);
  if (o.gamma) line.exact_gamma.Add(*o.gamma);
  if (o.ld) line.exact_ld.Add(*o.ld);
  line.violations += o.violations;
  line.skipped += o.skipped;
}

std::string Cell(const Stat& s, bool mean) {
  if (s.count == 0) return "";
  if (!mean) return std::to_string(s.max);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", s.mean());
  return buf;
}

}  // namespace

BenchReport RunBench(const BenchOptions& options) {
  if (options.min_n < 1 || options.max_n < options.min_n || options.samples < 0 ||
      options.jobs < 1) {
    throw Error(ErrorCode::kBadParams, "invalid bench options");
  }
  std::vector<Task> tasks;
  for (int r = 0; r < static_cast<int>(Rows().size()); ++r) {
    for (int n = options.min_n; n <= options.max_n; ++n) {
      for (const std::string& spec : Rows()[r].named(n)) {
        tasks.push_back({r, n, -1, spec});
      }
      for (int s = 0; s < options.samples; ++s) tasks.push_back({r, n, s, ""});
    }
  }

  std::vector<Outcome> outcomes(tasks.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < tasks.size(); i = next++) {
      outcomes[i] = Run(tasks[i], options);
    }
  };
  std::vector<std::thread> threads;
  for (int j = 1; j < options.jobs; ++j) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();

  for (size_t i = 0; i < tasks.size(); ++i) {
    if (!outcomes[i].error.empty()) {
      throw Error(ErrorCode::kInternalInvariantViolation,
                  "bench instance " + (tasks[i].spec.empty()
                                           ? ModelSpec(Rows()[tasks[i].row],
                                                       tasks[i].n, std::nullopt)
                                           : tasks[i].spec) +
                      " failed: " + outcomes[i].error);
    }
  }

  BenchReport report;
  std::map<std::pair<int, int>, BenchLine> aggregates;
  std::vector<BenchLine> named;
  for (size_t i = 0; i < tasks.size(); ++i) {
    const Task& t = tasks[i];
    const RowDef& row = Rows()[t.row];
    BenchLine base;
    base.row = row.name;
    base.n = t.n;
    base.gamma_bound = row.gamma_bound(t.n);
    base.ld_bound = row.ld_bound(t.n);
    if (t.sample < 0) {
      BenchLine line = base;
      line.section = "named";
      line.instance = t.spec;
      Accumulate(line, outcomes[i]);
      named.push_back(std::move(line));
    }
    if (options.samples > 0) {
      auto [it, fresh] = aggregates.try_emplace({t.row, t.n}, base);
      if (fresh) {
        it->second.section = "aggregate";
        it->second.instance = ModelSpec(row, t.n, std::nullopt);
      }
      Accumulate(it->second, outcomes[i]);
    }
  }
  for (auto& [key, line] : aggregates) report.lines.push_back(std::move(line));
  for (auto& line : named) report.lines.push_back(std::move(line));
  // Aggregates already include the named instances.
  const char* counted = options.samples > 0 ? "aggregate" : "named";
  for (const BenchLine& line : report.lines) {
    if (line.section != counted) continue;
    report.violations += line.violations;
    report.skipped += line.skipped;
  }
  return report;
}

std::string BenchCsv(const BenchReport& report) {
  std::ostringstream out;
  out << kBenchCsvHeader << '\n';
  for (const BenchLine& l : report.lines) {
    out << l.section << ",\"" << l.row << "\",\"" << l.instance << "\"," << l.n
        << ',' << l.instances << ',' << l.gamma_bound << ',' << l.ld_bound
        << ',' << Cell(l.construct, false) << ',' << Cell(l.construct, true)
        << ',' << Cell(l.exact_gamma, false) << ','
        << Cell(l.exact_gamma, true) << ',' << Cell(l.exact_ld, false) << ','
        << Cell(l.exact_ld, true) << ',' << l.violations << ',' << l.skipped
        << '\n';
  }
  return out.str();
}

std::string BenchText(const BenchReport& report) {
  std::ostringstream out;
  char buf[256];
  std::string section;
  for (const BenchLine& l : report.lines) {
    if (l.section != section) {
      section = l.section;
      out << (section == "aggregate" ? "Sampled instances" : "Named instances")
          << '\n';
      std::snprintf(buf, sizeof buf,
                    "%-38s %-24s %4s %5s | %7s %11s | %7s %11s %11s | %s\n",
                    "class", "instance", "n", "count", "g-bound",
                    "g exact", "ld-bound", "construct", "ld exact", "viol");
      out << buf;
    }
    auto pair = [](const Stat& s) {
      if (s.count == 0) return std::string("-");
      return Cell(s, false) + "/" + Cell(s, true);
    };
    std::string inst = l.instance;
    if (inst.size() > 24) inst = inst.substr(0, 24);
    std::snprintf(buf, sizeof buf,
                  "%-38s %-24s %4d %5d | %7lld %11s | %7lld %11s %11s | %d\n",
                  l.row.c_str(), inst.c_str(), l.n, l.instances,
                  static_cast<long long>(l.gamma_bound),
                  pair(l.exact_gamma).c_str(),
                  static_cast<long long>(l.ld_bound), pair(l.construct).c_str(),
                  pair(l.exact_ld).c_str(), l.violations);
    out << buf;
  }
  out << "violations: " << report.violations << "  skipped: " << report.skipped
      << '\n';
  return out.str();
}

Json BenchJson(const BenchReport& report) {
  auto stat = [](const Stat& s) -> Json {
    if (s.count == 0) return nullptr;
    Json j;
    j["max"] = s.max;
    j["mean"] = Cell(s, true);
    return j;
  };
  Json lines = Json::array();
  for (const BenchLine& l : report.lines) {
    Json j;
    j["section"] = l.section;
    j["row"] = l.row;
    j["instance"] = l.instance;
    j["n"] = l.n;
    j["instances"] = l.instances;
    j["gamma_bound"] = l.gamma_bound;
    j["ld_bound"] = l.ld_bound;
    j["construct"] = stat(l.construct);
    j["exact_gamma"] = stat(l.exact_gamma);
    j["exact_ld"] = stat(l.exact_ld);
    j["violations"] = l.violations;
    j["skipped"] = l.skipped;
    lines.push_back(std::move(j));
  }
  Json out;
  out["lines"] = std::move(lines);
  out["violations"] = report.violations;
  out["skipped"] = report.skipped;
  return out;
}

}  // namespace ldigraph

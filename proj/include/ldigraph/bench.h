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


// Benchmark report comparing the proven upper bounds per digraph class with
// the sizes produced by the constructions and by the exact solver.

#ifndef LDIGRAPH_BENCH_H_
#define LDIGRAPH_BENCH_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ldigraph/json_io.h"

namespace ldigraph {

struct BenchOptions {
  int min_n = 3;
  int max_n = 10;
  int samples = 20;
  uint64_t seed = 0;
  int jobs = 1;
  int exact_limit = 24;
};

struct Stat {
  int count = 0;
  int max = 0;
  int64_t sum = 0;

  void Add(int v);
  double mean() const { return count ? static_cast<double>(sum) / count : 0; }
};

struct BenchLine {
  std::string section;   // "aggregate" or "named"
  std::string row;
  std::string instance;  // family spec, seed omitted for aggregates
  int n = 0;
  int instances = 0;
  int64_t gamma_bound = 0;
  int64_t ld_bound = 0;
  Stat construct, exact_gamma, exact_ld;
  int violations = 0;
  int skipped = 0;  // exact or constructive values beyond the exact limit
};

struct BenchReport {
  std::vector<BenchLine> lines;
  int violations = 0;
  int skipped = 0;
};

// Deterministic for fixed options, whatever the number of jobs.
BenchReport RunBench(const BenchOptions& options);

extern const char* const kBenchCsvHeader;
std::string BenchCsv(const BenchReport& report);
std::string BenchText(const BenchReport& report);
Json BenchJson(const BenchReport& report);

// SplitMix64 step, used to derive per-instance seeds.
uint64_t SplitMix64(uint64_t x);

}  // namespace ldigraph

#endif  // LDIGRAPH_BENCH_H_

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


// The ldtool command surface as a library, so tests can drive it in-process.

#ifndef LDIGRAPH_CLI_H_
#define LDIGRAPH_CLI_H_

#include <ostream>
#include <string>
#include <vector>

#include "ldigraph/certify.h"
#include "ldigraph/error.h"
#include "ldigraph/exact.h"
#include "ldigraph/general_method.h"
#include "ldigraph/json_io.h"

namespace ldigraph {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitLimit = 3;

int ExitCodeFor(ErrorCode code);

struct Construction {
  std::string method;  // "tournament", "acyclic", "source-free", "twin-free"
  VertexSet set;
  SizeBound bound;
  Json trace;  // null unless requested
};

// Picks the strongest construction whose preconditions hold: tournaments,
// then twin-free acyclic digraphs, then source-free twin-free digraphs, then
// twin-free digraphs. Throws NoApplicableConstruction listing the reasons.
Construction ConstructAuto(const Digraph& g, Claim claim,
                           const ExactOptions& options, bool want_trace);

// Runs one command line (without the program name). Output goes to `out`,
// diagnostics to `err`; returns the exit code.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace ldigraph

#endif  // LDIGRAPH_CLI_H_

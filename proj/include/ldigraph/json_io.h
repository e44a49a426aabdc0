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


// JSON views of graphs, certificates, construction traces and verdicts.
// Keys keep insertion order so output is stable byte for byte.

#ifndef LDIGRAPH_JSON_IO_H_
#define LDIGRAPH_JSON_IO_H_

#include <optional>

#include "json.hpp"
#include "ldigraph/acyclic.h"
#include "ldigraph/certify.h"
#include "ldigraph/characterize.h"
#include "ldigraph/digraph.h"
#include "ldigraph/general_method.h"
#include "ldigraph/tournaments.h"

namespace ldigraph {

using Json = nlohmann::ordered_json;

Json ToJson(const VertexSet& s);
Json ToJson(const std::vector<Vertex>& vs);
Json GraphJson(const Digraph& g);
Json WitnessJson(const std::optional<Witness>& w);
Json BoundJson(const std::optional<SizeBound>& b);

Json ToJson(const GeneralMethodTrace& t);
Json ToJson(const HalfPartsTrace& t);
Json ToJson(const PipelineTrace& t);
Json ToJson(const TournamentSplit& t);
Json ToJson(const LevelDecomposition& d);
Json ToJson(const AcyclicTrace& t);
Json ToJson(const ExtremalVerdict& v);
Json ToJson(const StructuralProfile& p);

// {"graph", "claim", "set", "size", "valid", "witness", "bound", "trace"}.
Json CertificateJson(const Digraph& g, const Certificate& cert,
                     const std::optional<SizeBound>& bound,
                     const Json& trace = nullptr);

}  // namespace ldigraph

#endif  // LDIGRAPH_JSON_IO_H_

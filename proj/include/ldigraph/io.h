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


// Plain-text digraph files and Graphviz export.
//
// File format: lines starting with '#' are comments, the first data line is
// "n <count>", and every further data line "a <u> <v>" declares the arc
// u -> v between 0-based vertices.

#ifndef LDIGRAPH_IO_H_
#define LDIGRAPH_IO_H_

#include <string>
#include <string_view>

#include "ldigraph/digraph.h"
#include "ldigraph/vertex_set.h"

namespace ldigraph {

// Largest order a file may declare.
inline constexpr int kMaxFileOrder = 100000;

// Throws ParseError with the 1-based line number as data.
Digraph ParseDigraph(std::string_view text);

// Header lines are written as comments, one per line of `header`.
std::string SerializeDigraph(const Digraph& g, std::string_view header = {});

// Reads and parses a file; a missing file is a ParseError at line 0.
Digraph ReadDigraphFile(const std::string& path);

// Comma-separated vertex list such as "0,3,7"; empty text is the empty set.
// Throws ParseError for malformed text and VertexOutOfRange for bad ids.
VertexSet ParseVertexList(std::string_view text, int universe);

// Graphviz digraph; members of `highlight` are filled grey.
std::string ToDot(const Digraph& g, const VertexSet* highlight = nullptr);

}  // namespace ldigraph

#endif  // LDIGRAPH_IO_H_

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


#include "ldigraph/io.h"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "ldigraph/error.h"

namespace ldigraph {
namespace {

[[noreturn]] void Fail(int line, const std::string& what) {
  throw Error(ErrorCode::kParseError,
              "line " + std::to_string(line) + ": " + what, {line});
}

std::string_view Trim(std::string_view s) {
  const size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> Fields(std::string_view s) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool ToInt(std::string_view s, long long* out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), *out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

Digraph ParseDigraph(std::string_view text) {
  int n = -1;
  std::vector<Arc> arcs;
  std::set<Arc> seen;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = Trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    const auto f = Fields(line);
    if (n < 0) {
      long long count;
      if (f.size() != 2 || f[0] != "n" || !ToInt(f[1], &count)) {
        Fail(line_no, "expected 'n <count>'");
      }
      if (count < 0 || count > kMaxFileOrder) {
        Fail(line_no, "order " + std::string(f[1]) + " out of range");
      }
      n = static_cast<int>(count);
      continue;
    }
    long long u, v;
    if (f.size() != 3 || f[0] != "a" || !ToInt(f[1], &u) || !ToInt(f[2], &v)) {
      Fail(line_no, "expected 'a <u> <v>'");
    }
    if (u < 0 || u >= n || v < 0 || v >= n) {
      Fail(line_no, "vertex out of range in arc " + std::to_string(u) +
                        " -> " + std::to_string(v));
    }
    if (u == v) Fail(line_no, "loop arc " + std::to_string(u) + " -> " +
                                  std::to_string(v));
    const Arc arc{static_cast<Vertex>(u), static_cast<Vertex>(v)};
    if (!seen.insert(arc).second) {
      Fail(line_no, "duplicate arc " + std::to_string(u) + " -> " +
                        std::to_string(v));
    }
    arcs.push_back(arc);
  }
  if (n < 0) Fail(line_no, "missing 'n <count>' line");
  return Digraph::Build(n, arcs);
}

std::string SerializeDigraph(const Digraph& g, std::string_view header) {
  std::ostringstream out;
  size_t pos = 0;
  while (pos < header.size()) {
    size_t end = header.find('\n', pos);
    if (end == std::string_view::npos) end = header.size();
    out << "# " << header.substr(pos, end - pos) << '\n';
    pos = end + 1;
  }
  out << "n " << g.order() << '\n';
  for (const Arc& a : g.arcs()) out << "a " << a.tail << ' ' << a.head << '\n';
  return out.str();
}

Digraph ReadDigraphFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kParseError, "cannot read '" + path + "'", {0});
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return ParseDigraph(buf.str());
}

VertexSet ParseVertexList(std::string_view text, int universe) {
  VertexSet s(universe);
  text = Trim(text);
  if (text.empty()) return s;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view item = Trim(text.substr(pos, end - pos));
    pos = end + 1;
    long long v;
    if (!ToInt(item, &v)) {
      throw Error(ErrorCode::kParseError,
                  "bad vertex '" + std::string(item) + "' in set", {0});
    }
    if (v < 0 || v >= universe) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "vertex " + std::to_string(v) + " not in 0.." +
                      std::to_string(universe - 1),
                  {v, universe});
    }
    s.insert(static_cast<Vertex>(v));
  }
  return s;
}

std::string ToDot(const Digraph& g, const VertexSet* highlight) {
  std::ostringstream out;
  out << "digraph G {\n  node [shape=circle];\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out << "  " << v;
    if (highlight && highlight->contains(v)) {
      out << " [style=filled, fillcolor=gray]";
    }
    out << ";\n";
  }
  for (const Arc& a : g.arcs()) {
    out << "  " << a.tail << " -> " << a.head << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace ldigraph

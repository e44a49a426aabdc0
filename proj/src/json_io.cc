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


#include "ldigraph/json_io.h"

#include <string>

namespace ldigraph {

Json ToJson(const VertexSet& s) {
  Json out = Json::array();
  for (Vertex v : s) out.push_back(v);
  return out;
}

Json ToJson(const std::vector<Vertex>& vs) {
  Json out = Json::array();
  for (Vertex v : vs) out.push_back(v);
  return out;
}

Json GraphJson(const Digraph& g) {
  Json arcs = Json::array();
  for (const Arc& a : g.arcs()) arcs.push_back({a.tail, a.head});
  Json out;
  out["n"] = g.order();
  out["arcs"] = std::move(arcs);
  return out;
}

Json WitnessJson(const std::optional<Witness>& w) {
  if (!w) return nullptr;
  Json out;
  if (w->kind == Witness::Kind::kUndominated) {
    out["undominated"] = w->first;
  } else {
    out["unlocated"] = {w->first, w->second};
  }
  return out;
}

Json BoundJson(const std::optional<SizeBound>& b) {
  if (!b) return nullptr;
  Json out;
  out["name"] = b->name;
  out["value"] = b->value;
  return out;
}

Json ToJson(const GeneralMethodTrace& t) {
  Json pairs = Json::array();
  for (const auto& [inner, outer] : t.quasi_twin_pairs) {
    pairs.push_back({inner, outer});
  }
  Json out;
  out["x"] = t.x.ToString();
  out["initial_s"] = ToJson(t.initial_s);
  out["final_s"] = ToJson(t.final_s);
  out["singleton_parts"] = t.singleton_parts;
  out["larger_parts"] = t.larger_parts;
  out["d1"] = ToJson(t.d1);
  out["d1_prime"] = ToJson(t.d1_prime);
  out["d2"] = ToJson(t.d2);
  out["quasi_twin_pairs"] = std::move(pairs);
  out["quasi_twin_free"] = t.quasi_twin_free;
  out["chosen"] = t.chosen;
  out["bound"] = BoundJson(t.bound);
  return out;
}

Json ToJson(const HalfPartsTrace& t) {
  Json out;
  out["dominating_set"] = ToJson(t.minimum);
  out["exchanged"] = t.exchanged;
  out["evaluations"] = t.evaluations;
  if (t.exchanged) {
    out["s1"] = ToJson(t.s1);
    out["s2"] = ToJson(t.s2);
    out["s3"] = ToJson(t.s3);
  }
  return out;
}

Json ToJson(const PipelineTrace& t) {
  Json out;
  if (t.source >= 0) {
    out["source"] = t.source;
    out["patch"] = ToJson(t.patch);
    out["exact_fallback"] = t.exact_fallback;
  }
  out["half_parts"] = ToJson(t.half_parts);
  out["general"] = ToJson(t.general);
  return out;
}

Json ToJson(const TournamentSplit& t) {
  Json parts = Json::array();
  for (const auto& p : t.parts) parts.push_back(ToJson(p));
  Json children = Json::array();
  for (const auto& c : t.children) children.push_back(ToJson(*c));
  Json out;
  out["kind"] = t.kind;
  out["dominating"] = t.dominating;
  out["vertices"] = ToJson(t.vertices);
  out["pivot"] = ToJson(t.pivot);
  out["parts"] = std::move(parts);
  out["result"] = ToJson(t.result);
  out["children"] = std::move(children);
  return out;
}

Json ToJson(const LevelDecomposition& d) {
  Json levels = Json::array();
  for (const VertexSet& l : d.levels) levels.push_back(ToJson(l));
  Json out;
  out["levels"] = std::move(levels);
  return out;
}

Json ToJson(const AcyclicTrace& t) {
  Json steps = Json::array();
  for (const AcyclicLevelStep& s : t.steps) {
    Json parts = Json::array();
    for (const VertexSet& p : s.parts) parts.push_back(ToJson(p));
    Json locators = Json::array();
    for (const VertexSet& p : s.part_locators) locators.push_back(ToJson(p));
    Json step;
    step["level"] = s.level;
    step["remaining"] = ToJson(s.remaining);
    step["parts"] = std::move(parts);
    step["locate_dominate"] = ToJson(s.locate_dominate);
    step["part_locators"] = std::move(locators);
    step["added"] = ToJson(s.added);
    steps.push_back(std::move(step));
  }
  Json out = ToJson(t.levels);
  out["steps"] = std::move(steps);
  return out;
}

Json ToJson(const ExtremalVerdict& v) {
  Json out;
  out["holds"] = v.holds;
  out["reason"] = std::string(ExtremalReasonName(v.reason));
  switch (v.reason) {
    case ExtremalReason::kUniversalOrSink:
      out["universal"] = ToJson(v.s1);
      out["sinks"] = ToJson(v.s2);
      break;
    case ExtremalReason::kS1CS2Partition:
      out["s1"] = ToJson(v.s1);
      out["c"] = ToJson(v.c);
      out["s2"] = ToJson(v.s2);
      break;
    case ExtremalReason::kDirectedStar:
      out["centre"] = v.centre;
      break;
    default:
      break;
  }
  if (v.counterexample >= 0) out["counterexample"] = v.counterexample;
  return out;
}

Json ToJson(const StructuralProfile& p) {
  Json out;
  out["sources"] = ToJson(p.sources);
  out["sinks"] = ToJson(p.sinks);
  out["source_free"] = p.is_source_free;
  out["twin_free"] = p.is_twin_free;
  out["quasi_twin_free"] = p.is_quasi_twin_free;
  out["acyclic"] = p.is_acyclic;
  out["tournament"] = p.is_tournament;
  out["transitive_tournament"] = p.is_transitive_tournament;
  out["strongly_connected"] = p.is_strongly_connected;
  out["connected"] = p.is_connected;
  return out;
}

Json CertificateJson(const Digraph& g, const Certificate& cert,
                     const std::optional<SizeBound>& bound, const Json& trace) {
  Json out;
  out["graph"] = GraphJson(g);
  out["claim"] = std::string(ClaimName(cert.claim));
  out["set"] = ToJson(cert.set);
  out["size"] = cert.set.size();
  out["valid"] = cert.valid;
  out["witness"] = WitnessJson(cert.witness);
  out["bound"] = BoundJson(bound);
  out["trace"] = trace;
  return out;
}

}  // namespace ldigraph

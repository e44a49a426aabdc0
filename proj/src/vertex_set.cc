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

#include "ldigraph/vertex_set.h"

#include <cassert>

#include "ldigraph/error.h"

namespace ldigraph {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kLoopArc: return "LoopArc";
    case ErrorCode::kDuplicateArc: return "DuplicateArc";
    case ErrorCode::kVertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::kSameVertex: return "SameVertex";
    case ErrorCode::kVertexNotInSet: return "VertexNotInS";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kTooSmall: return "TooSmall";
    case ErrorCode::kPropertyViolatedAtInput: return "PropertyViolatedAtInput";
    case ErrorCode::kNotTwinFree: return "NotTwinFree";
    case ErrorCode::kNotDominating: return "NotDominating";
    case ErrorCode::kHasSource: return "HasSource";
    case ErrorCode::kNotTournament: return "NotTournament";
    case ErrorCode::kNotTransitive: return "NotTransitive";
    case ErrorCode::kIsTransitive: return "IsTransitive";
    case ErrorCode::kNotAcyclic: return "NotAcyclic";
    case ErrorCode::kMultipleSources: return "MultipleSources";
    case ErrorCode::kNoVertices: return "NoVertices";
    case ErrorCode::kDuplicateMembers: return "DuplicateMembers";
    case ErrorCode::kEmptyMember: return "EmptyMember";
    case ErrorCode::kNotConnected: return "NotConnected";
    case ErrorCode::kInternalInvariantViolation:
      return "InternalInvariantViolation";
    case ErrorCode::kBadParams: return "BadParams";
    case ErrorCode::kPredicateFailed: return "PredicateFailed";
    case ErrorCode::kRetryLimitExceeded: return "RetryLimitExceeded";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kBadSpec: return "BadSpec";
    case ErrorCode::kNoApplicableConstruction:
      return "NoApplicableConstruction";
  }
  return "Unknown";
}

VertexSet::VertexSet(int universe, std::initializer_list<Vertex> members)
    : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::Full(int universe) {
  VertexSet s(universe);
  for (size_t i = 0; i < s.words_.size(); ++i) s.words_[i] = ~uint64_t{0};
  if (universe % 64 != 0) {
    s.words_.back() &= (uint64_t{1} << (universe % 64)) - 1;
  }
  return s;
}

VertexSet VertexSet::FromVector(int universe,
                                const std::vector<Vertex>& members) {
  VertexSet s(universe);
  for (Vertex v : members) s.insert(v);
  return s;
}

VertexSet VertexSet::FromMask(int universe, uint64_t mask) {
  assert(universe <= 64);
  VertexSet s(universe);
  if (universe == 0) return s;
  if (universe < 64) mask &= (uint64_t{1} << universe) - 1;
  s.words_[0] = mask;
  return s;
}

int VertexSet::size() const {
  int total = 0;
  for (uint64_t w : words_) total += std::popcount(w);
  return total;
}

bool VertexSet::empty() const {
  for (uint64_t w : words_) {
    if (w != 0) return false;
  }
  return true;
}

Vertex VertexSet::NextAfter(Vertex v) const {
  int start = v + 1;
  if (start >= universe_) return -1;
  size_t word = start >> 6;
  uint64_t bits = words_[word] & (~uint64_t{0} << (start & 63));
  while (true) {
    if (bits != 0) return static_cast<Vertex>(word * 64 + std::countr_zero(bits));
    if (++word >= words_.size()) return -1;
    bits = words_[word];
  }
}

std::vector<Vertex> VertexSet::ToVector() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for (Vertex v : *this) out.push_back(v);
  return out;
}

VertexSet VertexSet::Complement() const { return Full(universe_) - *this; }

bool VertexSet::IsSubsetOf(const VertexSet& other) const {
  for (size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

bool VertexSet::Intersects(const VertexSet& other) const {
  for (size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & other.words_[i]) return true;
  }
  return false;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  assert(universe_ == o.universe_);
  for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  assert(universe_ == o.universe_);
  for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
  assert(universe_ == o.universe_);
  for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator^=(const VertexSet& o) {
  assert(universe_ == o.universe_);
  for (size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
  return *this;
}

std::strong_ordering VertexSet::operator<=>(const VertexSet& o) const {
  Vertex a = front();
  Vertex b = o.front();
  while (a != -1 && b != -1) {
    if (a != b) return a <=> b;
    a = NextAfter(a);
    b = o.NextAfter(b);
  }
  if (a == -1 && b == -1) return universe_ <=> o.universe_;
  // The shorter member list is a prefix of the longer one.
  return a == -1 ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string VertexSet::ToString() const {
  std::string out = "{";
  bool first = true;
  for (Vertex v : *this) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

}  // namespace ldigraph

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

#ifndef LDIGRAPH_ERROR_H_
#define LDIGRAPH_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ldigraph {

enum class ErrorCode {
  // Digraph construction and queries.
  kLoopArc,
  kDuplicateArc,
  kVertexOutOfRange,
  kSameVertex,
  kVertexNotInSet,
  // Solvers and constructions.
  kTooLarge,
  kTooSmall,
  kPropertyViolatedAtInput,
  kNotTwinFree,
  kNotDominating,
  kHasSource,
  kNotTournament,
  kNotTransitive,
  kIsTransitive,
  kNotAcyclic,
  kMultipleSources,
  kNoVertices,
  kDuplicateMembers,
  kEmptyMember,
  kNotConnected,
  kInternalInvariantViolation,
  // Generators.
  kBadParams,
  kPredicateFailed,
  kRetryLimitExceeded,
  // Command line surface.
  kParseError,
  kBadSpec,
  kNoApplicableConstruction,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure in the library is reported through this exception. `data`
// carries the offending datum (vertex, pair, sizes, line number) so callers
// and tests can inspect it without parsing the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::vector<long long> data = {})
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code),
        data_(std::move(data)) {}

  ErrorCode code() const { return code_; }
  const std::vector<long long>& data() const { return data_; }

 private:
  ErrorCode code_;
  std::vector<long long> data_;
};

}  // namespace ldigraph

#endif  // LDIGRAPH_ERROR_H_

// Copyright 2026 The Gomory Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gomory {

enum class ErrorCode {
  kInvalidInput,
  kRankDeficient,
  kConeNotPointed,
  kSingularBasis,
  kNonGenericCost,
  kOutsideCone,
  kInfeasible,
  kUnboundedRelaxation,
  kInfeasibleU,
  kNotPointed,
  kNotDeltaNormal,
  kNotPure,
  kNotAFacet,
  kSeedNotFound,
  kOverflow,
};

std::string_view error_code_name(ErrorCode code);

// Every failure raised by the library carries a machine-readable code so the
// CLI can map it to an exit status and a structured diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, std::string field = {})
      : std::runtime_error(what), code_(code), field_(std::move(field)) {}

  ErrorCode code() const { return code_; }
  // Name of the offending input field, when known.
  const std::string& field() const { return field_; }

 private:
  ErrorCode code_;
  std::string field_;
};

}  // namespace gomory

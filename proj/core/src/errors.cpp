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

#include "gomory/errors.hpp"

namespace gomory {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInput: return "InvalidInput";
    case ErrorCode::kRankDeficient: return "RankDeficient";
    case ErrorCode::kConeNotPointed: return "ConeNotPointed";
    case ErrorCode::kSingularBasis: return "SingularBasis";
    case ErrorCode::kNonGenericCost: return "NonGenericCost";
    case ErrorCode::kOutsideCone: return "OutsideCone";
    case ErrorCode::kInfeasible: return "Infeasible";
    case ErrorCode::kUnboundedRelaxation: return "UnboundedRelaxation";
    case ErrorCode::kInfeasibleU: return "InfeasibleU";
    case ErrorCode::kNotPointed: return "NotPointed";
    case ErrorCode::kNotDeltaNormal: return "NotDeltaNormal";
    case ErrorCode::kNotPure: return "NotPure";
    case ErrorCode::kNotAFacet: return "NotAFacet";
    case ErrorCode::kSeedNotFound: return "SeedNotFound";
    case ErrorCode::kOverflow: return "Overflow";
  }
  return "Unknown";
}

}  // namespace gomory

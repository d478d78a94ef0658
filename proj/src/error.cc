// Copyright 2026 The biasgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "biasgraph/error.h"

namespace biasgraph {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInput:
      return "InvalidInput";
    case ErrorCode::kCycleDetected:
      return "CycleDetected";
    case ErrorCode::kNoSourceSinkPath:
      return "NoSourceSinkPath";
    case ErrorCode::kNegativeCost:
      return "NegativeCost";
    case ErrorCode::kInvalidPath:
      return "InvalidPath";
    case ErrorCode::kUnknownInstance:
      return "UnknownInstance";
    case ErrorCode::kInvalidParameters:
      return "InvalidParameters";
    case ErrorCode::kBiasNotAboveC:
      return "BiasNotAboveC";
    case ErrorCode::kNoDominantPath:
      return "NoDominantPath";
    case ErrorCode::kZeroOptimalCost:
      return "ZeroOptimalCost";
    case ErrorCode::kTooLarge:
      return "TooLarge";
  }
  return "Unknown";
}

}  // namespace biasgraph

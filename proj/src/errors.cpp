// Copyright 2026 The Holonomy Simulator Authors
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

#include "holo/errors.hpp"

namespace holo {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kComplexRootsDetected: return "ComplexRootsDetected";
    case ErrorKind::kNotHermitian: return "NotHermitian";
    case ErrorKind::kDegenerateMiddleRoot: return "DegenerateMiddleRoot";
    case ErrorKind::kNonCyclic: return "NonCyclic";
    case ErrorKind::kTimeOutOfRange: return "TimeOutOfRange";
    case ErrorKind::kDegenerateDrive: return "DegenerateDrive";
    case ErrorKind::kNormDriftExceeded: return "NormDriftExceeded";
    case ErrorKind::kNonHermitianInput: return "NonHermitianInput";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace holo

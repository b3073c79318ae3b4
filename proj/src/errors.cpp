/*
   Copyright 2026 The veronese-cas Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "veronese/errors.hpp"

namespace veronese {

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotInAlgebra: return "NotInAlgebra";
    case ErrorKind::NotADerivation: return "NotADerivation";
    case ErrorKind::NotLocallyNilpotent: return "NotLocallyNilpotent";
    case ErrorKind::NotAnAutomorphism: return "NotAnAutomorphism";
    case ErrorKind::NotGraded: return "NotGraded";
    case ErrorKind::NeedsRootExtension: return "NeedsRootExtension";
    case ErrorKind::DivisionNotExact: return "DivisionNotExact";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

std::string Error::describe() const {
  std::string out(name());
  if (*what() != '\0') {
    out += ": ";
    out += what();
  }
  return out;
}

NeedsRootExtension::NeedsRootExtension(Rational value, long n, std::string label)
    : Error(ErrorKind::NeedsRootExtension,
            label + "=" + value.to_string() + ", n=" + std::to_string(n)),
      value_(std::move(value)),
      n_(n) {}

}  // namespace veronese

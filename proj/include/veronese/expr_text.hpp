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

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "veronese/errors.hpp"
#include "veronese/poly.hpp"

namespace veronese {

struct ParseDiagnostic {
  std::size_t offset = 0;
  std::string message;
  std::vector<std::string> expected;
};

class ParseError : public Error {
 public:
  explicit ParseError(ParseDiagnostic diagnostic);
  const ParseDiagnostic& diagnostic() const noexcept { return diagnostic_; }

 private:
  ParseDiagnostic diagnostic_;
};

// Text grammar (whitespace allowed between tokens):
//
//   poly  := ['-'] term {('+'|'-') term}
//   term  := coeff ['*' monos] | monos
//   monos := var ['^' nat] {'*' var ['^' nat]}
//   coeff := nat ['/' nat]
//
// Identifiers outside the ring raise UnknownVariable; anything else that
// does not match raises ParseError with the byte offset of the culprit.
Poly parse_poly(std::string_view src, const Ring& ring);

/// Canonical text: terms by ascending total degree, descending lex order
/// within a degree. parse_poly inverts it.
std::string print_poly(const Poly& p);

}  // namespace veronese

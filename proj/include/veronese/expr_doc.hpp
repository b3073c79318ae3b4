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

#include <string>
#include <variant>

#include "json.hpp"

#include "veronese/amalgam.hpp"
#include "veronese/automorphisms.hpp"
#include "veronese/derivations.hpp"
#include "veronese/errors.hpp"

namespace veronese {

/// A structured document is missing a field or has one of the wrong shape.
class SchemaError : public Error {
 public:
  SchemaError(std::string field, const std::string& message)
      : Error(ErrorKind::SchemaError, "field '" + field + "': " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

using MapValue = std::variant<Derivation2, DerivationV, Automorphism2, AutomorphismV>;

/// {"n": N, "kind": K, ...} where K is one of
///   "derivation2", "automorphism2"   with string fields "fx", "fy";
///   "derivationV", "automorphismV"   with "images", n+1 strings, and an
///                                    optional "coords": "xy" (default) or
///                                    "X" for polynomials in X0..Xn.
struct MapDocument {
  int n = 2;
  MapValue value;
};

std::string kind_name(const MapValue& value);

MapDocument read_map(const nlohmann::json& doc);
nlohmann::json write_map(const MapDocument& doc);

/// {"n": N, "kind": "amalgamWord", "head": {"alpha", "gamma", "beta"},
///  "factors": [{"t": poly in y} | {"gl": mu}, ...]}, rationals as strings.
struct WordDocument {
  int n = 2;
  AmalgamWord word;
};

WordDocument read_word(const nlohmann::json& doc);
nlohmann::json write_word(const WordDocument& doc);

/// Parses text as JSON, mapping syntax errors to ParseError.
nlohmann::json parse_json(const std::string& text);

}  // namespace veronese

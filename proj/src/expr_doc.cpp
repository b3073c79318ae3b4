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

#include "veronese/expr_doc.hpp"

#include "veronese/expr_text.hpp"

namespace veronese {

namespace {

using nlohmann::json;

const json& field(const json& doc, const std::string& name) {
  if (!doc.is_object()) throw SchemaError(name, "enclosing value is not an object");
  auto it = doc.find(name);
  if (it == doc.end()) throw SchemaError(name, "missing");
  return *it;
}

std::string string_field(const json& doc, const std::string& name) {
  const json& v = field(doc, name);
  if (!v.is_string()) throw SchemaError(name, "expected a string");
  return v.get<std::string>();
}

Poly poly_field(const json& doc, const std::string& name, const Ring& ring) {
  return parse_poly(string_field(doc, name), ring);
}

Rational rational_field(const json& doc, const std::string& name) {
  const json& v = field(doc, name);
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (!v.is_string()) throw SchemaError(name, "expected a rational as a string");
  try {
    return Rational::parse(v.get<std::string>());
  } catch (const std::invalid_argument&) {
    throw SchemaError(name, "'" + v.get<std::string>() + "' is not a rational");
  }
}

int read_n(const json& doc) {
  const json& v = field(doc, "n");
  if (!v.is_number_integer() || v.get<long>() < 2 || v.get<long>() > 64)
    throw SchemaError("n", "expected an integer between 2 and 64");
  return v.get<int>();
}

std::vector<Poly> read_images(const json& doc, const VeroneseContext& ctx) {
  std::string coords = "xy";
  if (doc.contains("coords")) coords = string_field(doc, "coords");
  if (coords != "xy" && coords != "X") throw SchemaError("coords", "expected \"xy\" or \"X\"");
  const json& images = field(doc, "images");
  if (!images.is_array()) throw SchemaError("images", "expected an array");
  if (images.size() != static_cast<std::size_t>(ctx.n() + 1))
    throw SchemaError("images", "expected " + std::to_string(ctx.n() + 1) + " entries, got " +
                                    std::to_string(images.size()));
  std::vector<Poly> out;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!images[i].is_string()) throw SchemaError("images[" + std::to_string(i) + "]", "expected a string");
    const std::string text = images[i].get<std::string>();
    out.push_back(coords == "xy" ? parse_poly(text, Ring::xy())
                                 : phi(parse_poly(text, ctx.generator_ring()), ctx));
  }
  return out;
}

json images_json(const std::vector<Poly>& images) {
  json arr = json::array();
  for (const auto& p : images) arr.push_back(print_poly(p));
  return arr;
}

}  // namespace

std::string kind_name(const MapValue& value) {
  switch (value.index()) {
    case 0: return "derivation2";
    case 1: return "derivationV";
    case 2: return "automorphism2";
    default: return "automorphismV";
  }
}

MapDocument read_map(const json& doc) {
  const int n = read_n(doc);
  const std::string kind = string_field(doc, "kind");
  const Ring xy = Ring::xy();
  if (kind == "derivation2")
    return {n, Derivation2{poly_field(doc, "fx", xy), poly_field(doc, "fy", xy)}};
  if (kind == "automorphism2")
    return {n, Automorphism2{poly_field(doc, "fx", xy), poly_field(doc, "fy", xy)}};
  const VeroneseContext ctx(n);
  if (kind == "derivationV") return {n, DerivationV{ctx, read_images(doc, ctx)}};
  if (kind == "automorphismV") return {n, AutomorphismV{ctx, read_images(doc, ctx)}};
  throw SchemaError("kind", "unknown kind '" + kind + "'");
}

json write_map(const MapDocument& doc) {
  json out{{"n", doc.n}, {"kind", kind_name(doc.value)}};
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Derivation2> || std::is_same_v<T, Automorphism2>) {
          out["fx"] = print_poly(v.fx);
          out["fy"] = print_poly(v.fy);
        } else {
          out["coords"] = "xy";
          out["images"] = images_json(v.images);
        }
      },
      doc.value);
  return out;
}

WordDocument read_word(const json& doc) {
  WordDocument out;
  out.n = read_n(doc);
  if (string_field(doc, "kind") != "amalgamWord") throw SchemaError("kind", "expected \"amalgamWord\"");
  const json& head = field(doc, "head");
  out.word.head = {rational_field(head, "alpha"), rational_field(head, "gamma"), rational_field(head, "beta")};
  const json& factors = field(doc, "factors");
  if (!factors.is_array()) throw SchemaError("factors", "expected an array");
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const json& f = factors[i];
    const std::string where = "factors[" + std::to_string(i) + "]";
    if (f.is_object() && f.contains("t") && f.size() == 1) {
      out.word.factors.emplace_back(TRep{poly_field(f, "t", Ring::xy())});
    } else if (f.is_object() && f.contains("gl") && f.size() == 1) {
      out.word.factors.emplace_back(GLRep{rational_field(f, "gl")});
    } else {
      throw SchemaError(where, "expected {\"t\": poly} or {\"gl\": mu}");
    }
  }
  if (!is_valid_word(out.word, out.n)) throw SchemaError("factors", "word violates the alternation or representative rules");
  return out;
}

json write_word(const WordDocument& doc) {
  json factors = json::array();
  for (const auto& f : doc.word.factors) {
    if (const auto* t = std::get_if<TRep>(&f)) factors.push_back({{"t", print_poly(t->f)}});
    else factors.push_back({{"gl", std::get<GLRep>(f).mu.to_string()}});
  }
  const BElement& h = doc.word.head;
  return json{{"n", doc.n},
              {"kind", "amalgamWord"},
              {"head", {{"alpha", h.alpha.to_string()}, {"gamma", h.gamma.to_string()}, {"beta", h.beta.to_string()}}},
              {"factors", factors}};
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    ParseDiagnostic d;
    d.offset = e.byte > 0 ? e.byte - 1 : 0;
    d.message = "malformed JSON document";
    throw ParseError(d);
  }
}

}  // namespace veronese

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

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "veronese/automorphisms.hpp"

namespace veronese {

/// (alpha*x + gamma*y, beta*y) with alpha*beta != 0: the intersection of
/// GL_2 and the graded triangular group.
struct BElement {
  Rational alpha = 1;
  Rational gamma = 0;
  Rational beta = 1;

  Automorphism2 to_automorphism() const;
  friend bool operator==(const BElement&, const BElement&) = default;
};

/// (x + f(y), y) with f nonzero, every exponent 1 mod n and no linear term.
struct TRep {
  Poly f;
  friend bool operator==(const TRep&, const TRep&) = default;
};

/// (y, x + mu*y).
struct GLRep {
  Rational mu;
  friend bool operator==(const GLRep&, const GLRep&) = default;
};

using AmalgamFactor = std::variant<TRep, GLRep>;

/// r1 o r2 o ... o rk o head, factor types alternating.
///
/// The head sits rightmost in composition order, that is leftmost as an
/// operator product. Only with this placement are the Bruhat maps
/// (y, x + mu*y) a transversal of GL_2 modulo B.
struct AmalgamWord {
  BElement head;
  std::vector<AmalgamFactor> factors;

  friend bool operator==(const AmalgamWord&, const AmalgamWord&) = default;
};

Automorphism2 to_automorphism(const AmalgamFactor& f);

/// Composes the factors in order, then the head.
Automorphism2 assemble(const AmalgamWord& w);

/// Canonical word of an n-graded automorphism. Throws NotGraded,
/// NotAnAutomorphism.
AmalgamWord normal_form(const Automorphism2& a, int n);

/// Canonical word of s1 o s2 o ... o sk where every syllable is linear or
/// of the form (alpha*x + f(y), beta*y) with f in K[y]_1. Throws NotGraded
/// on any other syllable.
AmalgamWord normal_form_of_product(std::span<const Automorphism2> syllables, int n);

/// normal_form with the head taken modulo the scalars of order dividing n:
/// for even n the head has beta > 0.
AmalgamWord normal_form_mod_E(const Automorphism2& a, int n);

/// Checks alternation, the representative invariants and a nonsingular head.
bool is_valid_word(const AmalgamWord& w, int n);

/// Smallest k <= bound with a^k a scalar of order dividing n.
std::optional<long> order_mod_E(const Automorphism2& a, int n, long bound);

}  // namespace veronese

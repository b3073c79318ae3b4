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

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "veronese/poly.hpp"
#include "veronese/veronese_ring.hpp"

namespace veronese {

/// Endomorphism of K[x,y] given by the images of x and y. It acts on a
/// polynomial by substitution: a(u) = u(fx, fy).
struct Automorphism2 {
  Poly fx;
  Poly fy;

  static Automorphism2 identity();
  static Automorphism2 scalar(const Rational& c);

  Poly apply(const Poly& u) const;

  friend bool operator==(const Automorphism2&, const Automorphism2&) = default;
};

/// (a*x + b*y, c*x + d*y), invertible.
struct Linear {
  Rational a, b, c, d;

  static Linear swap() { return {0, 1, 1, 0}; }
  Rational determinant() const { return a * d - b * c; }
  friend bool operator==(const Linear&, const Linear&) = default;
};

/// (x - alpha*y^m, y), m >= 1.
struct ShearX {
  Rational alpha;
  Exponent m;
  friend bool operator==(const ShearX&, const ShearX&) = default;
};

/// (x, y - alpha*x^m), m >= 1.
struct ShearY {
  Rational alpha;
  Exponent m;
  friend bool operator==(const ShearY&, const ShearY&) = default;
};

/// (x + tx, y + ty). Only produced for affine pairs with constant terms,
/// which never occur among n-graded maps.
struct Translation {
  Rational tx, ty;
  friend bool operator==(const Translation&, const Translation&) = default;
};

using ElementaryFactor = std::variant<Linear, ShearX, ShearY, Translation>;

Automorphism2 to_automorphism(const ElementaryFactor& f);
ElementaryFactor inverse(const ElementaryFactor& f);
/// f1 o f2 o ... o fk; the identity for an empty list.
Automorphism2 compose_factors(std::span<const ElementaryFactor> factors);
std::string describe(const ElementaryFactor& f);

/// a o b = (b.fx(a.fx, a.fy), b.fy(a.fx, a.fy)).
Automorphism2 compose(const Automorphism2& a, const Automorphism2& b);

/// Tame factorization a = f1 o ... o fk. Throws NotAnAutomorphism.
std::vector<ElementaryFactor> decompose(const Automorphism2& a);

/// Two-sided inverse via decompose. Throws NotAnAutomorphism.
Automorphism2 invert(const Automorphism2& a);

bool is_n_graded_aut(const Automorphism2& a, int n);

/// Endomorphism of V_n given by the images of the generators X_i = x^{n-i}y^i,
/// each image a polynomial in x, y.
struct AutomorphismV {
  VeroneseContext ctx;
  std::vector<Poly> images;

  friend bool operator==(const AutomorphismV&, const AutomorphismV&) = default;
};

/// Generator images a(x)^{n-i} a(y)^i. Throws NotGraded, NotAnAutomorphism.
AutomorphismV induce_on_V(const Automorphism2& a, const VeroneseContext& ctx);

/// An n-graded automorphism of K[x,y] inducing av, built through the
/// triangulation of the conjugated derivation y d/dx. For even n the
/// representative modulo {+-id} has a positive coefficient of y in fy, or a
/// positive lex-leading coefficient in fx when that coefficient is zero.
///
/// Throws NotInAlgebra, NotADerivation (relations violated),
/// NotLocallyNilpotent, NotAnAutomorphism, NeedsRootExtension.
Automorphism2 lift_automorphism(const AutomorphismV& av);

/// Result of lift_automorphism with its factorization beta o gamma o delta.
struct AutomorphismLift {
  Automorphism2 result;
  std::vector<ElementaryFactor> beta;
  Automorphism2 gamma;
  Automorphism2 delta;
};
AutomorphismLift lift_automorphism_detailed(const AutomorphismV& av);

/// True iff invert(b) o a = (e*x, e*y) with e rational and e^n = 1.
bool equal_mod_E(const Automorphism2& a, const Automorphism2& b, int n);

}  // namespace veronese

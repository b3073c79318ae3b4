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

#include <vector>

#include "veronese/automorphisms.hpp"
#include "veronese/poly.hpp"
#include "veronese/veronese_ring.hpp"

namespace veronese {

/// fx * d/dx + fy * d/dy on K[x,y].
struct Derivation2 {
  Poly fx;
  Poly fy;

  static Derivation2 zero();

  friend Derivation2 operator-(const Derivation2& d) { return {-d.fx, -d.fy}; }
  friend bool operator==(const Derivation2&, const Derivation2&) = default;
};

/// Derivation of V_n by its values on x^n, x^{n-1}y, ..., y^n.
struct DerivationV {
  VeroneseContext ctx;
  std::vector<Poly> images;

  friend bool operator==(const DerivationV&, const DerivationV&) = default;
};

Poly apply(const Derivation2& d, const Poly& p);

/// Both images lie in the degree-1 component of the n-grading.
bool is_n_graded_derivation(const Derivation2& d, int n);

/// Images of the generators x^{n-i} y^i. Throws NotGraded.
DerivationV restrict_to_V(const Derivation2& d, const VeroneseContext& ctx);

/// The unique n-graded derivation of K[x,y] restricting to dv.
///
/// fx and fy are read off the first and last generator by exact division,
/// then all n+1 generator equations are verified. Throws NotInAlgebra,
/// NotADerivation, NotGraded.
Derivation2 lift_derivation(const DerivationV& dv);

inline constexpr long kDefaultNilpotencyCap = 256;

/// (sum D^p(x)/p!, sum D^p(y)/p!). Throws NotLocallyNilpotent when an
/// iterate is still nonzero after `cap` applications.
Automorphism2 exp_lnd(const Derivation2& d, long cap = kDefaultNilpotencyCap);

/// a^{-1} D a, evaluated on x and y.
Derivation2 conjugate(const Derivation2& d, const Automorphism2& a);
/// Same, with a precomputed inverse.
Derivation2 conjugate(const Derivation2& d, const Automorphism2& a, const Automorphism2& a_inverse);

}  // namespace veronese

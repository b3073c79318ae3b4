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

#include <set>
#include <string>
#include <vector>

#include "veronese/automorphisms.hpp"
#include "veronese/derivations.hpp"

namespace veronese {

/// Exponent vector of a monomial derivation minus the unit vector of the
/// variable it differentiates: c x^a y^b d/dx has strength (a-1, b).
struct Strength {
  long s;
  long t;

  friend bool operator==(const Strength&, const Strength&) = default;
  friend auto operator<=>(const Strength&, const Strength&) = default;
};

std::set<Strength> support(const Derivation2& d);

/// Sum of the terms of d whose strength has w-degree p.
Derivation2 w_homogeneous_part(const Derivation2& d, Weight w, long p);

enum class CaseTag { FyDx, FxDy, Triangle, NotLND };

std::string to_string(CaseTag tag);

struct Classification {
  CaseTag tag;
  long s0 = 0;
  long t0 = 0;
};

/// Which of the three shapes an LND can take d has, if any.
///
/// Triangle(s0, t0) requires (s0,-1) and (-1,t0) in the support and every
/// strength (s,t) on or below the line through them:
///   (t0+1)(s+1) + (s0+1)(t+1) <= (s0+1)(t0+1).
/// Relies on the known trichotomy for locally nilpotent derivations of
/// K[x,y]; anything outside it is reported NotLND. Throws NotGraded.
Classification classify(const Derivation2& d, int n);

/// One reduction step on a Triangle-classified derivation.
struct TriangleStep {
  /// Empty or a single swap, followed by the shear (x, y - e*x^{r+1}).
  std::vector<ElementaryFactor> factors;
  Derivation2 conjugated = Derivation2::zero();
  Rational c;
  Rational d;
  Exponent r = 0;
};

/// Factors the top w-homogeneous part as g * (c d/dx + d x^r d/dy) and
/// conjugates by the shear that straightens it. Throws NotLocallyNilpotent
/// when the top part has any other shape.
TriangleStep triangle_step(const Derivation2& d, int n, const Classification& cls);

struct TriangulationResult {
  /// alpha = f1 o ... o fk, tame and n-graded.
  std::vector<ElementaryFactor> conjugator;
  /// f(y) with conjugate(D, alpha) = f(y) d/dx.
  Poly normal_fy;

  Automorphism2 conjugator_map() const { return compose_factors(conjugator); }
};

/// Conjugates an n-graded locally nilpotent derivation to f(y) d/dx.
/// Throws NotGraded or NotLocallyNilpotent.
TriangulationResult triangulate(const Derivation2& d, int n);

}  // namespace veronese

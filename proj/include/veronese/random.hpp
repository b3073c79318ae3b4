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

#include <cstdint>
#include <vector>

#include "veronese/amalgam.hpp"
#include "veronese/automorphisms.hpp"
#include "veronese/derivations.hpp"

namespace veronese {

/// Counter-based generator: output k is SplitMix64 of (key, k). Splitting
/// derives an independent key, so streams never depend on call order in
/// other streams.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed);

  std::uint64_t next();
  /// Uniform in [lo, hi].
  long uniform(long lo, long hi);
  bool coin() { return (next() & 1U) != 0; }
  CounterRng split(std::uint64_t stream) const;

 private:
  CounterRng(std::uint64_t key, int) : key_(key) {}

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

struct RandomOptions {
  /// Coefficients are drawn from {-bound..bound} \ {0}.
  long coefficient_bound = 9;
  int max_factors = 6;
  /// Shear exponents are 1 + n*s with 1 <= s <= max_shear_steps.
  int max_shear_steps = 3;
  /// Cap on the product of shear exponents in one word.
  long max_total_degree = 30;
};

Rational random_coefficient(CounterRng& rng, long bound);

Linear random_linear(CounterRng& rng, long bound);

/// Alternating linear maps and graded shears; every prefix stays within
/// the degree budget.
std::vector<ElementaryFactor> random_graded_word(CounterRng& rng, int n, const RandomOptions& opts = {});

/// f(y) in K[y]_1 with 1 <= deg f <= max_degree, nonzero.
Poly random_graded_y_poly(CounterRng& rng, int n, long max_degree, long bound = 9);

/// Bivariate polynomial supported in the given graded component.
Poly random_graded_poly(CounterRng& rng, int n, int residue, long max_degree, int max_terms, long bound = 9);

/// Polynomial over `ring` with total degree <= max_degree; may be zero.
Poly random_poly(CounterRng& rng, const Ring& ring, long max_degree, int max_terms, long bound = 9);

/// n-graded derivation with images of degree <= max_degree.
Derivation2 random_graded_derivation(CounterRng& rng, int n, long max_degree, int max_terms, long bound = 9);

/// Valid amalgam word with up to max_factors representatives.
AmalgamWord random_amalgam_word(CounterRng& rng, int n, int max_factors, long max_degree, long bound = 9);

}  // namespace veronese

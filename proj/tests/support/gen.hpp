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

// Hand-rolled generators for the property tests, seeded per case.

#include <cstdint>
#include <random>
#include <vector>

#include "veronese/amalgam.hpp"
#include "veronese/automorphisms.hpp"
#include "veronese/derivations.hpp"
#include "veronese/poly.hpp"

namespace gen {

using namespace veronese;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}

  long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }
  bool coin() { return range(0, 1) == 1; }
  Rational coeff(long bound = 9) {
    const long v = range(1, bound);
    return coin() ? Rational(v) : Rational(-v);
  }
  Rational any(long bound = 9) { return Rational(range(-bound, bound)); }

 private:
  std::mt19937_64 engine_;
};

inline Poly xy_poly(Gen& g, long max_degree, int max_terms, long bound = 9) {
  Poly p(Ring::xy());
  const long terms = g.range(0, max_terms);
  for (long i = 0; i < terms; ++i) {
    const long d = g.range(0, max_degree);
    const long a = g.range(0, d);
    p += Poly::xy_monomial(static_cast<Exponent>(a), static_cast<Exponent>(d - a), g.coeff(bound));
  }
  return p;
}

/// Nonzero polynomial in the graded component `residue` mod n.
inline Poly graded_poly(Gen& g, int n, int residue, long max_degree, int max_terms, long bound = 9) {
  for (;;) {
    Poly p(Ring::xy());
    const long terms = g.range(1, max_terms);
    for (long i = 0; i < terms; ++i) {
      const long k = g.range(0, (max_degree - residue) / n);
      const long d = residue + n * k;
      const long a = g.range(0, d);
      p += Poly::xy_monomial(static_cast<Exponent>(a), static_cast<Exponent>(d - a), g.coeff(bound));
    }
    if (!p.is_zero()) return p;
  }
}

/// Nonzero f(y) with every exponent 1 mod n and degree <= max_degree.
inline Poly y_graded(Gen& g, int n, long max_degree, long bound = 9) {
  for (;;) {
    Poly f(Ring::xy());
    for (long e = 1; e <= max_degree; e += n)
      if (g.coin()) f += Poly::xy_monomial(0, static_cast<Exponent>(e), g.coeff(bound));
    if (!f.is_zero()) return f;
  }
}

inline Linear linear(Gen& g, long bound = 5) {
  for (;;) {
    Linear l{g.any(bound), g.any(bound), g.any(bound), g.any(bound)};
    if (!l.determinant().is_zero()) return l;
  }
}

/// Tame n-graded word: linear maps alternating with shears of exponent
/// 1 + n*s, the product of exponents capped by degree_budget.
inline std::vector<ElementaryFactor> graded_word(Gen& g, int n, int max_factors, long degree_budget,
                                                 long bound = 5) {
  std::vector<ElementaryFactor> out;
  const long count = g.range(1, max_factors);
  long degree = 1;
  bool shear = g.coin();
  for (long i = 0; i < count; ++i, shear = !shear) {
    if (!shear) {
      out.emplace_back(linear(g, bound));
      continue;
    }
    const long max_s = (degree_budget / degree - 1) / n;
    if (max_s < 1) {
      out.emplace_back(linear(g, bound));
      continue;
    }
    const auto m = static_cast<Exponent>(1 + n * g.range(1, std::min<long>(max_s, 3)));
    degree *= m;
    if (g.coin()) out.emplace_back(ShearX{g.coeff(bound), m});
    else out.emplace_back(ShearY{g.coeff(bound), m});
  }
  return out;
}

/// Polynomial in X0..Xn of total degree <= max_degree.
inline Poly x_poly(Gen& g, const Ring& ring, long max_degree, int max_terms, long bound = 9) {
  Poly p(ring);
  const long terms = g.range(0, max_terms);
  for (long i = 0; i < terms; ++i) {
    Monomial m(ring.arity(), 0);
    const long d = g.range(0, max_degree);
    for (long k = 0; k < d; ++k) ++m[static_cast<std::size_t>(g.range(0, static_cast<long>(ring.arity()) - 1))];
    p += Poly::term(ring, std::move(m), g.coeff(bound));
  }
  return p;
}

/// Alternating word with up to max_factors representatives; TRep degrees
/// stay within 1 + steps*n.
inline AmalgamWord amalgam_word(Gen& g, int n, int max_factors, int steps = 2, long bound = 5) {
  AmalgamWord w;
  w.head = {g.coeff(bound), g.any(bound), g.coeff(bound)};
  const long count = g.range(0, max_factors);
  bool t = g.coin();
  for (long i = 0; i < count; ++i, t = !t) {
    if (!t) {
      w.factors.emplace_back(GLRep{Rational(g.range(-bound, bound), g.range(1, 3))});
      continue;
    }
    Poly f(Ring::xy());
    while (f.is_zero())
      for (long s = 1; s <= steps; ++s)
        if (g.coin()) f += Poly::xy_monomial(0, static_cast<Exponent>(1 + n * s), g.coeff(bound));
    w.factors.emplace_back(TRep{f});
  }
  return w;
}

}  // namespace gen

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

#include "veronese/random.hpp"

#include <algorithm>

#include "veronese/errors.hpp"

namespace veronese {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t splitmix(std::uint64_t z) {
  z += kGolden;
  z = (z ^ (z >> 30U)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27U)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31U);
}

}  // namespace

CounterRng::CounterRng(std::uint64_t seed) : key_(splitmix(seed)) {}

std::uint64_t CounterRng::next() { return splitmix(key_ ^ splitmix(counter_++ * kGolden)); }

long CounterRng::uniform(long lo, long hi) {
  if (hi < lo) throw Error(ErrorKind::InvalidArgument, "empty range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t v = next();
  while (v >= limit) v = next();
  return lo + static_cast<long>(v % span);
}

CounterRng CounterRng::split(std::uint64_t stream) const {
  return CounterRng(splitmix(key_ ^ splitmix(~stream)), 0);
}

Rational random_coefficient(CounterRng& rng, long bound) {
  const long v = rng.uniform(1, bound);
  return rng.coin() ? Rational(v) : Rational(-v);
}

Linear random_linear(CounterRng& rng, long bound) {
  for (;;) {
    Linear l{random_coefficient(rng, bound), rng.uniform(-bound, bound), rng.uniform(-bound, bound),
             random_coefficient(rng, bound)};
    if (!l.determinant().is_zero()) return l;
  }
}

std::vector<ElementaryFactor> random_graded_word(CounterRng& rng, int n, const RandomOptions& opts) {
  const int count = static_cast<int>(rng.uniform(1, opts.max_factors));
  bool shear_next = rng.coin();
  long degree = 1;
  std::vector<ElementaryFactor> out;
  for (int i = 0; i < count; ++i, shear_next = !shear_next) {
    if (!shear_next) {
      out.emplace_back(random_linear(rng, opts.coefficient_bound));
      continue;
    }
    long steps = opts.max_shear_steps;
    while (steps > 0 && degree * (1 + n * steps) > opts.max_total_degree) --steps;
    if (steps == 0) continue;
    const auto m = static_cast<Exponent>(1 + n * rng.uniform(1, steps));
    degree *= m;
    const Rational alpha = random_coefficient(rng, opts.coefficient_bound);
    if (rng.coin()) out.emplace_back(ShearX{alpha, m});
    else out.emplace_back(ShearY{alpha, m});
  }
  if (out.empty()) out.emplace_back(random_linear(rng, opts.coefficient_bound));
  return out;
}

Poly random_graded_y_poly(CounterRng& rng, int n, long max_degree, long bound) {
  if (max_degree < 1) throw Error(ErrorKind::InvalidArgument, "degree budget below 1");
  for (;;) {
    Poly f(Ring::xy());
    for (long e = 1; e <= max_degree; e += n)
      if (rng.coin()) f += Poly::xy_monomial(0, static_cast<Exponent>(e), random_coefficient(rng, bound));
    if (!f.is_zero()) return f;
  }
}

Poly random_graded_poly(CounterRng& rng, int n, int residue, long max_degree, int max_terms, long bound) {
  Poly p(Ring::xy());
  const int terms = static_cast<int>(rng.uniform(1, max_terms));
  for (int i = 0; i < terms; ++i) {
    long d = rng.uniform(0, max_degree);
    d -= ((d - residue) % n + n) % n;
    if (d < 0) d += n;
    if (d > max_degree) continue;
    const long a = rng.uniform(0, d);
    p += Poly::xy_monomial(static_cast<Exponent>(a), static_cast<Exponent>(d - a), random_coefficient(rng, bound));
  }
  return p;
}

Poly random_poly(CounterRng& rng, const Ring& ring, long max_degree, int max_terms, long bound) {
  Poly p(ring);
  const int terms = static_cast<int>(rng.uniform(0, max_terms));
  for (int i = 0; i < terms; ++i) {
    Monomial m(ring.arity(), 0);
    long budget = rng.uniform(0, max_degree);
    for (std::size_t k = 0; k < m.size() && budget > 0; ++k) {
      const std::size_t v = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(m.size()) - 1));
      const long e = rng.uniform(0, budget);
      m[v] += static_cast<Exponent>(e);
      budget -= e;
    }
    p += Poly::term(ring, std::move(m), random_coefficient(rng, bound));
  }
  return p;
}

Derivation2 random_graded_derivation(CounterRng& rng, int n, long max_degree, int max_terms, long bound) {
  return {random_graded_poly(rng, n, 1, max_degree, max_terms, bound),
          random_graded_poly(rng, n, 1, max_degree, max_terms, bound)};
}

AmalgamWord random_amalgam_word(CounterRng& rng, int n, int max_factors, long max_degree, long bound) {
  AmalgamWord w;
  w.head = {random_coefficient(rng, bound), rng.uniform(-bound, bound), random_coefficient(rng, bound)};
  const int count = static_cast<int>(rng.uniform(0, max_factors));
  bool t_next = rng.coin();
  for (int i = 0; i < count; ++i, t_next = !t_next) {
    if (t_next) {
      Poly f = random_graded_y_poly(rng, n, std::max<long>(max_degree, 1 + n), bound);
      f -= Poly::xy_monomial(0, 1, f.coefficient(Monomial{0, 1}));
      if (f.is_zero()) f = Poly::xy_monomial(0, static_cast<Exponent>(1 + n), random_coefficient(rng, bound));
      w.factors.emplace_back(TRep{std::move(f)});
    } else {
      w.factors.emplace_back(GLRep{rng.uniform(-bound, bound)});
    }
  }
  return w;
}

}  // namespace veronese

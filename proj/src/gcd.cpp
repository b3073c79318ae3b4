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

// Bivariate gcd by primitive polynomial remainder sequences. Polynomials
// are viewed as elements of Q[y][x]; contents are gcds in the Euclidean
// ring Q[y].

#include <map>

#include "veronese/errors.hpp"
#include "veronese/poly.hpp"

namespace veronese {

namespace {

// Coefficients of p as a polynomial in x, keyed by x-degree. Each
// coefficient stays in p's ring and involves y only.
std::map<Exponent, Poly> coefficients_in_x(const Poly& p) {
  std::map<Exponent, std::vector<std::pair<Monomial, Rational>>> buckets;
  for (const auto& [m, c] : p.terms()) buckets[m[kX]].emplace_back(Monomial{0, m[kY]}, c);
  std::map<Exponent, Poly> out;
  for (auto& [d, terms] : buckets) out.emplace(d, Poly::from_terms(p.ring(), std::move(terms)));
  return out;
}

Poly leading_coefficient_in_x(const Poly& p) {
  auto coeffs = coefficients_in_x(p);
  return coeffs.rbegin()->second;
}

// Remainder of a by b in Q[y]; both involve y only.
Poly remainder_in_y(Poly a, const Poly& b) {
  const long db = b.degree_in(kY);
  const Rational& lb = b.leading_coefficient();
  while (!a.is_zero() && a.degree_in(kY) >= db) {
    const auto shift = static_cast<Exponent>(a.degree_in(kY) - db);
    a -= b * Poly::term(a.ring(), Monomial{0, shift}, a.leading_coefficient() / lb);
  }
  return a;
}

Poly gcd_in_y(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = remainder_in_y(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly content_in_x(const Poly& p) {
  Poly g(p.ring());
  for (const auto& [d, c] : coefficients_in_x(p)) {
    g = gcd_in_y(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

Poly primitive_part(const Poly& p) { return exact_div(p, content_in_x(p)); }

// lc(b)^k * a = q * b + r with deg_x r < deg_x b.
Poly pseudo_remainder(Poly a, const Poly& b) {
  const long db = b.degree_in(kX);
  const Poly lb = leading_coefficient_in_x(b);
  while (!a.is_zero() && a.degree_in(kX) >= db) {
    const auto shift = static_cast<Exponent>(a.degree_in(kX) - db);
    Poly la = leading_coefficient_in_x(a);
    a = lb * a - la * Poly::term(a.ring(), Monomial{shift, 0}, 1) * b;
  }
  return a;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (!(a.ring() == b.ring())) throw Error(ErrorKind::RingMismatch, "operands live in different rings");
  if (a.ring().arity() != 2) throw Error(ErrorKind::ArityMismatch, "gcd needs a bivariate ring");
  if (a.is_zero() && b.is_zero()) throw Error(ErrorKind::InvalidArgument, "gcd(0, 0) is undefined");
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();

  Poly content = gcd_in_y(content_in_x(a), content_in_x(b));
  Poly u = primitive_part(a);
  Poly v = primitive_part(b);
  if (u.degree_in(kX) < v.degree_in(kX)) std::swap(u, v);
  while (!v.is_zero() && v.degree_in(kX) > 0) {
    Poly r = pseudo_remainder(u, v);
    u = std::move(v);
    v = r.is_zero() ? std::move(r) : primitive_part(r);
  }
  // A nonzero remainder of x-degree 0 is a unit in Q(y)[x]: the primitive
  // parts are coprime.
  Poly primitive = v.is_zero() ? u : Poly::constant(a.ring(), 1);
  return (content * primitive).monic();
}

}  // namespace veronese

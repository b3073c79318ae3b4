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

#include <algorithm>
#include <set>

#include "doctest.h"
#include "gen.hpp"
#include "oracles.hpp"
#include "veronese/errors.hpp"
#include "veronese/expr_text.hpp"
#include "veronese/veronese_ring.hpp"

using namespace veronese;

namespace {

Poly P(const char* s) { return parse_poly(s, Ring::xy()); }
Poly X(const char* s, const VeroneseContext& ctx) { return parse_poly(s, ctx.generator_ring()); }

}  // namespace

TEST_CASE("membership") {
  CHECK(member(P("x^3*y"), VeroneseContext(2)));
  CHECK_FALSE(member(P("x^2*y"), VeroneseContext(2)));
  CHECK(member(P("x^2*y^4"), VeroneseContext(3)));
  CHECK(member(P("0"), VeroneseContext(4)));
  CHECK(member(P("5"), VeroneseContext(4)));
  CHECK_THROWS_AS(VeroneseContext(1), Error);
}

TEST_CASE("phi") {
  const VeroneseContext c2(2), c3(3);
  CHECK(phi(X("X1", c3), c3) == P("x^2*y"));
  CHECK(phi(X("X0*X2 - X1^2", c2), c2).is_zero());
  CHECK(phi(X("X0 + X1^2", c2), c2) == P("x^2 + x^2*y^2"));
  gen::Gen g(31);
  for (int n = 2; n <= 5; ++n) {
    const VeroneseContext ctx(n);
    for (int i = 0; i < 20; ++i) CHECK(member(phi(gen::x_poly(g, ctx.generator_ring(), 4, 5), ctx), ctx));
  }
}

TEST_CASE("express") {
  const VeroneseContext c2(2), c3(3);
  CHECK(express(P("x^4*y^2"), c2) == X("X0*X1^2", c2));
  CHECK(phi(X("X0*X1^2", c2), c2) == P("x^4*y^2"));
  CHECK(express(P("y^2"), c2) == X("X2", c2));
  CHECK(express(P("x^2*y^4"), c3) == X("X2^2", c3));
  CHECK(groebner_reduce(X("X1*X3", c3), c3) == X("X2^2", c3));
  CHECK(express(P("7"), c3) == X("7", c3));
  try {
    express(P("x^2*y"), c2);
    FAIL("expected NotInAlgebra");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotInAlgebra);
  }
}

TEST_CASE("phi after express is the identity on members") {
  gen::Gen g(32);
  for (int n = 2; n <= 5; ++n) {
    const VeroneseContext ctx(n);
    for (int i = 0; i < 40; ++i) {
      const Poly p = gen::graded_poly(g, n, 0, 5 * n, 6);
      const Poly e = express(p, ctx);
      CHECK(phi(e, ctx) == p);
      for (const auto& [m, c] : e.terms()) CHECK(is_basis_monomial(m));
    }
  }
}

TEST_CASE("groebner reduction examples") {
  const VeroneseContext c2(2), c3(3);
  CHECK(groebner_reduce(X("X0*X2", c3), c3) == X("X1^2", c3));
  CHECK(groebner_reduce(X("X0*X2*X3", c3), c3) == X("X1*X2^2", c3));
  CHECK(phi(X("X0*X2*X3", c3), c3) == P("x^4*y^5"));
  CHECK(phi(X("X1*X2^2", c3), c3) == P("x^4*y^5"));
  CHECK(groebner_reduce(X("X1^2", c2), c2) == X("X1^2", c2));
  CHECK(groebner_reduce(X("X0*X2 - X1^2", c2), c2).is_zero());
}

TEST_CASE("groebner reduction properties") {
  gen::Gen g(33);
  for (int n = 2; n <= 5; ++n) {
    const VeroneseContext ctx(n);
    for (int i = 0; i < 40; ++i) {
      const Poly p = gen::x_poly(g, ctx.generator_ring(), 4, 5);
      const Poly r = groebner_reduce(p, ctx);
      for (const auto& [m, c] : r.terms()) CHECK(is_basis_monomial(m));
      CHECK(phi(r, ctx) == phi(p, ctx));
      CHECK(groebner_reduce(r, ctx) == r);
      CHECK(groebner_reduce(p, ctx, RewriteStrategy::SmallestInnermost) == r);
      CHECK(express(phi(p, ctx), ctx) == r);
    }
  }
}

TEST_CASE("S-polynomials of overlapping relations") {
  for (int n = 3; n <= 6; ++n) {
    const VeroneseContext ctx(n);
    auto F = [&](int i, int j) { return relation(ctx, i, j).poly; };
    auto Xi = [&](int i) { return ctx.generator(i); };
    for (int i = 1; i <= n - 1; ++i)
      for (int j = i; j <= n - 1; ++j)
        for (int l = j + 1; l <= n - 1; ++l) {
          // Shared X_{i-1}: the overlap collapses to a single relation.
          const Poly s = s_polynomial(F(i, j), F(i, l));
          CHECK(s == -(F(j + 1, l) * Xi(i)));
          CHECK(groebner_reduce(s, ctx).is_zero());
        }
    for (int i = 1; i <= n - 1; ++i)
      for (int j = i; j + 2 <= n - 1; ++j)
        for (int l = j + 2; l <= n - 1; ++l) {
          const Poly s = s_polynomial(F(i, j), F(j + 2, l));
          CHECK(s == F(i, j + 1) * Xi(l) - Xi(i) * F(j + 1, l));
          CHECK(groebner_reduce(s, ctx).is_zero());
        }
    for (int i = 1; i <= n - 1; ++i)
      for (int k = i + 1; k <= n - 1; ++k)
        for (int j = k; j <= n - 1; ++j) {
          const Poly s = s_polynomial(F(i, j), F(k, j));
          CHECK(s == Xi(j) * F(i, k - 1));
          CHECK(groebner_reduce(s, ctx).is_zero());
        }
    for (const auto& a : relations(ctx))
      for (const auto& b : relations(ctx))
        if (!(a.i == b.i && a.j == b.j)) CHECK(groebner_reduce(s_polynomial(a.poly, b.poly), ctx).is_zero());
  }
}

TEST_CASE("relations") {
  const VeroneseContext ctx(3);
  CHECK(relations(ctx).size() == 3);
  CHECK(relation(ctx, 1, 2).poly == X("X0*X3 - X1*X2", ctx));
  CHECK_THROWS_AS(relation(ctx, 2, 1), Error);
  CHECK_THROWS_AS(relation(ctx, 1, 3), Error);
}

TEST_CASE("basis enumeration") {
  const VeroneseContext c2(2), c3(3);
  const auto b1 = enum_basis(c2, 1);
  REQUIRE(b1.size() == 3);
  std::vector<Poly> polys;
  for (const auto& b : b1) polys.push_back(b.to_poly(c2));
  CHECK(std::count(polys.begin(), polys.end(), X("X0", c2)) == 1);
  CHECK(std::count(polys.begin(), polys.end(), X("X1", c2)) == 1);
  CHECK(std::count(polys.begin(), polys.end(), X("X2", c2)) == 1);
  CHECK(enum_basis(c2, 2).size() == 5);
  CHECK(enum_basis(c3, 2).size() == 7);
  CHECK(enum_basis(c3, 0).size() == 1);

  for (int n = 2; n <= 5; ++n) {
    const VeroneseContext ctx(n);
    for (int m = 1; m <= 10; ++m) {
      const auto basis = enum_basis(ctx, m);
      CHECK(static_cast<long>(basis.size()) == n * m + 1);
      CHECK(static_cast<long>(basis.size()) == oracle::bivariate_monomials_of_degree(n * m));
      std::set<std::pair<long, long>> images;
      for (const auto& b : basis) {
        const Poly img = phi(b.to_poly(ctx), ctx);
        REQUIRE(img.size() == 1);
        const auto& mono = img.leading_term().first;
        images.insert({mono[kX], mono[kY]});
      }
      CHECK(images.size() == basis.size());
    }
  }
}

TEST_CASE("basis monomials are canonical") {
  const VeroneseContext ctx(3);
  gen::Gen g(34);
  for (int t = 0; t < 200; ++t) {
    const auto a = static_cast<Exponent>(g.range(0, 9));
    const auto b = static_cast<Exponent>(3 * g.range(0, 4) + (3 - a % 3) % 3);
    const BasisMonomial bm = express_monomial(a, b, ctx);
    CHECK(phi(bm.to_poly(ctx), ctx) == Poly::xy_monomial(a, b));
    CHECK(as_basis_monomial(bm.exponents(ctx), ctx) == bm);
  }
  CHECK(express_monomial(0, 3, ctx) == BasisMonomial{2, 0, 1});
  CHECK(express_monomial(3, 0, ctx) == BasisMonomial{0, 1, 0});
  CHECK(express_monomial(0, 0, ctx) == BasisMonomial{});
}

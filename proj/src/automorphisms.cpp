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

#include "veronese/automorphisms.hpp"

#include <deque>

#include "veronese/derivations.hpp"
#include "veronese/errors.hpp"
#include "veronese/expr_text.hpp"
#include "veronese/triangulation.hpp"

namespace veronese {

namespace {

Poly x_poly() { return Poly::variable(Ring::xy(), kX); }
Poly y_poly() { return Poly::variable(Ring::xy(), kY); }

std::string show(const Automorphism2& a) { return "(" + print_poly(a.fx) + ", " + print_poly(a.fy) + ")"; }

[[noreturn]] void not_an_automorphism(const Automorphism2& a, const std::string& why) {
  throw Error(ErrorKind::NotAnAutomorphism, show(a) + ": " + why);
}

void require_xy(const Automorphism2& a) {
  if (!(a.fx.ring() == Ring::xy()) || !(a.fy.ring() == Ring::xy()))
    throw Error(ErrorKind::RingMismatch, "automorphism images must be polynomials in x, y");
}

Automorphism2 invert_factors(const std::vector<ElementaryFactor>& factors) {
  std::vector<ElementaryFactor> inv;
  inv.reserve(factors.size());
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) inv.push_back(inverse(*it));
  return compose_factors(inv);
}

// Sign of the y-coefficient of fy, or of the lex-leading coefficient of fx
// when that coefficient vanishes.
int canonical_sign(const Automorphism2& a) {
  const Rational c = a.fy.coefficient(Monomial{0, 1});
  return c.is_zero() ? a.fx.leading_coefficient().sign() : c.sign();
}

}  // namespace

Automorphism2 Automorphism2::identity() { return {x_poly(), y_poly()}; }

Automorphism2 Automorphism2::scalar(const Rational& c) { return {x_poly() * c, y_poly() * c}; }

Poly Automorphism2::apply(const Poly& u) const {
  const Poly images[] = {fx, fy};
  return subst(u, images);
}

Automorphism2 to_automorphism(const ElementaryFactor& f) {
  const Poly x = x_poly();
  const Poly y = y_poly();
  return std::visit(
      [&](const auto& g) -> Automorphism2 {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, Linear>) {
          return {x * g.a + y * g.b, x * g.c + y * g.d};
        } else if constexpr (std::is_same_v<T, ShearX>) {
          return {x - Poly::xy_monomial(0, g.m, g.alpha), y};
        } else if constexpr (std::is_same_v<T, ShearY>) {
          return {x, y - Poly::xy_monomial(g.m, 0, g.alpha)};
        } else {
          return {x + Poly::constant(Ring::xy(), g.tx), y + Poly::constant(Ring::xy(), g.ty)};
        }
      },
      f);
}

ElementaryFactor inverse(const ElementaryFactor& f) {
  return std::visit(
      [](const auto& g) -> ElementaryFactor {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, Linear>) {
          const Rational det = g.determinant();
          if (det.is_zero()) throw Error(ErrorKind::NotAnAutomorphism, "singular linear factor");
          const Rational inv = det.inverse();
          return Linear{g.d * inv, -g.b * inv, -g.c * inv, g.a * inv};
        } else if constexpr (std::is_same_v<T, ShearX>) {
          return ShearX{-g.alpha, g.m};
        } else if constexpr (std::is_same_v<T, ShearY>) {
          return ShearY{-g.alpha, g.m};
        } else {
          return Translation{-g.tx, -g.ty};
        }
      },
      f);
}

Automorphism2 compose_factors(std::span<const ElementaryFactor> factors) {
  Automorphism2 acc = Automorphism2::identity();
  for (const auto& f : factors) acc = compose(acc, to_automorphism(f));
  return acc;
}

std::string describe(const ElementaryFactor& f) {
  return std::visit(
      [](const auto& g) -> std::string {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, Linear>) {
          return "Linear(" + g.a.to_string() + ", " + g.b.to_string() + ", " + g.c.to_string() + ", " +
                 g.d.to_string() + ")";
        } else if constexpr (std::is_same_v<T, ShearX>) {
          return "ShearX(" + g.alpha.to_string() + ", " + std::to_string(g.m) + ")";
        } else if constexpr (std::is_same_v<T, ShearY>) {
          return "ShearY(" + g.alpha.to_string() + ", " + std::to_string(g.m) + ")";
        } else {
          return "Translation(" + g.tx.to_string() + ", " + g.ty.to_string() + ")";
        }
      },
      f);
}

Automorphism2 compose(const Automorphism2& a, const Automorphism2& b) {
  require_xy(a);
  require_xy(b);
  return {a.apply(b.fx), a.apply(b.fy)};
}

std::vector<ElementaryFactor> decompose(const Automorphism2& a) {
  require_xy(a);
  std::deque<ElementaryFactor> right;
  Automorphism2 cur = a;
  for (;;) {
    if (cur.fx.is_constant() || cur.fy.is_constant()) not_an_automorphism(a, "an image is constant");
    long k = cur.fx.total_degree();
    long l = cur.fy.total_degree();
    if (k <= 1 && l <= 1) {
      const Monomial mx{1, 0};
      const Monomial my{0, 1};
      const Linear lin{cur.fx.coefficient(mx), cur.fx.coefficient(my), cur.fy.coefficient(mx),
                       cur.fy.coefficient(my)};
      if (lin.determinant().is_zero()) not_an_automorphism(a, "linear part is singular");
      const Translation tr{cur.fx.constant_term(), cur.fy.constant_term()};
      if (!(tr.tx.is_zero() && tr.ty.is_zero())) right.push_front(tr);
      if (!(lin == Linear{1, 0, 0, 1})) right.push_front(lin);
      return {right.begin(), right.end()};
    }
    if (k < l) {
      std::swap(cur.fx, cur.fy);
      std::swap(k, l);
      right.push_front(Linear::swap());
    }
    if (k % l != 0)
      not_an_automorphism(a, "leading degrees " + std::to_string(k) + " and " + std::to_string(l) +
                                 " do not divide each other");
    const auto m = static_cast<unsigned>(k / l);
    const Poly lf = cur.fx.leading_form();
    const Poly lg_power = pow(cur.fy.leading_form(), m);
    const Rational alpha = lf.leading_coefficient() / lg_power.leading_coefficient();
    if (!(lf == lg_power * alpha)) not_an_automorphism(a, "leading forms are not proportional");
    Poly next = cur.fx - pow(cur.fy, m) * alpha;
    if (next.total_degree() >= k) not_an_automorphism(a, "degree does not drop");
    cur.fx = std::move(next);
    right.push_front(ShearX{-alpha, static_cast<Exponent>(m)});
  }
}

Automorphism2 invert(const Automorphism2& a) { return invert_factors(decompose(a)); }

bool is_n_graded_aut(const Automorphism2& a, int n) {
  return in_graded_component(a.fx, n, 1) && in_graded_component(a.fy, n, 1);
}

AutomorphismV induce_on_V(const Automorphism2& a, const VeroneseContext& ctx) {
  require_xy(a);
  const int n = ctx.n();
  if (!is_n_graded_aut(a, n))
    throw Error(ErrorKind::NotGraded, show(a) + " is not " + std::to_string(n) + "-graded");
  decompose(a);
  std::vector<Poly> x_powers{Poly::constant(Ring::xy(), 1)};
  for (int i = 1; i <= n; ++i) x_powers.push_back(x_powers.back() * a.fx);
  AutomorphismV out{ctx, {}};
  Poly y_power = Poly::constant(Ring::xy(), 1);
  for (int i = 0; i <= n; ++i) {
    out.images.push_back(x_powers[static_cast<std::size_t>(n - i)] * y_power);
    y_power *= a.fy;
  }
  return out;
}

AutomorphismLift lift_automorphism_detailed(const AutomorphismV& av) {
  const VeroneseContext& ctx = av.ctx;
  const int n = ctx.n();
  const auto un = static_cast<std::size_t>(n);
  const auto& A = av.images;
  if (A.size() != un + 1)
    throw Error(ErrorKind::ArityMismatch, "expected " + std::to_string(n + 1) + " generator images");
  for (std::size_t i = 0; i <= un; ++i)
    if (!member(A[i], ctx))
      throw Error(ErrorKind::NotInAlgebra,
                  "image " + std::to_string(i) + " = " + print_poly(A[i]) + " is not in V_" + std::to_string(n));
  for (std::size_t i = 1; i < un; ++i)
    for (std::size_t j = i; j < un; ++j)
      if (!(A[i - 1] * A[j + 1] == A[i] * A[j]))
        throw Error(ErrorKind::NotADerivation,
                    "images violate relation F_{" + std::to_string(i) + "," + std::to_string(j) + "}");

  auto fail = [&](const std::string& why) -> void {
    throw Error(ErrorKind::NotAnAutomorphism, "generator images: " + why);
  };

  // Transported derivation T with T(A_i) = (n-i) A_{i+1}; Cramer on i = 0, n.
  const Poly a0x = diff(A[0], kX), a0y = diff(A[0], kY);
  const Poly anx = diff(A[un], kX), any = diff(A[un], kY);
  const Poly det = a0x * any - a0y * anx;
  if (det.is_zero()) fail("Jacobian of the extreme images vanishes");
  const Poly rhs = A[1] * Rational(n);
  auto tx = try_exact_div(rhs * any, det);
  auto ty = try_exact_div(-(rhs * anx), det);
  if (!tx || !ty) fail("transported derivation is not polynomial");
  const Derivation2 t{*std::move(tx), *std::move(ty)};
  for (std::size_t i = 0; i <= un; ++i) {
    Poly expected = i < un ? A[i + 1] * Rational(static_cast<long>(un - i)) : Poly(Ring::xy());
    if (!(apply(t, A[i]) == expected)) fail("transported derivation fails on generator " + std::to_string(i));
  }
  if (!is_n_graded_derivation(t, n)) fail("transported derivation is not graded");
  if (!(lift_derivation(restrict_to_V(t, ctx)) == t)) fail("transported derivation does not round-trip");

  const TriangulationResult tri = triangulate(t, n);
  const Automorphism2 beta = tri.conjugator_map();

  // beta^{-1} = fk^{-1} ... f1^{-1} as operators; applying f1^{-1} first
  // keeps the intermediate degrees falling.
  std::vector<Poly> f(A.begin(), A.end());
  for (const auto& factor : tri.conjugator) {
    const Automorphism2 step = to_automorphism(inverse(factor));
    for (auto& fi : f) fi = step.apply(fi);
  }
  for (std::size_t i = 0; i < un; ++i)
    if (!(f[i + 1] * Rational(static_cast<long>(un - i)) == tri.normal_fy * diff(f[i], kX)))
      fail("conjugated images do not satisfy the straightened equations");

  if (f[1].is_zero()) fail("image of x^{n-1}y is zero");
  const Poly g = gcd(f[0], f[1]);
  Poly p = exact_div(f[0], g);
  Poly q = exact_div(f[1], g);
  const Rational lead = p.leading_coefficient().inverse();
  p *= lead;
  q *= lead;
  auto u_poly = try_exact_div(f[0], pow(p, static_cast<unsigned>(n)));
  if (!u_poly || !u_poly->is_constant() || u_poly->is_zero()) fail("first image is not a pure n-th power");
  const Rational u = u_poly->constant_term();
  Rational v;
  try {
    v = nth_root_rational(u, n);
  } catch (const NeedsRootExtension&) {
    throw NeedsRootExtension(u, n, "u");
  }
  p *= v;
  q *= v;

  for (std::size_t i = 0; i <= un; ++i)
    if (!(pow(p, static_cast<unsigned>(un - i)) * pow(q, static_cast<unsigned>(i)) == f[i]))
      fail("images are not the powers p^{n-i} q^i");
  if (p.degree_in(kX) != 1 || q.size() != 1 || q.total_degree() != 1 || !q.only_in(kY))
    fail("residual map is not (a*x + b(y), e*y)");
  const Rational a = p.coefficient(Monomial{1, 0});
  Poly b = p - Poly::xy_monomial(1, 0, a);
  if (a.is_zero() || !b.only_in(kY)) fail("residual map is not (a*x + b(y), e*y)");
  Rational e = q.leading_coefficient();

  Automorphism2 result = compose(beta, Automorphism2{p, q});
  Rational sign = 1;
  if (n % 2 == 0 && canonical_sign(result) < 0) {
    sign = -1;
    result = {-result.fx, -result.fy};
  }
  AutomorphismLift out{result, tri.conjugator, {x_poly() * (a * sign) + b * sign, y_poly()},
                       {x_poly(), y_poly() * (e * sign)}};

  if (!is_n_graded_aut(result, n)) fail("lift is not graded");
  if (!(induce_on_V(result, ctx) == av)) fail("lift does not reproduce the generator images");
  return out;
}

Automorphism2 lift_automorphism(const AutomorphismV& av) { return lift_automorphism_detailed(av).result; }

bool equal_mod_E(const Automorphism2& a, const Automorphism2& b, int n) {
  // compose(invert(b), a) = (e x, e y) iff a = (e b.fx, e b.fy).
  decompose(a);
  decompose(b);
  if (a == b) return true;
  return n % 2 == 0 && a.fx == -b.fx && a.fy == -b.fy;
}

}  // namespace veronese

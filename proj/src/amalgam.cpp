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

#include "veronese/amalgam.hpp"

#include "veronese/errors.hpp"
#include "veronese/expr_text.hpp"

namespace veronese {

namespace {

enum class Kind { B, GL, T };

const Monomial kMx{1, 0};
const Monomial kMy{0, 1};

Poly x_poly() { return Poly::variable(Ring::xy(), kX); }
Poly y_poly() { return Poly::variable(Ring::xy(), kY); }

bool is_linear(const Automorphism2& a) {
  for (const Poly* p : {&a.fx, &a.fy})
    for (const auto& [m, c] : p->terms())
      if (total_degree(m) != 1) return false;
  return true;
}

// fy = beta*y and fx = alpha*x + f(y) with f in K[y]_1.
bool is_triangular(const Automorphism2& a, int n) {
  if (a.fy.size() != 1 || !(a.fy.leading_term().first == kMy)) return false;
  Poly rest = a.fx - Poly::xy_monomial(1, 0, a.fx.coefficient(kMx));
  return !a.fx.coefficient(kMx).is_zero() && rest.only_in(kY) && in_graded_component(rest, n, 1);
}

Kind classify_syllable(const Automorphism2& a, int n) {
  const bool linear = is_linear(a);
  const bool triangular = is_triangular(a, n);
  if (linear && triangular) return Kind::B;
  if (linear) return Kind::GL;
  if (triangular) return Kind::T;
  throw Error(ErrorKind::NotGraded, "(" + print_poly(a.fx) + ", " + print_poly(a.fy) +
                                        ") is neither linear nor graded triangular");
}

BElement as_b(const Automorphism2& a) {
  return {a.fx.coefficient(kMx), a.fx.coefficient(kMy), a.fy.coefficient(kMy)};
}

struct Split {
  AmalgamFactor rep;
  BElement b;
};

// h = rep o b.
Split split(const Automorphism2& h, Kind kind) {
  if (kind == Kind::GL) {
    const Rational a = h.fx.coefficient(kMx), bb = h.fx.coefficient(kMy);
    const Rational c = h.fy.coefficient(kMx), d = h.fy.coefficient(kMy);
    if (c.is_zero() || (a * d - bb * c).is_zero())
      throw Error(ErrorKind::NotAnAutomorphism, "singular linear syllable");
    const Rational mu = d / c;
    return {GLRep{mu}, BElement{bb - a * mu, a, c}};
  }
  const Rational alpha = h.fx.coefficient(kMx);
  const Rational gamma = h.fx.coefficient(kMy);
  const Poly tail = h.fx - Poly::xy_monomial(1, 0, alpha) - Poly::xy_monomial(0, 1, gamma);
  return {TRep{tail * alpha.inverse()}, BElement{alpha, gamma, h.fy.coefficient(kMy)}};
}

Kind kind_of(const AmalgamFactor& f) { return std::holds_alternative<TRep>(f) ? Kind::T : Kind::GL; }

}  // namespace

Automorphism2 BElement::to_automorphism() const {
  return {x_poly() * alpha + y_poly() * gamma, y_poly() * beta};
}

Automorphism2 to_automorphism(const AmalgamFactor& f) {
  if (const auto* t = std::get_if<TRep>(&f)) return {x_poly() + t->f, y_poly()};
  const auto& g = std::get<GLRep>(f);
  return {y_poly(), x_poly() + y_poly() * g.mu};
}

Automorphism2 assemble(const AmalgamWord& w) {
  Automorphism2 acc = Automorphism2::identity();
  for (const auto& f : w.factors) acc = compose(acc, to_automorphism(f));
  return compose(acc, w.head.to_automorphism());
}

AmalgamWord normal_form_of_product(std::span<const Automorphism2> syllables, int n) {
  std::vector<AmalgamFactor> reps;
  Automorphism2 carry = Automorphism2::identity();
  for (const auto& g : syllables) {
    Automorphism2 h = compose(carry, g);
    Kind kind = classify_syllable(h, n);
    if (kind != Kind::B && !reps.empty() && kind_of(reps.back()) == kind) {
      h = compose(to_automorphism(reps.back()), h);
      reps.pop_back();
      kind = classify_syllable(h, n);
    }
    if (kind == Kind::B) {
      carry = std::move(h);
      continue;
    }
    Split s = split(h, kind);
    reps.push_back(std::move(s.rep));
    carry = s.b.to_automorphism();
  }
  return {as_b(carry), std::move(reps)};
}

AmalgamWord normal_form(const Automorphism2& a, int n) {
  if (!is_n_graded_aut(a, n))
    throw Error(ErrorKind::NotGraded, "(" + print_poly(a.fx) + ", " + print_poly(a.fy) + ") is not " +
                                          std::to_string(n) + "-graded");
  std::vector<Automorphism2> syllables;
  for (const auto& f : decompose(a)) syllables.push_back(to_automorphism(f));
  return normal_form_of_product(syllables, n);
}

AmalgamWord normal_form_mod_E(const Automorphism2& a, int n) {
  AmalgamWord w = normal_form(a, n);
  if (n % 2 == 0 && w.head.beta.sign() < 0) w.head = {-w.head.alpha, -w.head.gamma, -w.head.beta};
  return w;
}

bool is_valid_word(const AmalgamWord& w, int n) {
  if (w.head.alpha.is_zero() || w.head.beta.is_zero()) return false;
  for (std::size_t i = 0; i < w.factors.size(); ++i) {
    if (i > 0 && kind_of(w.factors[i]) == kind_of(w.factors[i - 1])) return false;
    if (const auto* t = std::get_if<TRep>(&w.factors[i])) {
      if (t->f.is_zero() || !t->f.only_in(kY) || !in_graded_component(t->f, n, 1)) return false;
      if (!t->f.coefficient(kMy).is_zero()) return false;
    }
  }
  return true;
}

std::optional<long> order_mod_E(const Automorphism2& a, int n, long bound) {
  Automorphism2 power = Automorphism2::identity();
  for (long k = 1; k <= bound; ++k) {
    power = compose(power, a);
    if (equal_mod_E(power, Automorphism2::identity(), n)) return k;
  }
  return std::nullopt;
}

}  // namespace veronese

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

#include "veronese/triangulation.hpp"

#include <algorithm>
#include <limits>
#include <optional>

#include "veronese/errors.hpp"
#include "veronese/expr_text.hpp"

namespace veronese {

namespace {

Strength strength(const Monomial& m, std::size_t target) {
  Strength s{static_cast<long>(m[kX]), static_cast<long>(m[kY])};
  if (target == kX) --s.s;
  else --s.t;
  return s;
}

Poly select_terms(const Poly& p, std::size_t target, Weight w, long degree) {
  Poly::Terms::sequence_type seq;
  for (const auto& [m, c] : p.terms()) {
    Strength s = strength(m, target);
    if (s.s * w.w1 + s.t * w.w2 == degree) seq.emplace_back(m, c);
  }
  return Poly::from_sorted(p.ring(), std::move(seq));
}

// Single term c * var^e with c != 0; nullopt otherwise.
std::optional<std::pair<Rational, Exponent>> single_power(const Poly& p, std::size_t var) {
  if (p.size() != 1 || !p.only_in(var)) return std::nullopt;
  const auto& [m, c] = p.leading_term();
  return std::pair{c, m[var]};
}

std::string show(const Derivation2& d) {
  return "(" + print_poly(d.fx) + ")*d/dx + (" + print_poly(d.fy) + ")*d/dy";
}

}  // namespace

std::set<Strength> support(const Derivation2& d) {
  std::set<Strength> out;
  for (const auto& [m, c] : d.fx.terms()) out.insert(strength(m, kX));
  for (const auto& [m, c] : d.fy.terms()) out.insert(strength(m, kY));
  return out;
}

Derivation2 w_homogeneous_part(const Derivation2& d, Weight w, long p) {
  return {select_terms(d.fx, kX, w, p), select_terms(d.fy, kY, w, p)};
}

std::string to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::FyDx: return "FyDx";
    case CaseTag::FxDy: return "FxDy";
    case CaseTag::Triangle: return "Triangle";
    case CaseTag::NotLND: return "NotLND";
  }
  return "?";
}

Classification classify(const Derivation2& d, int n) {
  if (!is_n_graded_derivation(d, n))
    throw Error(ErrorKind::NotGraded, "derivation images are not in the degree-1 component mod " +
                                          std::to_string(n));
  if (d.fy.is_zero() && d.fx.only_in(kY)) return {CaseTag::FyDx};
  if (d.fx.is_zero() && d.fy.only_in(kX)) return {CaseTag::FxDy};

  const auto supp = support(d);
  std::optional<long> s0;
  std::optional<long> t0;
  for (const auto& st : supp) {
    if (st.t == -1) s0 = std::max(s0.value_or(st.s), st.s);
    if (st.s == -1) t0 = std::max(t0.value_or(st.t), st.t);
  }
  if (!s0 || !t0) return {CaseTag::NotLND};
  for (const auto& st : supp) {
    if (st.s < -1 || st.t < -1) return {CaseTag::NotLND};
    if ((*t0 + 1) * (st.s + 1) + (*s0 + 1) * (st.t + 1) > (*s0 + 1) * (*t0 + 1)) return {CaseTag::NotLND};
  }
  return {CaseTag::Triangle, *s0, *t0};
}

TriangleStep triangle_step(const Derivation2& d, int n, const Classification& cls) {
  if (cls.tag != CaseTag::Triangle) throw Error(ErrorKind::InvalidArgument, "triangle_step needs a Triangle case");
  const long k = (cls.s0 - 1) / n;
  const long l = (cls.t0 - 1) / n;
  if (cls.s0 != 1 + n * k || cls.t0 != 1 + n * l)
    throw Error(ErrorKind::NotGraded, "extreme strengths are not congruent to 1 mod n");
  const Weight w(n * l + 2, n * k + 2);
  const long p = n * n * k * l + n * k + n * l;

  const Derivation2 top = w_homogeneous_part(d, w, p);
  const Poly g = gcd(top.fx, top.fy);
  const Derivation2 unit{exact_div(top.fx, g), exact_div(top.fy, g)};

  TriangleStep step;
  Derivation2 work = d;
  auto cx = unit.fx.is_constant() && !unit.fx.is_zero() ? single_power(unit.fx, kX) : std::nullopt;
  auto dx = single_power(unit.fy, kX);
  if (!(cx && dx)) {
    // Constant in the y-image: swap the variables and straighten the mirror image.
    auto cy = unit.fy.is_constant() && !unit.fy.is_zero() ? single_power(unit.fy, kY) : std::nullopt;
    auto dy = single_power(unit.fx, kY);
    if (!(cy && dy))
      throw NotLocallyNilpotent("top w-homogeneous part " + show(top) +
                                " is not g*(c*d/dx + d*x^r*d/dy) in either variable order");
    const Automorphism2 swap = to_automorphism(Linear::swap());
    work = conjugate(d, swap, swap);
    step.factors.emplace_back(Linear::swap());
    cx = cy;
    dx = dy;
  }

  step.c = cx->first;
  step.d = dx->first;
  step.r = dx->second;
  if (step.r % static_cast<Exponent>(n) != 0)
    throw NotLocallyNilpotent("shear exponent " + std::to_string(step.r + 1) + " is not 1 mod n");

  const Rational e = step.d / (Rational(static_cast<long>(step.r) + 1) * step.c);
  const ShearY shear{e, step.r + 1};
  step.factors.emplace_back(shear);
  step.conjugated = conjugate(work, to_automorphism(shear), to_automorphism(ShearY{-e, step.r + 1}));
  return step;
}

TriangulationResult triangulate(const Derivation2& d, int n) {
  TriangulationResult result{{}, Poly(Ring::xy())};
  Derivation2 current = d;
  long previous_measure = std::numeric_limits<long>::max();
  for (;;) {
    const Classification cls = classify(current, n);
    if (cls.tag == CaseTag::FyDx) break;
    if (cls.tag == CaseTag::FxDy) {
      const Automorphism2 swap = to_automorphism(Linear::swap());
      current = conjugate(current, swap, swap);
      result.conjugator.emplace_back(Linear::swap());
      break;
    }
    if (cls.tag == CaseTag::NotLND)
      throw NotLocallyNilpotent("support of " + show(current) + " is outside every LND shape");
    const long measure = cls.s0 + cls.t0;
    if (measure >= previous_measure)
      throw NotLocallyNilpotent("internal: s0+t0 did not decrease (" + std::to_string(measure) + ")");
    previous_measure = measure;
    TriangleStep step = triangle_step(current, n, cls);
    result.conjugator.insert(result.conjugator.end(), step.factors.begin(), step.factors.end());
    current = std::move(step.conjugated);
  }
  result.normal_fy = current.fx;

  const Automorphism2 alpha = result.conjugator_map();
  // alpha^-1 D alpha = f(y) dx  iff  D(alpha(x)) = alpha(f) and D(alpha(y)) = 0.
  if (!(apply(d, alpha.fy).is_zero() && apply(d, alpha.fx) == alpha.apply(result.normal_fy)))
    throw NotLocallyNilpotent("internal: conjugator does not reproduce the normal form");
  return result;
}

}  // namespace veronese

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

#include "veronese/derivations.hpp"

#include "veronese/errors.hpp"
#include "veronese/expr_text.hpp"

namespace veronese {

Derivation2 Derivation2::zero() { return {Poly(Ring::xy()), Poly(Ring::xy())}; }

Poly apply(const Derivation2& d, const Poly& p) {
  return d.fx * diff(p, kX) + d.fy * diff(p, kY);
}

bool is_n_graded_derivation(const Derivation2& d, int n) {
  return in_graded_component(d.fx, n, 1) && in_graded_component(d.fy, n, 1);
}

DerivationV restrict_to_V(const Derivation2& d, const VeroneseContext& ctx) {
  if (!is_n_graded_derivation(d, ctx.n()))
    throw Error(ErrorKind::NotGraded, "derivation images are not in the degree-1 component mod " +
                                          std::to_string(ctx.n()));
  DerivationV out{ctx, {}};
  for (int i = 0; i <= ctx.n(); ++i) out.images.push_back(apply(d, ctx.generator_image(i)));
  return out;
}

Derivation2 lift_derivation(const DerivationV& dv) {
  const int n = dv.ctx.n();
  if (dv.images.size() != static_cast<std::size_t>(n + 1))
    throw Error(ErrorKind::ArityMismatch, "expected " + std::to_string(n + 1) + " generator images");
  for (std::size_t i = 0; i < dv.images.size(); ++i)
    if (!member(dv.images[i], dv.ctx))
      throw Error(ErrorKind::NotInAlgebra, "image " + std::to_string(i) + " = " +
                                               print_poly(dv.images[i]) + " is not in V_" +
                                               std::to_string(n));

  const auto un = static_cast<Exponent>(n);
  auto divide = [&](const Poly& image, const Poly& by, const char* which) {
    auto q = try_exact_div(image, by);
    if (!q)
      throw Error(ErrorKind::NotADerivation,
                  std::string(which) + ": " + print_poly(image) + " is not divisible by " + print_poly(by));
    return *std::move(q);
  };
  Derivation2 lift{divide(dv.images.front(), Poly::xy_monomial(un - 1, 0, n), "image of x^n"),
                   divide(dv.images.back(), Poly::xy_monomial(0, un - 1, n), "image of y^n")};

  for (int i = 0; i <= n; ++i) {
    const auto ui = static_cast<Exponent>(i);
    Poly expected(Ring::xy());
    if (i < n) expected += Poly::xy_monomial(un - ui - 1, ui, n - i) * lift.fx;
    if (i > 0) expected += Poly::xy_monomial(un - ui, ui - 1, i) * lift.fy;
    if (!(expected == dv.images[static_cast<std::size_t>(i)]))
      throw Error(ErrorKind::NotADerivation,
                  "generator equation " + std::to_string(i) + " fails: image is " +
                      print_poly(dv.images[static_cast<std::size_t>(i)]) + ", Leibniz rule gives " +
                      print_poly(expected));
  }
  if (!is_n_graded_derivation(lift, n))
    throw Error(ErrorKind::NotGraded, "lifted derivation is not n-graded");
  return lift;
}

Automorphism2 exp_lnd(const Derivation2& d, long cap) {
  auto series = [&](const Poly& start) {
    Poly sum = start;
    Poly iterate = start;
    Rational factorial = 1;
    for (long p = 1;; ++p) {
      iterate = apply(d, iterate);
      if (iterate.is_zero()) return sum;
      if (p >= cap)
        throw NotLocallyNilpotent("iterates do not vanish within " + std::to_string(cap) + " steps", cap);
      factorial *= Rational(p);
      sum += iterate * factorial.inverse();
    }
  };
  return {series(Poly::variable(Ring::xy(), kX)), series(Poly::variable(Ring::xy(), kY))};
}

Derivation2 conjugate(const Derivation2& d, const Automorphism2& a, const Automorphism2& a_inverse) {
  return {a_inverse.apply(apply(d, a.fx)), a_inverse.apply(apply(d, a.fy))};
}

Derivation2 conjugate(const Derivation2& d, const Automorphism2& a) {
  return conjugate(d, a, invert(a));
}

}  // namespace veronese

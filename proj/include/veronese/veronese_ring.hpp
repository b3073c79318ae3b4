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

#include <vector>

#include "veronese/poly.hpp"

namespace veronese {

/// The algebra V_n = K[x^n, x^{n-1}y, ..., y^n] together with its
/// presentation K[X0,...,Xn]/I.
class VeroneseContext {
 public:
  explicit VeroneseContext(int n);

  int n() const noexcept { return n_; }
  /// K[X0,...,Xn].
  const Ring& generator_ring() const noexcept { return generators_; }
  /// X_i as a polynomial.
  Poly generator(int i) const;
  /// x^{n-i} y^i, the image of X_i.
  Poly generator_image(int i) const;
  std::vector<Poly> generator_images() const;

  friend bool operator==(const VeroneseContext& a, const VeroneseContext& b) { return a.n_ == b.n_; }

 private:
  int n_;
  Ring generators_;
};

/// F_{i,j} = X_{i-1} X_{j+1} - X_i X_j for 1 <= i <= j <= n-1.
struct Relation {
  int i;
  int j;
  Poly poly;
};

Relation relation(const VeroneseContext& ctx, int i, int j);
std::vector<Relation> relations(const VeroneseContext& ctx);

/// X_k^i X_{k+1}^j with 0 <= k <= n-1, stored canonically: the unit is
/// (0,0,0); a pure power X_s^e is (s,e,0) except X_n^e, which is (n-1,0,e).
struct BasisMonomial {
  int k = 0;
  Exponent i = 0;
  Exponent j = 0;

  Monomial exponents(const VeroneseContext& ctx) const;
  Poly to_poly(const VeroneseContext& ctx) const;

  friend bool operator==(const BasisMonomial&, const BasisMonomial&) = default;
  friend auto operator<=>(const BasisMonomial&, const BasisMonomial&) = default;
};

/// True iff every term of p (over x,y) has total degree divisible by n.
bool member(const Poly& p, const VeroneseContext& ctx);

/// Substitution X_i -> x^{n-i} y^i.
Poly phi(const Poly& p, const VeroneseContext& ctx);

/// The basis monomial whose image is x^a y^b. Requires n | a+b.
BasisMonomial express_monomial(Exponent a, Exponent b, const VeroneseContext& ctx);

/// Preimage of p on the basis monomials. Throws NotInAlgebra.
Poly express(const Poly& p, const VeroneseContext& ctx);

/// True when the monomial's support lies in some {X_k, X_{k+1}}.
bool is_basis_monomial(const Monomial& m);

/// Canonical form of a monomial already known to be a basis monomial.
BasisMonomial as_basis_monomial(const Monomial& m, const VeroneseContext& ctx);

enum class RewriteStrategy {
  /// Rewrite the lex-greatest reducible monomial, outermost index pair first.
  GreatestOutermost,
  /// Rewrite the lex-smallest reducible monomial, innermost index pair first.
  SmallestInnermost,
};

/// Normal form modulo I under the rewriting X_{i-1}X_{j+1} -> X_i X_j.
Poly groebner_reduce(const Poly& p, const VeroneseContext& ctx,
                     RewriteStrategy strategy = RewriteStrategy::GreatestOutermost);

/// Basis monomials of X-degree m, in descending order of their x exponent.
std::vector<BasisMonomial> enum_basis(const VeroneseContext& ctx, int m);

/// S-polynomial of two nonzero polynomials under lex order, leading
/// coefficients normalized to 1.
Poly s_polynomial(const Poly& f, const Poly& g);

}  // namespace veronese

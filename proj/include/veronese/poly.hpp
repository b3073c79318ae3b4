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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/container/flat_map.hpp>
#include <boost/container/small_vector.hpp>

#include "veronese/rational.hpp"

namespace veronese {

/// Ordered list of variable names. Copies share storage; equality is by
/// content.
class Ring {
 public:
  explicit Ring(std::vector<std::string> names);

  /// The bivariate ring K[x,y], x before y.
  static Ring xy();
  /// K[X0,...,Xn].
  static Ring generators(int n);

  std::size_t arity() const noexcept { return names_->size(); }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const noexcept { return *names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

using Exponent = std::uint32_t;
using Monomial = boost::container::small_vector<Exponent, 6>;

inline constexpr std::size_t kX = 0;
inline constexpr std::size_t kY = 1;

long total_degree(const Monomial& m);

/// Integer weight (w1, w2) on x and y, not both zero.
struct Weight {
  long w1;
  long w2;

  Weight(long a, long b);
  long of(const Monomial& m) const { return w1 * static_cast<long>(m[kX]) + w2 * static_cast<long>(m[kY]); }
};

/// Sparse polynomial with rational coefficients over a Ring.
///
/// Terms live in a map sorted by descending lex order on exponent vectors,
/// so the first term is the lex-leading term (x > y, X0 > X1 > ...). Zero
/// coefficients are never stored.
class Poly {
 public:
  using Terms = boost::container::flat_map<Monomial, Rational, std::greater<Monomial>>;
  using Term = Terms::value_type;

  explicit Poly(Ring ring) : ring_(std::move(ring)) {}

  static Poly constant(Ring ring, const Rational& c);
  static Poly variable(Ring ring, std::size_t index);
  static Poly term(Ring ring, Monomial m, const Rational& c);
  /// Builds from an unsorted list; duplicate monomials are summed.
  static Poly from_terms(Ring ring, std::vector<std::pair<Monomial, Rational>> terms);

  /// Adopts terms already in descending lex order, unique, with nonzero
  /// coefficients.
  static Poly from_sorted(Ring ring, Terms::sequence_type terms);

  /// x^a y^b (times c) in K[x,y].
  static Poly xy_monomial(Exponent a, Exponent b, const Rational& c = 1);

  const Ring& ring() const noexcept { return ring_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;

  /// Total degree; -1 for the zero polynomial.
  long total_degree() const;
  long degree_in(std::size_t var) const;
  /// True when every term involves only `var`.
  bool only_in(std::size_t var) const;

  /// Lex-leading term. Precondition: nonzero.
  const Term& leading_term() const { return *terms_.begin(); }
  const Rational& leading_coefficient() const { return terms_.begin()->second; }

  Poly homogeneous_part(long degree) const;
  /// Homogeneous part of maximal total degree.
  Poly leading_form() const;
  /// Same polynomial scaled so the lex-leading coefficient is 1 (zero stays zero).
  Poly monic() const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator-(Poly a);

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

 private:
  void require_same_ring(const Poly& other) const;
  void add_scaled(const Poly& other, const Rational& scale);

  Ring ring_;
  Terms terms_;

  friend Poly pow(const Poly& p, unsigned exponent);
};

Poly pow(const Poly& p, unsigned exponent);

/// Exact quotient a / b. Throws DivisionNotExact when b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);
std::optional<Poly> try_exact_div(const Poly& a, const Poly& b);

/// Greatest common divisor of two bivariate polynomials, monic under lex
/// order with x > y.
Poly gcd(const Poly& a, const Poly& b);

Poly diff(const Poly& p, std::size_t var);
Poly diff(const Poly& p, std::string_view var);

/// Evaluates p at the given images, one per variable of p's ring. All images
/// share one ring, which becomes the result ring.
Poly subst(const Poly& p, std::span<const Poly> images);

/// Sum of the terms whose total degree is congruent to `residue` mod n.
Poly graded_component(const Poly& p, int n, int residue);
/// True when every term has total degree congruent to `residue` mod n.
bool in_graded_component(const Poly& p, int n, int residue);
/// Set of residues mod n that occur among the term degrees of p.
std::vector<int> graded_residues(const Poly& p, int n);

/// Decomposition by w-degree; parts sum to p.
std::map<long, Poly> w_parts(const Poly& p, Weight w);

/// v with v^n = c; v > 0 for even n. Throws NeedsRootExtension.
Rational nth_root_rational(const Rational& c, long n);

}  // namespace veronese

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

#include "veronese/poly.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <unordered_map>

#include "veronese/errors.hpp"

namespace veronese {

namespace {

using Sequence = Poly::Terms::sequence_type;

void adopt(Poly::Terms& terms, Sequence&& seq) {
  terms.adopt_sequence(boost::container::ordered_unique_range, std::move(seq));
}

Monomial add_exponents(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

// Exponent vectors of up to four variables packed 16 bits each, most
// significant first, so integer order is lex order.
constexpr std::size_t kPackFields = 4;
constexpr unsigned kPackBits = 16;

bool packable(const Poly& a, const Poly& b) {
  const std::size_t arity = a.ring().arity();
  if (arity > kPackFields) return false;
  for (std::size_t v = 0; v < arity; ++v)
    if (a.degree_in(v) + b.degree_in(v) >= (1L << kPackBits)) return false;
  return true;
}

std::uint64_t pack(const Monomial& m) {
  std::uint64_t key = 0;
  for (std::size_t v = 0; v < kPackFields; ++v) key = (key << kPackBits) | (v < m.size() ? m[v] : 0U);
  return key;
}

Monomial unpack(std::uint64_t key, std::size_t arity) {
  Monomial m(arity);
  for (std::size_t v = kPackFields; v-- > 0;) {
    if (v < arity) m[v] = static_cast<Exponent>(key & 0xFFFFU);
    key >>= kPackBits;
  }
  return m;
}

// Integer numerators over a common denominator.
mpz_class clear_denominators(const Poly& p, std::vector<mpz_class>& numerators) {
  mpz_class den = 1;
  for (const auto& [m, c] : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.raw().get_den_mpz_t());
  numerators.reserve(p.size());
  for (const auto& [m, c] : p.terms()) numerators.push_back(c.raw().get_num() * (den / c.raw().get_den()));
  return den;
}

// Accumulates into a dense grid indexed in mixed radix, most significant
// variable first, so a descending scan is descending lex order.
std::optional<Sequence> multiply_dense(const Poly& a, const Poly& b, const std::vector<mpz_class>& na,
                                       const std::vector<mpz_class>& nb, const mpz_class& den) {
  constexpr std::size_t kMaxCells = std::size_t{1} << 22;
  const std::size_t arity = a.ring().arity();
  std::vector<std::size_t> radix(arity);
  std::size_t cells = 1;
  for (std::size_t v = 0; v < arity; ++v) {
    radix[v] = static_cast<std::size_t>(a.degree_in(v) + b.degree_in(v)) + 1;
    if (cells > kMaxCells / radix[v]) return std::nullopt;
    cells *= radix[v];
  }
  if (cells > 2 * a.size() * b.size()) return std::nullopt;
  auto index = [&](const Monomial& m) {
    std::size_t i = 0;
    for (std::size_t v = 0; v < arity; ++v) i = i * radix[v] + m[v];
    return i;
  };
  std::vector<std::size_t> ia, ib;
  for (const auto& t : a.terms()) ia.push_back(index(t.first));
  for (const auto& t : b.terms()) ib.push_back(index(t.first));
  std::vector<mpz_class> acc(cells);
  std::vector<bool> touched(cells);
  for (std::size_t i = 0; i < ia.size(); ++i)
    for (std::size_t j = 0; j < ib.size(); ++j) {
      const std::size_t k = ia[i] + ib[j];
      touched[k] = true;
      mpz_addmul(acc[k].get_mpz_t(), na[i].get_mpz_t(), nb[j].get_mpz_t());
    }
  Sequence seq;
  for (std::size_t k = cells; k-- > 0;) {
    if (!touched[k] || acc[k] == 0) continue;
    Monomial m(arity);
    std::size_t rest = k;
    for (std::size_t v = arity; v-- > 0;) {
      m[v] = static_cast<Exponent>(rest % radix[v]);
      rest /= radix[v];
    }
    seq.emplace_back(std::move(m), Rational(acc[k], den));
  }
  return seq;
}

Sequence multiply_packed(const Poly& a, const Poly& b) {
  std::vector<mpz_class> na, nb;
  const mpz_class den = clear_denominators(a, na) * clear_denominators(b, nb);
  if (auto dense = multiply_dense(a, b, na, nb, den)) return std::move(*dense);
  std::vector<std::uint64_t> ka, kb;
  for (const auto& t : a.terms()) ka.push_back(pack(t.first));
  for (const auto& t : b.terms()) kb.push_back(pack(t.first));

  std::unordered_map<std::uint64_t, std::size_t> slot;
  slot.reserve(a.size() + b.size() * 4);
  std::vector<std::uint64_t> keys;
  std::vector<mpz_class> acc;
  for (std::size_t i = 0; i < ka.size(); ++i) {
    for (std::size_t j = 0; j < kb.size(); ++j) {
      auto [it, inserted] = slot.try_emplace(ka[i] + kb[j], acc.size());
      if (inserted) {
        keys.push_back(ka[i] + kb[j]);
        acc.emplace_back(0);
      }
      mpz_addmul(acc[it->second].get_mpz_t(), na[i].get_mpz_t(), nb[j].get_mpz_t());
    }
  }
  std::vector<std::size_t> order(keys.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return keys[x] > keys[y]; });
  Sequence seq;
  seq.reserve(order.size());
  const std::size_t arity = a.ring().arity();
  for (std::size_t i : order) {
    if (acc[i] == 0) continue;
    seq.emplace_back(unpack(keys[i], arity), Rational(acc[i], den));
  }
  return seq;
}

long positive_mod(long value, long n) {
  long r = value % n;
  return r < 0 ? r + n : r;
}

}  // namespace

Ring::Ring(std::vector<std::string> names)
    : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {
  for (std::size_t i = 0; i < names_->size(); ++i)
    for (std::size_t j = i + 1; j < names_->size(); ++j)
      if ((*names_)[i] == (*names_)[j])
        throw Error(ErrorKind::InvalidArgument, "duplicate variable name " + (*names_)[i]);
}

Ring Ring::xy() {
  static const Ring ring(std::vector<std::string>{"x", "y"});
  return ring;
}

Ring Ring::generators(int n) {
  std::vector<std::string> names;
  for (int i = 0; i <= n; ++i) names.push_back("X" + std::to_string(i));
  return Ring(std::move(names));
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_->size(); ++i)
    if ((*names_)[i] == name) return i;
  return std::nullopt;
}

long total_degree(const Monomial& m) {
  long d = 0;
  for (auto e : m) d += e;
  return d;
}

Weight::Weight(long a, long b) : w1(a), w2(b) {
  if (a == 0 && b == 0) throw Error(ErrorKind::InvalidArgument, "weight (0,0)");
}

Poly Poly::constant(Ring ring, const Rational& c) {
  Monomial zero(ring.arity(), 0);
  return term(std::move(ring), std::move(zero), c);
}

Poly Poly::variable(Ring ring, std::size_t index) {
  if (index >= ring.arity()) throw Error(ErrorKind::UnknownVariable, "variable index out of range");
  Monomial m(ring.arity(), 0);
  m[index] = 1;
  return term(std::move(ring), std::move(m), 1);
}

Poly Poly::term(Ring ring, Monomial m, const Rational& c) {
  if (m.size() != ring.arity()) throw Error(ErrorKind::ArityMismatch, "monomial arity");
  Poly p(std::move(ring));
  if (!c.is_zero()) p.terms_.emplace(std::move(m), c);
  return p;
}

Poly Poly::from_terms(Ring ring, std::vector<std::pair<Monomial, Rational>> terms) {
  for (const auto& t : terms)
    if (t.first.size() != ring.arity()) throw Error(ErrorKind::ArityMismatch, "monomial arity");
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  Sequence seq;
  seq.reserve(terms.size());
  for (auto& t : terms) {
    if (!seq.empty() && seq.back().first == t.first) {
      seq.back().second += t.second;
    } else {
      if (!seq.empty() && seq.back().second.is_zero()) seq.pop_back();
      seq.emplace_back(std::move(t.first), std::move(t.second));
    }
  }
  if (!seq.empty() && seq.back().second.is_zero()) seq.pop_back();
  Poly p(std::move(ring));
  adopt(p.terms_, std::move(seq));
  return p;
}

Poly Poly::from_sorted(Ring ring, Terms::sequence_type terms) {
  Poly p(std::move(ring));
  adopt(p.terms_, std::move(terms));
  return p;
}

Poly Poly::xy_monomial(Exponent a, Exponent b, const Rational& c) {
  return term(Ring::xy(), Monomial{a, b}, c);
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && veronese::total_degree(terms_.begin()->first) == 0);
}

Rational Poly::constant_term() const { return coefficient(Monomial(ring_.arity(), 0)); }

Rational Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

long Poly::total_degree() const {
  long d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, veronese::total_degree(m));
  return d;
}

long Poly::degree_in(std::size_t var) const {
  long d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<long>(m[var]));
  return d;
}

bool Poly::only_in(std::size_t var) const {
  for (const auto& [m, c] : terms_)
    for (std::size_t i = 0; i < m.size(); ++i)
      if (i != var && m[i] != 0) return false;
  return true;
}

Poly Poly::homogeneous_part(long degree) const {
  Poly out(ring_);
  Sequence seq;
  for (const auto& [m, c] : terms_)
    if (veronese::total_degree(m) == degree) seq.emplace_back(m, c);
  adopt(out.terms_, std::move(seq));
  return out;
}

Poly Poly::leading_form() const { return homogeneous_part(total_degree()); }

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * leading_coefficient().inverse();
}

void Poly::require_same_ring(const Poly& other) const {
  if (!(ring_ == other.ring_)) throw Error(ErrorKind::RingMismatch, "operands live in different rings");
}

void Poly::add_scaled(const Poly& other, const Rational& scale) {
  require_same_ring(other);
  if (other.terms_.empty()) return;
  Sequence seq;
  seq.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first > b->first)) {
      seq.emplace_back(a->first, a->second);
      ++a;
    } else if (a == terms_.end() || b->first > a->first) {
      seq.emplace_back(b->first, b->second * scale);
      ++b;
    } else {
      Rational c = a->second + b->second * scale;
      if (!c.is_zero()) seq.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  Terms fresh;
  adopt(fresh, std::move(seq));
  terms_.swap(fresh);
}

Poly& Poly::operator+=(const Poly& other) {
  add_scaled(other, 1);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  add_scaled(other, -1);
  return *this;
}

Poly& Poly::operator*=(const Poly& other) {
  *this = *this * other;
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.require_same_ring(b);
  Poly out(a.ring_);
  if (a.is_zero() || b.is_zero()) return out;
  if (b.size() == 1 || a.size() == 1) {
    // Monomial multiplication preserves order; no sort needed.
    const Poly& many = b.size() == 1 ? a : b;
    const auto& single = b.size() == 1 ? *b.terms_.begin() : *a.terms_.begin();
    Sequence seq;
    seq.reserve(many.size());
    for (const auto& [m, c] : many.terms_)
      seq.emplace_back(add_exponents(m, single.first), c * single.second);
    adopt(out.terms_, std::move(seq));
    return out;
  }
  if (packable(a, b)) {
    adopt(out.terms_, multiply_packed(a, b));
    return out;
  }
  std::vector<std::pair<Monomial, Rational>> products;
  products.reserve(a.size() * b.size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) products.emplace_back(add_exponents(ma, mb), ca * cb);
  return Poly::from_terms(a.ring_, std::move(products));
}

Poly operator-(Poly a) {
  for (auto& t : a.terms_) t.second = -t.second;
  return a;
}

Poly pow(const Poly& p, unsigned exponent) {
  Poly result = Poly::constant(p.ring(), 1);
  Poly base = p;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

std::optional<Poly> try_exact_div(const Poly& a, const Poly& b) {
  if (!(a.ring() == b.ring())) throw Error(ErrorKind::RingMismatch, "operands live in different rings");
  if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by the zero polynomial");
  const auto& [lead_m, lead_c] = b.leading_term();
  std::vector<std::pair<Monomial, Rational>> quotient;
  Poly rest = a;
  while (!rest.is_zero()) {
    const auto& [m, c] = rest.leading_term();
    Monomial q(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] < lead_m[i]) return std::nullopt;
      q[i] = m[i] - lead_m[i];
    }
    Rational qc = c / lead_c;
    Poly step = Poly::term(a.ring(), q, qc);
    quotient.emplace_back(std::move(q), qc);
    rest -= b * step;
  }
  return Poly::from_terms(a.ring(), std::move(quotient));
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto q = try_exact_div(a, b);
  if (!q) throw Error(ErrorKind::DivisionNotExact, "divisor does not divide the dividend");
  return *std::move(q);
}

Poly diff(const Poly& p, std::size_t var) {
  if (var >= p.ring().arity()) throw Error(ErrorKind::UnknownVariable, "variable index out of range");
  Sequence seq;
  for (const auto& [m, c] : p.terms()) {
    if (m[var] == 0) continue;
    Monomial d = m;
    --d[var];
    seq.emplace_back(std::move(d), c * Rational(static_cast<long>(m[var])));
  }
  // Lowering one fixed coordinate keeps lex order among the surviving terms.
  return Poly::from_sorted(p.ring(), std::move(seq));
}

Poly diff(const Poly& p, std::string_view var) {
  auto index = p.ring().index_of(var);
  if (!index) throw Error(ErrorKind::UnknownVariable, std::string(var));
  return diff(p, *index);
}

Poly subst(const Poly& p, std::span<const Poly> images) {
  if (images.size() != p.ring().arity())
    throw Error(ErrorKind::ArityMismatch, "expected " + std::to_string(p.ring().arity()) +
                                              " images, got " + std::to_string(images.size()));
  if (images.empty()) throw Error(ErrorKind::ArityMismatch, "empty image list");
  const Ring& target = images.front().ring();
  for (const auto& im : images)
    if (!(im.ring() == target)) throw Error(ErrorKind::RingMismatch, "images live in different rings");

  // powers[v][e] = images[v]^e, filled on demand.
  std::vector<std::vector<Poly>> powers(images.size());
  auto power = [&](std::size_t v, Exponent e) -> const Poly& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(Poly::constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[v]);
    return cache[e];
  };

  // Horner scheme, one variable at a time; terms are in descending lex order
  // so each variable's exponents appear in descending runs.
  using Iter = Poly::Terms::const_iterator;
  auto horner = [&](auto& self, Iter first, Iter last, std::size_t v) -> Poly {
    if (v == images.size()) return Poly::constant(target, first->second);
    Poly acc(target);
    Exponent previous = 0;
    bool started = false;
    while (first != last) {
      const Exponent e = first->first[v];
      Iter stop = first;
      while (stop != last && stop->first[v] == e) ++stop;
      if (started) acc = acc * power(v, previous - e);
      acc += self(self, first, stop, v + 1);
      previous = e;
      started = true;
      first = stop;
    }
    return previous == 0 ? acc : acc * power(v, previous);
  };
  if (p.is_zero()) return Poly(target);
  return horner(horner, p.terms().begin(), p.terms().end(), 0);
}

Poly graded_component(const Poly& p, int n, int residue) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "modulus must be positive");
  std::vector<std::pair<Monomial, Rational>> keep;
  for (const auto& [m, c] : p.terms())
    if (positive_mod(total_degree(m), n) == positive_mod(residue, n)) keep.emplace_back(m, c);
  return Poly::from_terms(p.ring(), std::move(keep));
}

bool in_graded_component(const Poly& p, int n, int residue) {
  for (const auto& [m, c] : p.terms())
    if (positive_mod(total_degree(m), n) != positive_mod(residue, n)) return false;
  return true;
}

std::vector<int> graded_residues(const Poly& p, int n) {
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (const auto& [m, c] : p.terms()) seen[static_cast<std::size_t>(positive_mod(total_degree(m), n))] = true;
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (seen[static_cast<std::size_t>(i)]) out.push_back(i);
  return out;
}

std::map<long, Poly> w_parts(const Poly& p, Weight w) {
  if (p.ring().arity() != 2) throw Error(ErrorKind::ArityMismatch, "w-grading needs a bivariate ring");
  std::map<long, std::vector<std::pair<Monomial, Rational>>> buckets;
  for (const auto& [m, c] : p.terms()) buckets[w.of(m)].emplace_back(m, c);
  std::map<long, Poly> out;
  for (auto& [d, terms] : buckets) out.emplace(d, Poly::from_terms(p.ring(), std::move(terms)));
  return out;
}

namespace {

// Exact integer n-th root of a non-negative integer, if it exists.
std::optional<mpz_class> exact_root(const mpz_class& value, unsigned long n) {
  mpz_class root;
  if (mpz_root(root.get_mpz_t(), value.get_mpz_t(), n) == 0) return std::nullopt;
  return root;
}

}  // namespace

Rational nth_root_rational(const Rational& c, long n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "root index must be positive");
  if (c.is_zero()) throw Error(ErrorKind::InvalidArgument, "root of zero requested");
  if (c.sign() < 0 && n % 2 == 0) throw NeedsRootExtension(c, n);
  mpz_class num = c.numerator();
  if (num < 0) num = -num;
  auto rn = exact_root(num, static_cast<unsigned long>(n));
  auto rd = exact_root(c.denominator(), static_cast<unsigned long>(n));
  if (!rn || !rd) throw NeedsRootExtension(c, n);
  if (c.sign() < 0) *rn = -*rn;
  return Rational(*rn, *rd);
}

}  // namespace veronese

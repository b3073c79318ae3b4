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

#include "veronese/veronese_ring.hpp"

#include <algorithm>
#include <optional>

#include "veronese/errors.hpp"

namespace veronese {

namespace {

void require_generator_ring(const Poly& p, const VeroneseContext& ctx) {
  if (!(p.ring() == ctx.generator_ring()))
    throw Error(ErrorKind::ArityMismatch,
                "expected a polynomial in X0..X" + std::to_string(ctx.n()));
}

void require_xy(const Poly& p) {
  if (!(p.ring() == Ring::xy())) throw Error(ErrorKind::RingMismatch, "expected a polynomial in x, y");
}

struct IndexPair {
  std::size_t low;
  std::size_t high;
};

// Index pair (a, b) with b - a >= 2 and both exponents positive, chosen per
// strategy; nullopt when the monomial is already normal.
std::optional<IndexPair> reducible_pair(const Monomial& m, RewriteStrategy strategy) {
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] > 0) support.push_back(i);
  if (support.size() < 2) return std::nullopt;
  if (strategy == RewriteStrategy::GreatestOutermost) {
    if (support.back() - support.front() < 2) return std::nullopt;
    return IndexPair{support.front(), support.back()};
  }
  for (std::size_t s = 0; s < support.size(); ++s)
    for (std::size_t t = s + 1; t < support.size(); ++t)
      if (support[t] - support[s] >= 2) return IndexPair{support[s], support[t]};
  return std::nullopt;
}

}  // namespace

VeroneseContext::VeroneseContext(int n) : n_(n), generators_(Ring::generators(n < 2 ? 2 : n)) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "n must be at least 2, got " + std::to_string(n));
}

Poly VeroneseContext::generator(int i) const {
  return Poly::variable(generators_, static_cast<std::size_t>(i));
}

Poly VeroneseContext::generator_image(int i) const {
  if (i < 0 || i > n_) throw Error(ErrorKind::InvalidArgument, "generator index out of range");
  return Poly::xy_monomial(static_cast<Exponent>(n_ - i), static_cast<Exponent>(i));
}

std::vector<Poly> VeroneseContext::generator_images() const {
  std::vector<Poly> out;
  for (int i = 0; i <= n_; ++i) out.push_back(generator_image(i));
  return out;
}

Relation relation(const VeroneseContext& ctx, int i, int j) {
  if (i < 1 || i > j || j > ctx.n() - 1)
    throw Error(ErrorKind::InvalidArgument, "relation indices out of range");
  Poly f = ctx.generator(i - 1) * ctx.generator(j + 1) - ctx.generator(i) * ctx.generator(j);
  return {i, j, std::move(f)};
}

std::vector<Relation> relations(const VeroneseContext& ctx) {
  std::vector<Relation> out;
  for (int i = 1; i <= ctx.n() - 1; ++i)
    for (int j = i; j <= ctx.n() - 1; ++j) out.push_back(relation(ctx, i, j));
  return out;
}

Monomial BasisMonomial::exponents(const VeroneseContext& ctx) const {
  Monomial m(static_cast<std::size_t>(ctx.n() + 1), 0);
  m[static_cast<std::size_t>(k)] += i;
  m[static_cast<std::size_t>(k + 1)] += j;
  return m;
}

Poly BasisMonomial::to_poly(const VeroneseContext& ctx) const {
  return Poly::term(ctx.generator_ring(), exponents(ctx), 1);
}

bool member(const Poly& p, const VeroneseContext& ctx) {
  require_xy(p);
  return in_graded_component(p, ctx.n(), 0);
}

Poly phi(const Poly& p, const VeroneseContext& ctx) {
  require_generator_ring(p, ctx);
  auto images = ctx.generator_images();
  return subst(p, images);
}

BasisMonomial express_monomial(Exponent a, Exponent b, const VeroneseContext& ctx) {
  const auto n = static_cast<Exponent>(ctx.n());
  if ((a + b) % n != 0) throw Error(ErrorKind::NotInAlgebra, "degree not divisible by n");
  const Exponent m = (a + b) / n;
  if (m == 0) return {};
  const Exponent k = b / m;
  if (k == n) return {ctx.n() - 1, 0, m};
  const Exponent j = b - k * m;
  return {static_cast<int>(k), m - j, j};
}

Poly express(const Poly& p, const VeroneseContext& ctx) {
  require_xy(p);
  std::vector<std::pair<Monomial, Rational>> terms;
  for (const auto& [m, c] : p.terms()) {
    if ((m[kX] + m[kY]) % static_cast<Exponent>(ctx.n()) != 0)
      throw Error(ErrorKind::NotInAlgebra, "term of degree " + std::to_string(m[kX] + m[kY]) +
                                               " is not divisible by n=" + std::to_string(ctx.n()));
    terms.emplace_back(express_monomial(m[kX], m[kY], ctx).exponents(ctx), c);
  }
  return Poly::from_terms(ctx.generator_ring(), std::move(terms));
}

bool is_basis_monomial(const Monomial& m) {
  std::optional<std::size_t> first;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!first) {
      first = i;
    } else if (i - *first > 1) {
      return false;
    }
  }
  return true;
}

BasisMonomial as_basis_monomial(const Monomial& m, const VeroneseContext& ctx) {
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] > 0) support.push_back(i);
  const int n = ctx.n();
  if (support.empty()) return {};
  if (support.size() == 1) {
    const auto s = static_cast<int>(support[0]);
    if (s == n) return {n - 1, 0, m[support[0]]};
    return {s, m[support[0]], 0};
  }
  if (support.size() != 2 || support[1] != support[0] + 1)
    throw Error(ErrorKind::InvalidArgument, "monomial is not a basis monomial");
  return {static_cast<int>(support[0]), m[support[0]], m[support[1]]};
}

Poly groebner_reduce(const Poly& p, const VeroneseContext& ctx, RewriteStrategy strategy) {
  require_generator_ring(p, ctx);
  Poly current = p;
  for (;;) {
    // Pick the reducible monomial that the strategy rewrites next.
    const Poly::Term* chosen = nullptr;
    IndexPair pair{};
    auto consider = [&](const Poly::Term& t) {
      auto found = reducible_pair(t.first, strategy);
      if (!found) return false;
      chosen = &t;
      pair = *found;
      return true;
    };
    if (strategy == RewriteStrategy::GreatestOutermost) {
      for (const auto& t : current.terms())
        if (consider(t)) break;
    } else {
      for (auto it = current.terms().rbegin(); it != current.terms().rend(); ++it)
        if (consider(*it)) break;
    }
    if (chosen == nullptr) return current;

    Monomial rewritten = chosen->first;
    --rewritten[pair.low];
    --rewritten[pair.high];
    ++rewritten[pair.low + 1];
    ++rewritten[pair.high - 1];
    const Rational c = chosen->second;
    Poly step = Poly::term(current.ring(), rewritten, c) - Poly::term(current.ring(), chosen->first, c);
    current += step;
  }
}

std::vector<BasisMonomial> enum_basis(const VeroneseContext& ctx, int m) {
  if (m < 0) throw Error(ErrorKind::InvalidArgument, "degree must be non-negative");
  const auto total = static_cast<Exponent>(ctx.n() * m);
  std::vector<BasisMonomial> out;
  out.reserve(total + 1);
  for (Exponent b = 0; b <= total; ++b) out.push_back(express_monomial(total - b, b, ctx));
  return out;
}

Poly s_polynomial(const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) throw Error(ErrorKind::InvalidArgument, "S-polynomial of zero");
  const auto& [mf, cf] = f.leading_term();
  const auto& [mg, cg] = g.leading_term();
  Monomial lcm(mf.size()), uf(mf.size()), ug(mf.size());
  for (std::size_t i = 0; i < mf.size(); ++i) {
    lcm[i] = std::max(mf[i], mg[i]);
    uf[i] = lcm[i] - mf[i];
    ug[i] = lcm[i] - mg[i];
  }
  return Poly::term(f.ring(), uf, cf.inverse()) * f - Poly::term(g.ring(), ug, cg.inverse()) * g;
}

}  // namespace veronese

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

// Acceptance gate: one line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "checks.hpp"
#include "gen.hpp"
#include "oracles.hpp"
#include "veronese/amalgam.hpp"
#include "veronese/automorphisms.hpp"
#include "veronese/derivations.hpp"
#include "veronese/errors.hpp"
#include "veronese/expr_text.hpp"
#include "veronese/triangulation.hpp"
#include "veronese/veronese_ring.hpp"

using namespace veronese;

namespace {

struct Verdict {
  long checks = 0;
  std::string first_failure;

  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond && first_failure.empty()) first_failure = what;
  }
  bool ok() const { return first_failure.empty(); }
};

std::string show(const Poly& p) { return print_poly(p); }
std::string show(const Automorphism2& a) { return "(" + show(a.fx) + ", " + show(a.fy) + ")"; }

std::string ctx_of(int n, int i) { return "n=" + std::to_string(n) + " #" + std::to_string(i); }

ErrorKind error_kind(const std::function<void()>& fn, bool& raised) {
  raised = false;
  try {
    fn();
  } catch (const Error& e) {
    raised = true;
    return e.kind();
  }
  return ErrorKind::InvalidArgument;
}

bool shear_exponents_ok(const std::vector<ElementaryFactor>& fs, int n) {
  for (const auto& f : fs) {
    if (const auto* s = std::get_if<ShearX>(&f); s && s->m % n != 1) return false;
    if (const auto* s = std::get_if<ShearY>(&f); s && s->m % n != 1) return false;
  }
  return true;
}

const Poly kZero = Poly(Ring::xy());

// 1
void groebner(Verdict& v) {
  gen::Gen g(1001);
  for (int n = 2; n <= 5; ++n) {
    const VeroneseContext ctx(n);
    for (int i = 0; i < 200; ++i) {
      const Poly p = gen::x_poly(g, ctx.generator_ring(), 4, 6);
      const Poly r = groebner_reduce(p, ctx);
      bool on_basis = true;
      for (const auto& [m, c] : r.terms()) on_basis = on_basis && is_basis_monomial(m);
      v.expect(on_basis, "reduced form off the basis " + ctx_of(n, i));
      v.expect(phi(r, ctx) == phi(p, ctx), "phi changed " + ctx_of(n, i));
      v.expect(groebner_reduce(r, ctx) == r, "not idempotent " + ctx_of(n, i));
      v.expect(groebner_reduce(p, ctx, RewriteStrategy::SmallestInnermost) == r,
               "strategies disagree " + ctx_of(n, i));
    }
    auto F = [&](int i, int j) { return relation(ctx, i, j).poly; };
    auto X = [&](int i) { return ctx.generator(i); };
    const auto rels = relations(ctx);
    for (const auto& a : rels)
      for (const auto& b : rels) {
        if (a.i == b.i && a.j == b.j) continue;
        const Poly s = s_polynomial(a.poly, b.poly);
        v.expect(groebner_reduce(s, ctx).is_zero(), "S-polynomial does not reduce to zero");
        if (a.i == b.i && a.j < b.j)
          v.expect(s == -(F(a.j + 1, b.j) * X(a.i)), "case (a) identity");
        if (a.j + 2 == b.i)
          v.expect(s == F(a.i, a.j + 1) * X(b.j) - X(a.i) * F(a.j + 1, b.j), "case (b) identity");
        if (a.i < b.i && a.j == b.j) v.expect(s == X(a.j) * F(a.i, b.i - 1), "case (c) identity");
      }
  }
}

// 2
void basis_dimension(Verdict& v) {
  for (int n = 2; n <= 5; ++n) {
    const VeroneseContext ctx(n);
    for (int m = 1; m <= 10; ++m) {
      const auto basis = enum_basis(ctx, m);
      const long count = static_cast<long>(basis.size());
      v.expect(count == n * m + 1, "count != nm+1 " + ctx_of(n, m));
      v.expect(count == oracle::bivariate_monomials_of_degree(n * m), "count != monomials " + ctx_of(n, m));
      std::set<std::pair<long, long>> images;
      for (const auto& b : basis) {
        const Poly img = phi(b.to_poly(ctx), ctx);
        if (img.size() == 1) images.insert({img.leading_term().first[kX], img.leading_term().first[kY]});
      }
      v.expect(static_cast<long>(images.size()) == count, "basis images not distinct " + ctx_of(n, m));
    }
  }
}

// 3
void derivation_lifting(Verdict& v) {
  gen::Gen g(1003);
  for (int n = 2; n <= 5; ++n) {
    const VeroneseContext ctx(n);
    for (int i = 0; i < 100; ++i) {
      Poly fx = g.range(0, 5) == 0 ? kZero : gen::graded_poly(g, n, 1, 4 * n + 1, 5);
      Poly fy = g.range(0, 5) == 0 ? kZero : gen::graded_poly(g, n, 1, 4 * n + 1, 5);
      const Derivation2 d{fx, fy};
      const DerivationV dv = restrict_to_V(d, ctx);
      v.expect(lift_derivation(dv) == d, "restrict then lift " + ctx_of(n, i));
    }
    for (int i = 0; i < 50; ++i) {
      const Derivation2 d{gen::graded_poly(g, n, 1, 3 * n + 1, 4), gen::graded_poly(g, n, 1, 3 * n + 1, 4)};
      DerivationV bad = restrict_to_V(d, ctx);
      const auto k = static_cast<std::size_t>(g.range(0, n));
      bad.images[k] += gen::graded_poly(g, n, 0, 3 * n, 3);
      if (k == 0 || k == static_cast<std::size_t>(n)) {
        // The first and last images determine the lift; make the change
        // inconsistent with the others by perturbing a middle one too.
        bad.images[1] += gen::graded_poly(g, n, 0, 3 * n, 3);
      }
      bool raised = false;
      const ErrorKind kind = error_kind([&] { lift_derivation(bad); }, raised);
      v.expect(raised && kind == ErrorKind::NotADerivation, "invalid tuple accepted " + ctx_of(n, i));
    }
  }
}

Derivation2 conjugated_normal_form(gen::Gen& g, int n) {
  const Poly f = gen::y_graded(g, n, 2 * n + 1, 5);
  const auto word = gen::graded_word(g, n, 4, 1 + 2 * n, 5);
  return conjugate(Derivation2{f, kZero}, compose_factors(word));
}

// 4
void triangulation(Verdict& v) {
  gen::Gen g(1004);
  for (int n = 2; n <= 5; ++n) {
    for (int i = 0; i < 50; ++i) {
      const Derivation2 d = conjugated_normal_form(g, n);
      try {
        const TriangulationResult r = triangulate(d, n);
        v.expect(check::conjugates_to(d, r.conjugator_map(), r.normal_fy),
                 "conjugate(D, alpha) != f(y) d/dx " + ctx_of(n, i));
        v.expect(r.normal_fy.only_in(kY) && in_graded_component(r.normal_fy, n, 1), "normal form shape");
        v.expect(shear_exponents_ok(r.conjugator, n), "shear exponent not 1 mod n " + ctx_of(n, i));
      } catch (const Error& e) {
        v.expect(false, "triangulate failed " + ctx_of(n, i) + ": " + e.describe());
      }
    }
  }
  for (int t = 0; t < 25; ++t) {
    const int n = static_cast<int>(g.range(2, 5));
    const Rational a = g.coeff(5), c = g.coeff(5), d = g.coeff(5);
    const auto r = static_cast<Exponent>(n * g.range(0, 2));
    const auto N = static_cast<unsigned>(1 + n * g.range(0, 2));
    const Rational e = d / (Rational(static_cast<long>(r) + 1) * c);
    const Poly base = pow(Poly::xy_monomial(0, 1) - Poly::xy_monomial(r + 1, 0, e), N) * a;
    const Derivation2 dp{base * c, base * Poly::xy_monomial(r, 0, d)};
    try {
      const Classification cls = classify(dp, n);
      v.expect(cls.tag == CaseTag::Triangle && cls.t0 == static_cast<long>(N), "t0 != N");
      const TriangleStep step = triangle_step(dp, n, cls);
      v.expect(step.conjugated == Derivation2{Poly::xy_monomial(0, N, a * c), kZero},
               "homogeneous identity #" + std::to_string(t));
    } catch (const Error& ex) {
      v.expect(false, "homogeneous instance failed: " + ex.describe());
    }
  }
}

// 5
void automorphism_lifting(Verdict& v) {
  gen::Gen g(1005);
  for (int n = 2; n <= 5; ++n) {
    const VeroneseContext ctx(n);
    for (int i = 0; i < 100; ++i) {
      const Automorphism2 psi = compose_factors(gen::graded_word(g, n, 4, 1 + 2 * n, 4));
      const AutomorphismV av = induce_on_V(psi, ctx);
      try {
        const Automorphism2 lifted = lift_automorphism(av);
        v.expect(equal_mod_E(lifted, psi, n), "lift not equal mod E " + ctx_of(n, i) + " psi=" + show(psi));
        v.expect(induce_on_V(lifted, ctx) == av, "induce(lift(av)) != av " + ctx_of(n, i));
      } catch (const Error& e) {
        v.expect(false, "lift failed " + ctx_of(n, i) + " psi=" + show(psi) + ": " + e.describe());
      }
    }
    for (const Rational& c : {Rational(-3), Rational(-1), Rational(1, 2), Rational(2), Rational(3)}) {
      std::vector<Poly> images = ctx.generator_images();
      for (auto& p : images) p *= c.pow(n);
      const Rational canon = n % 2 == 0 && c.sign() < 0 ? -c : c;
      const Automorphism2 expected{Poly::xy_monomial(1, 0, canon), Poly::xy_monomial(0, 1, canon)};
      try {
        v.expect(lift_automorphism({ctx, images}) == expected, "scalar lift n=" + std::to_string(n));
      } catch (const Error& e) {
        v.expect(false, "scalar lift failed: " + e.describe());
      }
    }
    const Automorphism2 psi = compose_factors(gen::graded_word(g, n, 4, 1 + 2 * n, 4));
    AutomorphismV scaled = induce_on_V(psi, ctx);
    for (auto& p : scaled.images) p *= Rational(2);
    bool raised = false;
    const ErrorKind kind = error_kind([&] { lift_automorphism(scaled); }, raised);
    v.expect(raised && kind == ErrorKind::NeedsRootExtension, "irrational root not reported n=" + std::to_string(n));
  }
}

// 6
void tame_decomposition(Verdict& v) {
  gen::Gen g(1006);
  for (int i = 0; i < 200; ++i) {
    const int n = 2 + i % 4;
    const Automorphism2 a = compose_factors(gen::graded_word(g, n, 6, 30));
    try {
      const auto fs = decompose(a);
      v.expect(compose_factors(fs) == a, "decompose does not recompose " + ctx_of(n, i));
      v.expect(shear_exponents_ok(fs, n), "shear exponent not 1 mod n " + ctx_of(n, i));
    } catch (const Error& e) {
      v.expect(false, "decompose failed " + ctx_of(n, i) + ": " + e.describe());
    }
  }
  const Poly x = Poly::xy_monomial(1, 0), y = Poly::xy_monomial(0, 1);
  const std::vector<Automorphism2> degenerate{
      {x, x * y}, {x + y * y, y * y}, {x * x, y}, {x, y * y}, {x + y, x + y}, {x * y, y}, {x, kZero}};
  for (int i = 0; i < 20; ++i) {
    const Automorphism2 bad = degenerate[static_cast<std::size_t>(i) % degenerate.size()];
    const Automorphism2 psi = compose_factors(gen::graded_word(g, 2, 3, 7));
    const Automorphism2 pair = i < static_cast<int>(degenerate.size()) ? bad : compose(psi, bad);
    bool raised = false;
    const ErrorKind kind = error_kind([&] { decompose(pair); }, raised);
    v.expect(raised && kind == ErrorKind::NotAnAutomorphism, "accepted " + show(pair));
  }
}

// 7
void amalgam(Verdict& v) {
  gen::Gen g(1007);
  for (int i = 0; i < 100; ++i) {
    const int n = 2 + i % 4;
    const AmalgamWord w = gen::amalgam_word(g, n, 5);
    const Automorphism2 a = assemble(w);
    try {
      const AmalgamWord nf = normal_form(a, n);
      v.expect(nf == w, "normal form differs from the generating word " + ctx_of(n, i));
      v.expect(assemble(nf) == a, "assemble(normal_form(a)) != a " + ctx_of(n, i));

      std::vector<Automorphism2> s;
      for (const auto& f : w.factors) s.push_back(to_automorphism(f));
      s.push_back(w.head.to_automorphism());
      for (std::size_t k = 0; k + 1 < s.size(); ++k) {
        const Automorphism2 b = BElement{g.coeff(4), g.any(4), g.coeff(4)}.to_automorphism();
        s[k] = compose(s[k], b);
        s[k + 1] = compose(invert(b), s[k + 1]);
      }
      const Automorphism2 pad = compose_factors(std::vector<ElementaryFactor>{gen::linear(g, 4)});
      s.insert(s.begin() + g.range(0, static_cast<long>(s.size())), {pad, invert(pad)});
      v.expect(normal_form_of_product(s, n) == nf, "padding changed the normal form " + ctx_of(n, i));

      const Rational sign = n % 2 == 0 ? Rational(-1) : Rational(1);
      const Rational scale = g.coin() ? Rational(-1) : Rational(g.range(2, 3));
      const Automorphism2 other = assemble(gen::amalgam_word(g, n, 5));
      const Automorphism2 pairs[] = {a, compose(a, Automorphism2::scalar(scale)), compose(a, Automorphism2::scalar(sign)),
                                     other};
      for (const auto& b : pairs)
        v.expect((normal_form_mod_E(a, n) == normal_form_mod_E(b, n)) == equal_mod_E(a, b, n),
                 "mod-E separation " + ctx_of(n, i));
      v.expect(normal_form_mod_E(a, n) == normal_form_mod_E(pairs[2], n), "E-equivalent pair separated");
      v.expect(normal_form_mod_E(a, n) != normal_form_mod_E(compose(a, Automorphism2::scalar(2)), n),
               "scaled pair merged");
    } catch (const Error& e) {
      v.expect(false, "amalgam " + ctx_of(n, i) + ": " + e.describe());
    }
  }
}

// f(y) d/dx conjugated by psi, redrawn until deg(psi) * deg(f) * deg(psi^-1),
// a bound on the degree of the exponential, is at most max_degree.
Derivation2 small_conjugated_normal_form(gen::Gen& g, int n, long max_degree) {
  for (;;) {
    const Poly f = gen::y_graded(g, n, 2 * n + 1, 5);
    const Automorphism2 psi = compose_factors(gen::graded_word(g, n, 4, 1 + 2 * n, 5));
    const Automorphism2 psi_inv = invert(psi);
    const long bound = std::max(psi.fx.total_degree(), psi.fy.total_degree()) * f.total_degree() *
                       std::max(psi_inv.fx.total_degree(), psi_inv.fy.total_degree());
    if (!f.is_zero() && bound <= max_degree) return conjugate(Derivation2{f, kZero}, psi, psi_inv);
  }
}

// 8
void exponentials(Verdict& v) {
  const Poly x = Poly::xy_monomial(1, 0), y = Poly::xy_monomial(0, 1);
  v.expect(exp_lnd(Derivation2{y, kZero}) == Automorphism2{x + y, y}, "exp(y d/dx) != (x+y, y)");
  gen::Gen g(1008);
  for (int n = 2; n <= 5; ++n) {
    for (int i = 0; i < 25; ++i) {
      const Derivation2 d = small_conjugated_normal_form(g, n, 12);
      try {
        triangulate(d, n);
        const Automorphism2 e = exp_lnd(d);
        const Automorphism2 e_neg = exp_lnd(-d);
        v.expect(compose(e, e_neg) == Automorphism2::identity(), "exp(D) o exp(-D) != id " + ctx_of(n, i));
        v.expect(compose(e_neg, e) == Automorphism2::identity(), "exp(-D) o exp(D) != id " + ctx_of(n, i));
      } catch (const Error& ex) {
        v.expect(false, "exp on accepted derivation " + ctx_of(n, i) + ": " + ex.describe());
      }
    }
  }
}

// 9
void graded_power(Verdict& v) {
  gen::Gen g(1009);
  int single = 0, mixed = 0;
  for (int i = 0; i < 200; ++i) {
    const int n = 2 + i % 4;
    Poly p = i % 2 == 0 ? gen::graded_poly(g, n, static_cast<int>(g.range(0, n - 1)), 12, 4)
                        : gen::xy_poly(g, 12, 5);
    if (p.is_zero()) p = Poly::xy_monomial(1, 0) + Poly::xy_monomial(0, 0);
    // Class test done on the dense oracle, not the library's residues.
    std::set<long> classes;
    for (const auto& [k, c] : oracle::dense(p)) classes.insert((k.first + k.second) % n);
    const auto pn = oracle::power(oracle::dense(p), static_cast<unsigned>(n));
    bool zero_class = true;
    for (const auto& [k, c] : pn) zero_class = zero_class && (k.first + k.second) % n == 0;
    v.expect(oracle::same(pow(p, static_cast<unsigned>(n)), pn), "pow disagrees with oracle");
    v.expect(in_graded_component(pow(p, static_cast<unsigned>(n)), n, 0) == zero_class, "class test");
    if (classes.size() == 1) {
      ++single;
      v.expect(zero_class, "single class but p^n not in class 0: " + show(p));
    } else {
      ++mixed;
      v.expect(!zero_class, "mixed classes but p^n in class 0: " + show(p));
    }
  }
  v.expect(single >= 50 && mixed >= 50, "sample does not cover both directions");
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  void (*run)(Verdict&);
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "Groebner confluence and basis", 60, groebner},
      {2, "basis dimension", 5, basis_dimension},
      {3, "derivation lifting round trip", 30, derivation_lifting},
      {4, "triangulation", 120, triangulation},
      {5, "automorphism lifting round trip", 180, automorphism_lifting},
      {6, "tame decomposition", 60, tame_decomposition},
      {7, "amalgam normal form", 60, amalgam},
      {8, "exponentials", 30, exponentials},
      {9, "graded powers", 30, graded_power},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(v);
    } catch (const std::exception& e) {
      v.expect(false, std::string("uncaught: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.budget_s;
    const bool pass = v.ok() && in_time;
    if (!pass) ++failed;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs of %.0fs", secs, c.budget_s);
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << " " << c.name << " (" << v.checks
              << " checks, " << timing << ")";
    if (!v.ok()) std::cout << ": " << v.first_failure;
    else if (!in_time) std::cout << ": over time budget";
    std::cout << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}

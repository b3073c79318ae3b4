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

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "veronese/amalgam.hpp"
#include "veronese/expr_doc.hpp"
#include "veronese/expr_text.hpp"
#include "veronese/random.hpp"
#include "veronese/triangulation.hpp"
#include "veronese/veronese_ring.hpp"

#ifndef VERONESE_GOLDEN_DIR
#define VERONESE_GOLDEN_DIR "tests/golden/v1"
#endif

namespace veronese::cli {

namespace {

using nlohmann::json;

/// Usage problems detected after CLI11 accepted the command line.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string command;
  int n = 2;
  std::string format = "text";
  std::vector<std::string> in;
  std::vector<std::string> exprs;
  std::string dx, dy, fx, fy, gx, gy;
  std::string strategy = "greatest-outermost";
  long cap = kDefaultNilpotencyCap;
  int m = 1;
  std::uint64_t seed = 0;
  std::string kind = "automorphism";
  int count = 1;
  std::string filter;
  std::string golden_dir;
};

bool structured(const Options& o) { return o.format == "structured"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

MapDocument load(const Options& o, std::size_t index) {
  if (o.in.size() <= index) throw UsageError("missing input: give inline expressions or --in FILE");
  return read_map(parse_json(read_file(o.in[index])));
}

template <class T>
T expect(const MapDocument& doc, const char* kind) {
  if (const T* v = std::get_if<T>(&doc.value)) return *v;
  throw SchemaError("kind", std::string("expected ") + kind + ", got " + kind_name(doc.value));
}

Poly xy(const std::string& text) { return parse_poly(text, Ring::xy()); }

// Derivation from --dx/--dy or the first document; n from the document when read.
Derivation2 derivation_input(const Options& o, int& n) {
  if (!o.dx.empty() || !o.dy.empty()) {
    n = o.n;
    return {xy(o.dx.empty() ? "0" : o.dx), xy(o.dy.empty() ? "0" : o.dy)};
  }
  MapDocument doc = load(o, 0);
  n = doc.n;
  return expect<Derivation2>(doc, "derivation2");
}

Automorphism2 automorphism_input(const Options& o, int& n, bool second) {
  const std::string& ex = second ? o.gx : o.fx;
  const std::string& ey = second ? o.gy : o.fy;
  if (!ex.empty() || !ey.empty()) {
    if (ex.empty() || ey.empty()) throw UsageError(second ? "give both --gx and --gy" : "give both --fx and --fy");
    n = o.n;
    return {xy(ex), xy(ey)};
  }
  const bool inline_first = !o.fx.empty();
  MapDocument doc = load(o, second && !inline_first ? 1 : 0);
  n = doc.n;
  return expect<Automorphism2>(doc, "automorphism2");
}

std::vector<Poly> image_input(const Options& o, int& n, bool automorphism) {
  if (!o.exprs.empty()) {
    n = o.n;
    const VeroneseContext ctx(n);
    if (o.exprs.size() != static_cast<std::size_t>(n + 1))
      throw Error(ErrorKind::ArityMismatch, "expected " + std::to_string(n + 1) + " images, got " +
                                                std::to_string(o.exprs.size()));
    std::vector<Poly> out;
    for (const auto& e : o.exprs) out.push_back(xy(e));
    return out;
  }
  MapDocument doc = load(o, 0);
  n = doc.n;
  if (automorphism) return expect<AutomorphismV>(doc, "automorphismV").images;
  return expect<DerivationV>(doc, "derivationV").images;
}

std::string single_expr(const Options& o) {
  if (o.exprs.size() != 1) throw UsageError("expected exactly one expression");
  return o.exprs.front();
}

std::string pair_text(const Poly& a, const Poly& b) { return "(" + print_poly(a) + ", " + print_poly(b) + ")"; }

std::string aut_text(const Automorphism2& a) { return pair_text(a.fx, a.fy); }

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

void print_images(std::ostream& out, const std::vector<Poly>& images) {
  for (std::size_t i = 0; i < images.size(); ++i) out << "X" << i << " -> " << print_poly(images[i]) << "\n";
}

std::string factors_text(const std::vector<ElementaryFactor>& factors) {
  if (factors.empty()) return "id";
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) s += (i ? " o " : "") + describe(factors[i]);
  return s;
}

json factors_json(const std::vector<ElementaryFactor>& factors) {
  json arr = json::array();
  for (const auto& f : factors) arr.push_back(describe(f));
  return arr;
}

void print_word(std::ostream& out, const Options& o, int n, const AmalgamWord& w) {
  if (structured(o)) return print_json(out, write_word({n, w}));
  out << "head: " << aut_text(w.head.to_automorphism()) << "\n";
  out << "factors:";
  if (w.factors.empty()) out << " none";
  for (std::size_t i = 0; i < w.factors.size(); ++i) {
    out << (i ? " o " : " ");
    if (const auto* t = std::get_if<TRep>(&w.factors[i])) out << "T(" << print_poly(t->f) << ")";
    else out << "GL(" << std::get<GLRep>(w.factors[i]).mu.to_string() << ")";
  }
  out << "\n";
}

void print_aut(std::ostream& out, const Options& o, int n, const Automorphism2& a) {
  if (structured(o)) print_json(out, write_map({n, a}));
  else out << aut_text(a) << "\n";
}

RewriteStrategy strategy(const Options& o) {
  if (o.strategy == "greatest-outermost") return RewriteStrategy::GreatestOutermost;
  if (o.strategy == "smallest-innermost") return RewriteStrategy::SmallestInnermost;
  throw UsageError("unknown strategy '" + o.strategy + "'");
}

int run_selftest(const Options& o, std::ostream& out);

int run_random(const Options& o, std::ostream& out) {
  if (o.count < 0) throw UsageError("--count must be non-negative");
  const int n = o.n;
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "n must be at least 2");
  const CounterRng root(o.seed);
  for (int i = 0; i < o.count; ++i) {
    CounterRng rng = root.split(static_cast<std::uint64_t>(i));
    if (o.kind == "automorphism") {
      const auto word = random_graded_word(rng, n);
      print_aut(out, o, n, compose_factors(word));
    } else if (o.kind == "derivation") {
      const Derivation2 d = random_graded_derivation(rng, n, 2 * n + 1, 4);
      if (structured(o)) out << write_map({n, d}).dump() << "\n";
      else out << pair_text(d.fx, d.fy) << "\n";
    } else if (o.kind == "lnd") {
      const Poly f = random_graded_y_poly(rng, n, 2 * n + 1);
      RandomOptions opts;
      opts.max_factors = 4;
      opts.max_total_degree = 1 + 2 * n;
      const auto word = random_graded_word(rng, n, opts);
      const Derivation2 d = conjugate(Derivation2{f, Poly(Ring::xy())}, compose_factors(word));
      if (structured(o)) out << write_map({n, d}).dump() << "\n";
      else out << pair_text(d.fx, d.fy) << "\n";
    } else if (o.kind == "word") {
      const AmalgamWord w = random_amalgam_word(rng, n, 6, 1 + 3 * n);
      if (structured(o)) out << write_word({n, w}).dump() << "\n";
      else print_word(out, o, n, w);
    } else if (o.kind == "poly") {
      out << print_poly(random_poly(rng, Ring::generators(n), 4, 6)) << "\n";
    } else {
      throw UsageError("unknown kind '" + o.kind + "' (automorphism, derivation, lnd, word, poly)");
    }
  }
  return 0;
}

int run(const Options& o, std::ostream& out) {
  const std::string& c = o.command;
  int n = o.n;
  if (c == "selftest") return run_selftest(o, out);
  if (c == "random") return run_random(o, out);

  if (c == "reduce" || c == "phi") {
    const VeroneseContext ctx(n);
    const Poly p = parse_poly(single_expr(o), ctx.generator_ring());
    out << print_poly(c == "reduce" ? groebner_reduce(p, ctx, strategy(o)) : phi(p, ctx)) << "\n";
    return 0;
  }
  if (c == "express" || c == "member") {
    const VeroneseContext ctx(n);
    const Poly p = xy(single_expr(o));
    if (c == "member") out << (member(p, ctx) ? "true" : "false") << "\n";
    else out << print_poly(express(p, ctx)) << "\n";
    return 0;
  }
  if (c == "basis") {
    const VeroneseContext ctx(n);
    if (o.m < 0) throw UsageError("--m must be non-negative");
    const auto basis = enum_basis(ctx, o.m);
    if (structured(o)) {
      json arr = json::array();
      for (const auto& b : basis) arr.push_back(print_poly(b.to_poly(ctx)));
      print_json(out, json{{"n", n}, {"m", o.m}, {"count", basis.size()}, {"basis", arr}});
    } else {
      for (const auto& b : basis) out << print_poly(b.to_poly(ctx)) << "\n";
    }
    return 0;
  }
  if (c == "lift-derivation") {
    auto images = image_input(o, n, false);
    const Derivation2 d = lift_derivation(DerivationV{VeroneseContext(n), std::move(images)});
    if (structured(o)) print_json(out, write_map({n, d}));
    else out << "dx: " << print_poly(d.fx) << "\ndy: " << print_poly(d.fy) << "\n";
    return 0;
  }
  if (c == "restrict") {
    const Derivation2 d = derivation_input(o, n);
    const DerivationV dv = restrict_to_V(d, VeroneseContext(n));
    if (structured(o)) print_json(out, write_map({n, dv}));
    else print_images(out, dv.images);
    return 0;
  }
  if (c == "triangulate") {
    const Derivation2 d = derivation_input(o, n);
    const TriangulationResult r = triangulate(d, n);
    const Automorphism2 alpha = r.conjugator_map();
    if (structured(o)) {
      print_json(out, json{{"n", n},
                           {"kind", "triangulation"},
                           {"conjugator", {{"fx", print_poly(alpha.fx)}, {"fy", print_poly(alpha.fy)}}},
                           {"factors", factors_json(r.conjugator)},
                           {"normal_fy", print_poly(r.normal_fy)}});
    } else {
      out << "conjugator: " << aut_text(alpha) << "\nfactors: " << factors_text(r.conjugator)
          << "\nnormal form: " << print_poly(r.normal_fy) << "\n";
    }
    return 0;
  }
  if (c == "is-lnd") {
    const Derivation2 d = derivation_input(o, n);
    bool lnd = true;
    try {
      triangulate(d, n);
    } catch (const NotLocallyNilpotent&) {
      lnd = false;
    }
    out << (lnd ? "true" : "false") << "\n";
    return 0;
  }
  if (c == "exp") {
    const Derivation2 d = derivation_input(o, n);
    print_aut(out, o, n, exp_lnd(d, o.cap));
    return 0;
  }
  if (c == "decompose") {
    const auto factors = decompose(automorphism_input(o, n, false));
    if (structured(o)) print_json(out, json{{"kind", "factors"}, {"factors", factors_json(factors)}});
    else out << factors_text(factors) << "\n";
    return 0;
  }
  if (c == "invert") {
    const Automorphism2 a = automorphism_input(o, n, false);
    print_aut(out, o, n, invert(a));
    return 0;
  }
  if (c == "compose" || c == "equal-mod-e") {
    const Automorphism2 a = automorphism_input(o, n, false);
    int n2 = n;
    const Automorphism2 b = automorphism_input(o, n2, true);
    if (c == "compose") print_aut(out, o, n, compose(a, b));
    else out << (equal_mod_E(a, b, n) ? "true" : "false") << "\n";
    return 0;
  }
  if (c == "induce") {
    const Automorphism2 a = automorphism_input(o, n, false);
    const AutomorphismV av = induce_on_V(a, VeroneseContext(n));
    if (structured(o)) print_json(out, write_map({n, av}));
    else print_images(out, av.images);
    return 0;
  }
  if (c == "lift-automorphism") {
    auto images = image_input(o, n, true);
    print_aut(out, o, n, lift_automorphism(AutomorphismV{VeroneseContext(n), std::move(images)}));
    return 0;
  }
  if (c == "normal-form" || c == "normal-form-mod-e") {
    const Automorphism2 a = automorphism_input(o, n, false);
    print_word(out, o, n, c == "normal-form" ? normal_form(a, n) : normal_form_mod_E(a, n));
    return 0;
  }
  if (c == "assemble") {
    if (o.in.empty()) throw UsageError("assemble needs --in FILE with an amalgamWord document");
    const WordDocument doc = read_word(parse_json(read_file(o.in.front())));
    print_aut(out, o, doc.n, assemble(doc.word));
    return 0;
  }
  throw UsageError("unknown command '" + c + "'");
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--n", o.n, "Veronese degree n >= 2")->capture_default_str();
  sub->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
  sub->add_option("--in", o.in, "Structured input document (repeatable)");
}

struct Spec {
  const char* name;
  const char* help;
  bool exprs;
  bool derivation;
  bool automorphism;
  bool second;
};

const Spec kSpecs[] = {
    {"reduce", "Normal form of a polynomial in X0..Xn modulo the relations", true, false, false, false},
    {"phi", "Image of a polynomial in X0..Xn under Xi -> x^(n-i) y^i", true, false, false, false},
    {"express", "Write a member of V_n in the basis monomials", true, false, false, false},
    {"member", "Whether a polynomial in x, y lies in V_n", true, false, false, false},
    {"basis", "Basis monomials of X-degree m", false, false, false, false},
    {"lift-derivation", "Lift a derivation of V_n given by generator images", true, false, false, false},
    {"restrict", "Restrict an n-graded derivation to V_n", false, true, false, false},
    {"triangulate", "Conjugate an n-graded LND to f(y) d/dx", false, true, false, false},
    {"is-lnd", "Whether an n-graded derivation is locally nilpotent", false, true, false, false},
    {"exp", "Exponential of a locally nilpotent derivation", false, true, false, false},
    {"decompose", "Tame factorization of an automorphism", false, false, true, false},
    {"invert", "Inverse of an automorphism", false, false, true, false},
    {"compose", "a o b: b evaluated at the images of a", false, false, true, true},
    {"induce", "Automorphism of V_n induced by an n-graded automorphism", false, false, true, false},
    {"lift-automorphism", "n-graded automorphism inducing given generator images", true, false, false, false},
    {"normal-form", "Amalgam normal form", false, false, true, false},
    {"normal-form-mod-e", "Amalgam normal form modulo scalar roots of unity", false, false, true, false},
    {"equal-mod-e", "Whether two n-graded automorphisms agree on V_n", false, false, true, true},
    {"assemble", "Automorphism of an amalgam word document", false, false, false, false},
};

std::string join_lines(const std::string& s) {
  std::string out = s;
  std::replace(out.begin(), out.end(), '\n', ' ');
  while (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

}  // namespace

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::SchemaError:
    case ErrorKind::UnknownVariable:
    case ErrorKind::ArityMismatch:
    case ErrorKind::InvalidArgument:
      return 2;
    default:
      return 1;
  }
}

std::filesystem::path default_golden_dir() { return VERONESE_GOLDEN_DIR; }

int dispatch(const std::vector<std::string>& args, std::ostream& out) {
  Options o;
  CLI::App app{"Computations on the Veronese algebra K[x^n, x^(n-1)y, ..., y^n]", "veronese"};
  app.require_subcommand(1);
  for (const Spec& s : kSpecs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    add_common(sub, o);
    if (s.exprs) sub->add_option("exprs", o.exprs, "Inline expressions");
    if (s.derivation) {
      sub->add_option("--dx", o.dx, "Image of x");
      sub->add_option("--dy", o.dy, "Image of y");
    }
    if (s.automorphism) {
      sub->add_option("--fx", o.fx, "Image of x");
      sub->add_option("--fy", o.fy, "Image of y");
    }
    if (s.second) {
      sub->add_option("--gx", o.gx, "Image of x under the second map");
      sub->add_option("--gy", o.gy, "Image of y under the second map");
    }
    sub->callback([&o, name = std::string(s.name)] { o.command = name; });
  }
  app.get_subcommand("reduce")
      ->add_option("--strategy", o.strategy, "greatest-outermost or smallest-innermost")
      ->capture_default_str();
  app.get_subcommand("basis")->add_option("--m", o.m, "X-degree")->capture_default_str();
  app.get_subcommand("exp")->add_option("--cap", o.cap, "Iteration cap")->capture_default_str();

  CLI::App* selftest = app.add_subcommand("selftest", "Run the golden-file suite");
  selftest->add_option("--filter", o.filter, "Only cases whose name contains this text");
  selftest->add_option("--golden-dir", o.golden_dir, "Golden-file directory");
  selftest->callback([&o] { o.command = "selftest"; });

  CLI::App* random = app.add_subcommand("random", "Seeded random inputs for testing");
  add_common(random, o);
  random->add_option("--seed", o.seed, "Generator key")->capture_default_str();
  random->add_option("--kind", o.kind, "automorphism, derivation, lnd, word or poly")->capture_default_str();
  random->add_option("--count", o.count, "Number of samples")->capture_default_str();
  random->callback([&o] { o.command = "random"; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    out << "UsageError: " << join_lines(e.what()) << "\n";
    return 2;
  }

  try {
    return run(o, out);
  } catch (const Error& e) {
    out << join_lines(e.describe()) << "\n";
    return exit_code(e.kind());
  } catch (const UsageError& e) {
    out << "UsageError: " << e.what() << "\n";
    return 2;
  }
}

namespace {

struct GoldenCase {
  std::string name;
  std::vector<std::string> args;
  int exit = 0;
  std::string stdout_text;
};

GoldenCase load_case(const std::filesystem::path& path, const std::filesystem::path& dir) {
  const json j = parse_json(read_file(path.string()));
  GoldenCase g;
  g.name = path.stem().string();
  for (const auto& a : j.at("args")) {
    std::string s = a.get<std::string>();
    const std::string token = "{golden}";
    if (s.rfind(token, 0) == 0) s = dir.string() + s.substr(token.size());
    g.args.push_back(s);
  }
  g.exit = j.at("exit").get<int>();
  g.stdout_text = j.at("stdout").get<std::string>();
  return g;
}

int run_selftest(const Options& o, std::ostream& out) {
  const std::filesystem::path dir = o.golden_dir.empty() ? default_golden_dir() : std::filesystem::path(o.golden_dir);
  if (!std::filesystem::is_directory(dir)) throw UsageError("golden directory '" + dir.string() + "' not found");
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  int passed = 0;
  int failed = 0;
  for (const auto& file : files) {
    const std::string name = file.stem().string();
    if (!o.filter.empty() && name.find(o.filter) == std::string::npos) continue;
    std::string why;
    try {
      const GoldenCase g = load_case(file, dir);
      std::ostringstream got;
      const int code = dispatch(g.args, got);
      if (code != g.exit) why = "exit " + std::to_string(code) + ", expected " + std::to_string(g.exit);
      else if (got.str() != g.stdout_text) why = "output differs";
    } catch (const std::exception& e) {
      why = std::string("unreadable golden file: ") + e.what();
    }
    if (why.empty()) {
      ++passed;
    } else {
      ++failed;
      out << "FAIL " << name << ": " << why << "\n";
    }
  }
  out << "selftest: " << passed << " passed, " << failed << " failed\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

}  // namespace veronese::cli

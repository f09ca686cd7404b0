#include "pathhom/check.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <sstream>

#include "pathhom/errors.hpp"
#include "pathhom/io.hpp"

namespace pathhom {

namespace gen {

long long uniform(Rng& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

bool coin(Rng& rng, double p_true) { return std::bernoulli_distribution(p_true)(rng); }

Digraph digraph(Rng& rng, std::size_t max_vertices, double edge_prob) {
  auto n = static_cast<std::size_t>(uniform(rng, 1, static_cast<long long>(max_vertices)));
  std::vector<Digraph::Edge> edges;
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = 0; b < n; ++b)
      if (a != b && coin(rng, edge_prob)) edges.emplace_back(a, b);
  return Digraph::numbered(n, edges);
}

Scalar coefficient(Rng& rng, const Field& field, long long bound) {
  long long c = uniform(rng, 1, bound);
  return field.from_int(coin(rng, 0.5) ? c : -c);
}

DiffElement element(Rng& rng, std::size_t vertex_count, int degree, const Field& field,
                    std::size_t max_terms) {
  DiffElement e(degree);
  if (degree == 0) {
    e += DiffElement::scalar(coefficient(rng, field));
    return e;
  }
  auto terms = uniform(rng, 1, static_cast<long long>(max_terms));
  for (long long i = 0; i < terms; ++i) {
    std::vector<VertexId> raw;
    for (int k = 0; k < degree; ++k)
      raw.push_back(static_cast<VertexId>(uniform(rng, 0, static_cast<long long>(vertex_count) - 1)));
    e.add_term(raw, coefficient(rng, field));
  }
  return e;
}

Path path(Rng& rng, std::size_t vertex_count, int length) {
  Path::Storage verts;
  for (int i = 0; i <= length; ++i) {
    if (i > 0 && coin(rng, 0.25))
      verts.push_back(verts.back());
    else
      verts.push_back(static_cast<VertexId>(uniform(rng, 0, static_cast<long long>(vertex_count) - 1)));
  }
  return Path(std::move(verts));
}

PathChain chain(Rng& rng, std::size_t vertex_count, int length, const Field& field,
                std::size_t max_terms) {
  PathChain c(length);
  auto terms = uniform(rng, 1, static_cast<long long>(max_terms));
  for (long long i = 0; i < terms; ++i) c.add(path(rng, vertex_count, length), coefficient(rng, field));
  return c;
}

Matrix matrix(Rng& rng, std::size_t rows, std::size_t cols, const Field& field, double density,
              bool low_rank) {
  auto fill = [&](std::size_t r, std::size_t c) {
    Matrix m(r, c, field);
    for (std::size_t j = 0; j < c; ++j)
      for (std::size_t i = 0; i < r; ++i)
        if (coin(rng, density)) m.set(i, j, coefficient(rng, field, 5));
    return m;
  };
  if (!low_rank || rows == 0 || cols == 0) return fill(rows, cols);
  auto mid = static_cast<std::size_t>(uniform(rng, 1, static_cast<long long>(std::min(rows, cols))));
  return fill(rows, mid) * fill(mid, cols);
}

}  // namespace gen

namespace {

using gen::Rng;

class Suite {
 public:
  Suite(std::string name, const CheckOptions& opts) : opts_(opts) { report_.name = std::move(name); }

  void trial() { ++report_.trials; }
  void fail(const std::string& witness) {
    ++report_.failures;
    if (report_.counterexamples.size() < opts_.max_counterexamples)
      report_.counterexamples.push_back(witness);
  }
  SuiteReport finish() { return std::move(report_); }

 private:
  const CheckOptions& opts_;
  SuiteReport report_;
};

Rng stream(std::uint64_t seed, std::uint64_t suite) {
  std::seed_seq seq{seed, suite};
  return Rng(seq);
}

Digraph labels_for(std::size_t vertex_count) { return Digraph::numbered(vertex_count, {}); }

std::string describe(const Digraph& g) { return to_json(g).dump(); }

// d/du d/dv + d/dv d/du = 0 on single elementary paths, and the wedge
// action agrees with composing generators.
SuiteReport anticommutation(const CheckOptions& opts, const ApplyFn& act, const Field& f) {
  Suite s("anticommutation", opts);
  Rng rng = stream(opts.seed, 1);
  for (std::size_t t = 0; t < opts.trials; ++t) {
    s.trial();
    auto n = static_cast<std::size_t>(gen::uniform(rng, 1, 6));
    auto u = static_cast<VertexId>(gen::uniform(rng, 0, static_cast<long long>(n) - 1));
    auto v = static_cast<VertexId>(gen::uniform(rng, 0, static_cast<long long>(n) - 1));
    int len = static_cast<int>(gen::uniform(rng, 0, 5));
    Path p = gen::path(rng, n, len);
    // make the generators hit the path often
    if (len >= 1 && gen::coin(rng, 0.8)) {
      u = p[static_cast<std::size_t>(gen::uniform(rng, 0, len))];
      v = p[static_cast<std::size_t>(gen::uniform(rng, 0, len))];
    }
    PathChain c(p, f.one());
    auto du = DiffElement::generator(u, f.one());
    auto dv = DiffElement::generator(v, f.one());
    PathChain sum = act(du, act(dv, c)) + act(dv, act(du, c));
    Digraph names = labels_for(n);
    if (!sum.is_zero()) {
      s.fail("u=" + names.label(u) + " v=" + names.label(v) + " path=" + names.format(p) +
             ": d/du d/dv + d/dv d/du = " + sum.to_string(names));
      continue;
    }
    VertexId raw[2] = {u, v};
    auto uv = DiffElement::monomial(raw, f.one());
    PathChain composed = act(du, act(dv, c));
    PathChain direct = act(uv, c);
    if (!(composed == direct))
      s.fail("u=" + names.label(u) + " v=" + names.label(v) + " path=" + names.format(p) +
             ": (d/du ^ d/dv) acts as " + direct.to_string(names) + " but d/du d/dv gives " +
             composed.to_string(names));
  }
  return s.finish();
}

// alpha(alpha(c)) = 0 for odd alpha on the full and regular path spaces.
SuiteReport square_zero(const CheckOptions& opts, const ApplyFn& act, const Field& f) {
  Suite s("square-zero", opts);
  Rng rng = stream(opts.seed, 2);
  for (std::size_t t = 0; t < opts.trials; ++t) {
    s.trial();
    auto n = static_cast<std::size_t>(gen::uniform(rng, 1, 6));
    int deg = gen::coin(rng, 0.5) ? 1 : 3;
    DiffElement a = gen::element(rng, n, deg, f);
    PathChain c = gen::chain(rng, n, static_cast<int>(gen::uniform(rng, 0, 6)), f);
    Digraph names = labels_for(n);
    PathChain full = act(a, act(a, c));
    PathChain reg = act(a, act(a, c).regular_part()).regular_part();
    if (!full.is_zero() || !reg.is_zero() || !wedge(a, a).is_zero())
      s.fail("alpha=" + a.to_string(names) + " chain=" + c.to_string(names) +
             ": alpha(alpha(c)) = " + full.to_string(names) + ", regular part " +
             reg.to_string(names));
  }
  return s.finish();
}

// wedge(a, b) = (-1)^{|a||b|} wedge(b, a) and wedge acts as composition.
SuiteReport wedge_sign(const CheckOptions& opts, const ApplyFn& act, const Field& f) {
  Suite s("wedge-sign-law", opts);
  Rng rng = stream(opts.seed, 3);
  for (std::size_t t = 0; t < opts.trials; ++t) {
    s.trial();
    auto n = static_cast<std::size_t>(gen::uniform(rng, 1, 6));
    int da = static_cast<int>(gen::uniform(rng, 0, 3));
    int db = static_cast<int>(gen::uniform(rng, 0, 3));
    DiffElement a = gen::element(rng, n, da, f);
    DiffElement b = gen::element(rng, n, db, f);
    Digraph names = labels_for(n);
    DiffElement ab = wedge(a, b);
    DiffElement ba = wedge(b, a);
    if ((da * db) % 2 == 1) ba *= f.from_int(-1);
    if (!(ab == ba)) {
      s.fail("a=" + a.to_string(names) + " b=" + b.to_string(names) + ": a^b = " +
             ab.to_string(names) + ", sign-adjusted b^a = " + ba.to_string(names));
      continue;
    }
    PathChain c = gen::chain(rng, n, static_cast<int>(gen::uniform(rng, 0, 6)), f);
    PathChain lhs = act(ab, c);
    PathChain rhs = act(a, act(b, c));
    if (!(lhs == rhs))
      s.fail("a=" + a.to_string(names) + " b=" + b.to_string(names) + " chain=" +
             c.to_string(names) + ": (a^b)(c) = " + lhs.to_string(names) + " but a(b(c)) = " +
             rhs.to_string(names));
  }
  return s.finish();
}

long long max_degree_within(const DegreeIndex& idx, long long max_length) {
  long long n = 0;
  while (idx.path_length(n + 1) <= max_length) ++n;
  return std::max<long long>(n, 1);
}

struct RandomComplexInput {
  Digraph g;
  DiffElement alpha;
  long long p;
  int max_n;
};

RandomComplexInput random_complex_input(Rng& rng, const Field& f) {
  Digraph g = gen::digraph(rng, 6, 0.35);
  int deg = gen::coin(rng, 0.5) ? 1 : 3;
  DiffElement alpha(deg);
  if (deg == 1 && gen::coin(rng, 0.3)) {
    std::vector<Scalar> ones(g.vertex_count(), f.one());
    alpha = weighted_boundary(ones);
  } else {
    alpha = gen::element(rng, g.vertex_count(), deg, f, 6);
  }
  long long p = gen::uniform(rng, 0, 2 * deg);
  DegreeIndex idx(deg, p);
  int max_n = static_cast<int>(max_degree_within(idx, 5));
  return {std::move(g), std::move(alpha), p, max_n};
}

std::string describe(const RandomComplexInput& in) {
  return "graph=" + describe(in.g) + " alpha=" + in.alpha.to_string(in.g) +
         " p=" + std::to_string(in.p) + " max_n=" + std::to_string(in.max_n);
}

// beta alpha = alpha beta for even beta on the full and regular spaces, and on
// Omega basis chains at the regular level.
SuiteReport commuting_squares(const CheckOptions& opts, const ApplyFn& act, const Field& f) {
  Suite s("commuting-squares", opts);
  Rng rng = stream(opts.seed, 4);
  for (std::size_t t = 0; t < opts.trials; ++t) {
    s.trial();
    auto n = static_cast<std::size_t>(gen::uniform(rng, 1, 6));
    int da = gen::coin(rng, 0.5) ? 1 : 3;
    int db = gen::coin(rng, 0.5) ? 0 : 2;
    DiffElement a = gen::element(rng, n, da, f);
    DiffElement b = gen::element(rng, n, db, f);
    PathChain c = gen::chain(rng, n, static_cast<int>(gen::uniform(rng, 0, 6)), f);
    Digraph names = labels_for(n);
    PathChain ba = act(b, act(a, c));
    PathChain ab = act(a, act(b, c));
    PathChain ba_r = act(b, act(a, c).regular_part()).regular_part();
    PathChain ab_r = act(a, act(b, c).regular_part()).regular_part();
    if (!(ba == ab) || !(ba_r == ab_r)) {
      s.fail("alpha=" + a.to_string(names) + " beta=" + b.to_string(names) + " chain=" +
             c.to_string(names) + ": beta(alpha(c)) = " + ba.to_string(names) +
             ", alpha(beta(c)) = " + ab.to_string(names));
      continue;
    }

    RandomComplexInput in = random_complex_input(rng, f);
    DiffElement beta = gen::element(rng, in.g.vertex_count(), db, f);
    BuildOptions bo;
    bo.field = f;
    OmegaComplex cx = build_omega_complex(in.g, in.alpha, in.p, in.max_n, bo);
    for (const auto& d : cx.degrees()) {
      for (std::size_t i = 0; i < d.omega.dim(); ++i) {
        PathChain w = d.basis_chain(i);
        PathChain lhs = act(beta, act(in.alpha, w).regular_part()).regular_part();
        PathChain rhs = act(in.alpha, act(beta, w).regular_part()).regular_part();
        if (!(lhs == rhs))
          s.fail(describe(in) + " beta=" + beta.to_string(in.g) + " omega=" + w.to_string(in.g) +
                 ": squares differ");
      }
    }
  }
  return s.finish();
}

// alpha maps each Omega basis chain into the Omega space one degree down,
// and alpha composed with itself is zero on Omega.
SuiteReport omega_closure(const CheckOptions& opts, const Field& f) {
  Suite s("omega-closure", opts);
  Rng rng = stream(opts.seed, 5);
  for (std::size_t t = 0; t < opts.trials; ++t) {
    s.trial();
    RandomComplexInput in = random_complex_input(rng, f);
    BuildOptions bo;
    bo.field = f;
    OmegaComplex cx = build_omega_complex(in.g, in.alpha, in.p, in.max_n, bo);
    for (int n = 1; n <= cx.max_degree(); ++n) {
      const OmegaDegree& d = cx.degree(n);
      const OmegaDegree& below = cx.degree(n - 1);
      for (std::size_t i = 0; i < d.omega.dim(); ++i) {
        PathChain w = d.basis_chain(i);
        PathChain image = apply_regular(in.alpha, w);
        auto coords = coordinates_in(image, below.allowed);
        if (!coords || !below.omega.contains(*coords)) {
          s.fail(describe(in) + " degree=" + std::to_string(n) + " omega=" + w.to_string(in.g) +
                 ": alpha(omega) = " + image.to_string(in.g) + " is outside Omega");
          continue;
        }
        if (!apply_regular(in.alpha, image).is_zero())
          s.fail(describe(in) + " degree=" + std::to_string(n) + " omega=" + w.to_string(in.g) +
                 ": alpha(alpha(omega)) is nonzero");
      }
    }
  }
  return s.finish();
}

// rank + nullity = cols, kernels are annihilated, and the dense, sparse and
// automatic eliminations give the same canonical echelon form.
SuiteReport rank_nullity(const CheckOptions& opts) {
  Suite s("rank-nullity", opts);
  Rng rng = stream(opts.seed, 6);
  const Field fields[] = {Field::rational(), Field::prime(32003), Field::prime(5)};
  EliminationOptions dense, sparse;
  dense.strategy = EliminationOptions::Strategy::Dense;
  sparse.strategy = EliminationOptions::Strategy::Sparse;
  for (std::size_t t = 0; t < opts.trials; ++t) {
    s.trial();
    const Field& f = fields[t % 3];
    auto rows = static_cast<std::size_t>(gen::uniform(rng, 0, 9));
    auto cols = static_cast<std::size_t>(gen::uniform(rng, 0, 9));
    Matrix m = gen::matrix(rng, rows, cols, f, 0.4, gen::coin(rng, 0.5));
    std::ostringstream where;
    where << f.name() << " " << to_json(m).dump();
    try {
      RowEchelon d = rref(m, dense);
      RowEchelon sp = rref(m, sparse);
      Subspace ker = kernel(m);
      if (!(d.reduced == sp.reduced) || d.rank != sp.rank || d.pivots != sp.pivots) {
        s.fail(where.str() + ": dense and sparse echelon forms differ");
        continue;
      }
      if (d.rank + ker.dim() != cols) {
        s.fail(where.str() + ": rank " + std::to_string(d.rank) + " + nullity " +
               std::to_string(ker.dim()) + " != " + std::to_string(cols));
        continue;
      }
      for (const auto& v : ker.basis())
        if (!m.apply(v).empty()) {
          s.fail(where.str() + ": kernel vector not annihilated");
          break;
        }
    } catch (const ConsistencyError& e) {
      s.fail(where.str() + ": " + e.what());
    }
  }
  return s.finish();
}

// Betti numbers over Q and GF(32003) agree for small integer data.
SuiteReport field_cross_check(const CheckOptions& opts) {
  Suite s("field-cross-check", opts);
  Rng rng = stream(opts.seed, 7);
  const Field q = Field::rational();
  const Field gf = Field::prime(32003);
  for (std::size_t t = 0; t < opts.trials; ++t) {
    s.trial();
    RandomComplexInput in = random_complex_input(rng, q);
    json alpha_json = to_json(in.alpha, in.g);
    DiffElement alpha_mod = diff_element_from_json(alpha_json, in.g, gf);
    HomologyOptions hq, hp;
    hp.build.field = gf;
    auto rq = homology(in.g, in.alpha, in.p, in.max_n, hq);
    auto rp = homology(in.g, alpha_mod, in.p, in.max_n, hp);
    if (rq.betti != rp.betti || rq.omega_dims != rp.omega_dims)
      s.fail(describe(in) + ": betti over Q and GF(32003) differ");
  }
  return s.finish();
}

}  // namespace

bool CheckReport::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteReport& s) { return s.failures == 0; });
}

CheckReport run_checks(const CheckOptions& opts) {
  CheckReport r;
  r.seed = opts.seed;
  r.trials = opts.trials;
  ApplyFn act = opts.apply ? opts.apply : ApplyFn([](const DiffElement& a, const PathChain& c) {
    return apply(a, c);
  });
  const Field f = Field::rational();
  auto timed = [&](auto&& run) {
    auto start = std::chrono::steady_clock::now();
    SuiteReport s = run();
    s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.suites.push_back(std::move(s));
  };
  timed([&] { return anticommutation(opts, act, f); });
  timed([&] { return square_zero(opts, act, f); });
  timed([&] { return wedge_sign(opts, act, f); });
  timed([&] { return commuting_squares(opts, act, f); });
  timed([&] { return omega_closure(opts, f); });
  timed([&] { return rank_nullity(opts); });
  timed([&] { return field_cross_check(opts); });
  return r;
}

void print_report(std::ostream& out, const CheckReport& report) {
  out << "check seed=" << report.seed << " trials=" << report.trials << "\n";
  if (report.trials == 0) out << "warning: trials=0, every suite passes vacuously\n";
  for (const auto& s : report.suites) {
    out << s.name << ": " << s.trials << " trials, " << s.failures << " failures\n";
    for (const auto& c : s.counterexamples) out << "  counterexample: " << c << "\n";
  }
  out << "result: " << (report.passed() ? "pass" : "FAIL") << "\n";
}

}  // namespace pathhom

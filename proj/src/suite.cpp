#include "segtool/suite.hpp"

#include <functional>
#include <future>
#include <map>
#include <tuple>

#include "segtool/cancel.hpp"
#include "segtool/curves.hpp"
#include "segtool/random.hpp"

namespace segtool {

namespace {

struct Check {
  int criterion;
  std::string name;
  std::function<std::pair<bool, Json>()> run;
};

std::string pad2(int c) { return (c < 10 ? "c0" : "c") + std::to_string(c); }

Json class_json(const ChowClass& c) {
  Json out = Json::object();
  for (int i = 0; i <= c.ambient_dim(); ++i)
    if (c[i] != 0) out["h^" + std::to_string(i)] = rational_json(c[i]);
  return out;
}

Json dims_json(const DimIndexedClass& c) {
  Json out = Json::object();
  for (const auto& [d, v] : c.entries()) out["dim" + std::to_string(d)] = rational_json(v);
  return out;
}

SourceProgram program(const std::string& src) { return parse_source(src); }

std::string var_list(int n) {
  std::string s;
  for (int i = 0; i <= n; ++i) s += " x" + std::to_string(i);
  return s;
}

SchemeSpec scheme(const SourceProgram& p, const std::string& name) {
  return SchemeSpec(p.projective_ideal(name), name);
}

DimIndexedClass dims(std::map<int, Rational> e) { return DimIndexedClass(std::move(e)); }

// --- criteria ---------------------------------------------------------------

void linear_spaces(std::vector<Check>& out, std::uint64_t seed) {
  for (int n = 1; n <= 5; ++n)
    for (int k = 0; k < n; ++k)
      out.push_back(Check{1, "P" + std::to_string(k) + "-in-P" + std::to_string(n), [=] {
        std::string gens;
        for (int i = k + 1; i <= n; ++i) gens += (gens.empty() ? "x" : ", x") + std::to_string(i);
        const auto p = program("ring P vars" + var_list(n) + "; ideal L = " + gens + ";");
        const SegreResult s = segre_class(scheme(p, "L"), seed);
        const ChowClass want =
            class_mul(binom_power(-(n - k), n), ChowClass::power_of_h(n, n - k));
        return std::pair<bool, Json>(s.cls == want,
                    Json{{"class", class_json(s.cls)}, {"oracle", class_json(want)}});
      }});
}

struct Hyper {
  const char* name;
  const char* src;
  int n, d;
  std::vector<Rational> expected;  // frozen
};

void hypersurfaces(std::vector<Check>& out, std::uint64_t seed) {
  static const std::vector<Hyper> cat = {
      {"conic", "ring P vars x y z; ideal X = x*z - y^2;", 2, 2, {0, 2, -4}},
      {"nodal-cubic", "ring P vars x y z; ideal X = y^2*z - x^3 - x^2*z;", 2, 3, {0, 3, -9}},
      {"quadric-surface", "ring P vars x y z w; ideal X = x*w - y*z;", 3, 2, {0, 2, -4, 8}},
  };
  for (const auto& h : cat)
    out.push_back(Check{2, h.name, [=] {
      const auto p = program(h.src);
      const SegreResult s = segre_class(scheme(p, "X"), seed);
      const SegreResult o = regular_segre_oracle(h.n - 1, h.d, SplitBundle{{h.d}}, h.n);
      const ChowClass frozen(h.n, h.expected);
      return std::pair<bool, Json>(s.cls == o.cls && s.cls == frozen,
                  Json{{"class", class_json(s.cls)}, {"oracle", class_json(o.cls)}});
    }});
}

void twisted_cubic(std::vector<Check>& out, std::uint64_t seed) {
  out.push_back(Check{3, "twisted-cubic", [=] {
    const auto p = program("ring P vars x y z w; ideal C = x*z - y^2, x*w - y*z, y*w - z^2;");
    const SegreResult s = segre_class(scheme(p, "C"), seed);
    const ChowClass want(3, {0, 0, 3, -10});
    const std::vector<Integer> g = {1, 2, 1, 0};
    Json gj = Json::array();
    for (const auto& v : s.degrees.g) gj.push_back(rational_json(Rational(v)));
    return std::pair<bool, Json>(s.cls == want && s.degrees.g == g,
                Json{{"class", class_json(s.cls)}, {"projective_degrees", gj}});
  }});
}

CancellationInput cinput(const SourceProgram& p, const std::string& x, const std::string& y,
                         std::vector<int> degs, int dim, bool asserted,
                         const char* point = nullptr) {
  CancellationInput in{scheme(p, x), SplitBundle{std::move(degs)}, dim, asserted,
                       p.projective_ideal(y), std::nullopt};
  if (point) in.point = p.point(point);
  return in;
}

const char* kLineQuadric = "ring P vars x y z w; ideal L = z, w; ideal Q = x*w - y*z;";
const char* kPointConic =
    "ring P vars x y z; ideal pt = y, z; ideal C = x*z - y^2; point o = (1 : 0 : 0);";
const char* kNode =
    "ring P vars x y z; ideal N = x, y; ideal Y = y^2*z - x^3 - x^2*z; point o = (0 : 0 : 1);";

void cancellations(std::vector<Check>& out, std::uint64_t seed) {
  out.push_back(Check{4, "line-on-quadric", [=] {
    const auto p = program(kLineQuadric);
    const auto rep = cancel_segre(cinput(p, "L", "Q", {2}, 1, true), seed);
    // deg c_1(N_L Q) = deg c_1(N_L P^3) - deg c_1(N_Q P^3 |_L) = 2 - 2
    const int c1 = 2 - 2;
    const auto oracle = dims({{1, 1}, {0, -c1}});
    const auto want = dims({{1, 1}, {0, 0}});
    return std::pair<bool, Json>(rep.sxy == want && oracle == want,
                Json{{"sXY", dims_json(rep.sxy)}});
  }});
  out.push_back(Check{4, "point-on-conic", [=] {
    const auto p = program(kPointConic);
    const auto rep = cancel_segre(cinput(p, "pt", "C", {2}, 0, true, "o"), seed);
    const bool ok = rep.sxy == dims({{0, 1}}) && rep.direct_check == Integer(1) &&
                    rep.agrees == true;
    return std::pair<bool, Json>(ok,
                Json{{"sXY", dims_json(rep.sxy)},
                     {"direct_check", rational_json(Rational(rep.direct_check.value_or(0)))}});
  }});
}

void negative_control(std::vector<Check>& out, std::uint64_t seed) {
  out.push_back(Check{5, "node-of-nodal-cubic", [=] {
    const auto p = program(kNode);
    const auto rep = cancel_segre(cinput(p, "N", "Y", {3}, 0, false, "o"), seed);
    const bool ok = rep.sxy.at(0) == 1 && rep.direct_check == Integer(2) &&
                    rep.agrees == false && rep.sxy.at(0) != Rational(*rep.direct_check) &&
                    rep.label() == "formal pipeline value";
    return std::pair<bool, Json>(ok,
                Json{{"pipeline", rational_json(rep.sxy.at(0))},
                     {"direct_check", rational_json(Rational(rep.direct_check.value_or(0)))},
                     {"agrees", rep.agrees.value_or(true)}});
  }});
}

Polynomial sum_of_vars(const RingPtr& ring) {
  Polynomial l(ring);
  for (std::size_t i = 0; i < ring->num_vars(); ++i) l = l + Polynomial::variable(ring, i);
  return l;
}

void independence(std::vector<Check>& out, std::uint64_t seed) {
  struct Case {
    const char* name;
    const char* src;
    const char* x;
    const char* y;
    std::vector<int> degs;
    int dim;
    std::map<int, Rational> want;
  };
  static const std::vector<Case> cases = {
      {"line-quadric", kLineQuadric, "L", "Q", {2}, 1, {{1, 1}, {0, 0}}},
      {"point-conic", kPointConic, "pt", "C", {2}, 0, {{0, 1}}},
      {"conic-itself", "ring P vars x y z; ideal C = x*z - y^2;", "C", "C", {2}, 1,
       {{1, 2}, {0, 0}}},
  };
  for (const auto& c : cases)
    out.push_back(Check{6, c.name, [=] {
      const auto p = program(c.src);
      const CancellationInput a = cinput(p, c.x, c.y, c.degs, c.dim, true);
      const CancellationInput b = embed_in_hyperplane(a, sum_of_vars(p.ring));
      const auto rep = verify_independence(a, b, seed);
      const bool ok = rep.agree && rep.first.sxy == dims(c.want);
      return std::pair<bool, Json>(ok,
                  Json{{"first", dims_json(rep.first.sxy)},
                       {"second", dims_json(rep.second.sxy)},
                       {"ambients", {a.x.ambient_dim(), b.x.ambient_dim()}}});
    }});
}

void compositions(std::vector<Check>& out) {
  out.push_back(Check{7, "linear-flags", [] {
    int count = 0, bad = 0;
    for (int n = 0; n <= 5; ++n)
      for (int m = 0; m <= n; ++m)
        for (int r = 0; r <= m; ++r) {
          const auto rep = verify_composition(r, m, n, SplitBundle{std::vector<int>(n - m, 1)},
                                              SplitBundle{std::vector<int>(m - r, 1)});
          // closed form: (1+h)^{-(n-m)} h^{n-r}
          const ChowClass want =
              class_mul(binom_power(-(n - m), n), ChowClass::power_of_h(n, n - r));
          ++count;
          bad += (rep.holds && rep.lhs == want) ? 0 : 1;
        }
    return std::pair<bool, Json>(bad == 0, Json{{"cases", count}, {"failures", bad}});
  }});
  out.push_back(Check{7, "ci-flags-degree-le-2", [] {
    int count = 0, bad = 0;
    for (int n = 1; n <= 5; ++n)
      for (int m = 0; m <= n; ++m)
        for (int r = 0; r <= m; ++r) {
          const int cy = n - m, cx = m - r;
          for (int mask = 0; mask < (1 << (cy + cx)); ++mask) {
            std::vector<int> dy, dx;
            for (int j = 0; j < cy; ++j) dy.push_back(1 + ((mask >> j) & 1));
            for (int j = 0; j < cx; ++j) dx.push_back(1 + ((mask >> (cy + j)) & 1));
            const auto rep = verify_composition(r, m, n, SplitBundle{dy}, SplitBundle{dx});
            ++count;
            bad += rep.holds ? 0 : 1;
          }
        }
    return std::pair<bool, Json>(bad == 0, Json{{"cases", count}, {"failures", bad}});
  }});
}

// Pascal's triangle, independent of binomial().
std::vector<std::vector<Integer>> pascal(int rows) {
  std::vector<std::vector<Integer>> t(static_cast<std::size_t>(rows) + 1);
  for (int a = 0; a <= rows; ++a) {
    t[a].assign(static_cast<std::size_t>(a) + 1, Integer(1));
    for (int b = 1; b < a; ++b) t[a][b] = t[a - 1][b - 1] + t[a - 1][b];
  }
  return t;
}

void riemann_kempf(std::vector<Check>& out) {
  out.push_back(Check{8, "binomial-grid", [] {
    const auto tri = pascal(20);
    int count = 0, bad = 0;
    for (long g = 0; g <= 10; ++g)
      for (long gd = 0; gd <= 5 && gd <= g; ++gd)
        for (long r = 0; r <= 5; ++r)
          for (int m = 1; m <= 4; ++m) {
            const RKFInput in{g, g - gd, r, m, std::nullopt};
            const Integer want = m * tri[gd + r][r];
            ++count;
            const bool ok = rkf_multiplicity(in) == want &&
                            class_degree(generalized_rkf_class(in), static_cast<int>(r)) ==
                                Rational(want);
            bad += ok ? 0 : 1;
          }
    return std::pair<bool, Json>(bad == 0, Json{{"cases", count}, {"failures", bad}});
  }});
  out.push_back(Check{8, "proof-chain-grid", [] {
    int count = 0, bad = 0;
    for (long p = 0; p <= 10; ++p)
      for (long d = 0; d <= 2 * p; ++d)
        for (long r = 0; r <= 5; ++r) {
          if (p - d + r < 0) continue;
          for (int m : {1, 5}) {
            const RKFInput in{p, d, r, m, minimal_raise(p, d)};
            ++count;
            bad += proof_chain_check(in).holds ? 0 : 1;
          }
        }
    return std::pair<bool, Json>(bad == 0, Json{{"cases", count}, {"failures", bad}});
  }});
}

void cmk(std::vector<Check>& out) {
  out.push_back(Check{9, "table", [] {
    int bad = 0;
    for (long n = 0; n <= 4; ++n)
      for (long h0 = 1; h0 <= 5; ++h0) {
        const auto m = cmk_multiplicities(n, h0);
        bad += (m.mult_pic == (1L << n) && m.mult_theta == (1L << n) * h0) ? 0 : 1;
        // no nodes: the smooth value C(r+1, r) = h0 at d = p - 1, r = h0 - 1
        if (n == 0) bad += m.mult_theta == rkf_multiplicity({h0 + 2, h0 + 1, h0 - 1, 1, {}}) ? 0 : 1;
      }
    return std::pair<bool, Json>(bad == 0, Json{{"cases", 25}, {"failures", bad}});
  }});
}

struct Catalog {
  const char* name;
  const char* src;
  const char* ideal;
};

const std::vector<Catalog>& engine_catalog() {
  static const std::vector<Catalog> cat = {
      {"conic", "ring P vars x y z; ideal X = x*z - y^2;", "X"},
      {"nodal-cubic", "ring P vars x y z; ideal X = y^2*z - x^3 - x^2*z;", "X"},
      {"point", "ring P vars x y z; ideal X = y, z;", "X"},
      {"line-P3", "ring P vars x y z w; ideal X = z, w;", "X"},
      {"quadric-surface", "ring P vars x y z w; ideal X = x*w - y*z;", "X"},
      {"twisted-cubic", "ring P vars x y z w; ideal X = x*z - y^2, x*w - y*z, y*w - z^2;", "X"},
  };
  return cat;
}

void engine(std::vector<Check>& out, std::uint64_t seed) {
  for (const auto& c : engine_catalog())
    out.push_back(Check{10, "catalog-" + std::string(c.name), [=] {
      const auto p = program(c.src);
      const SchemeSpec x = scheme(p, c.ideal);
      const GroebnerBasis gb = buchberger(x.ideal, MonomialOrder::grevlex());
      const bool spairs = s_pairs_reduce_to_zero(gb);
      SegreOptions once;
      once.check_second_seed = false;
      const SegreResult a = segre_class(x, seed, once);
      const SegreResult b = segre_class(x, derive_seed(seed, 1), once);
      const HilbertData h = hilbert_dim_degree(x.ideal);
      const int codim = x.ambient_dim() - h.projective_dim;
      bool support = true;
      for (int i = 0; i < codim; ++i) support = support && a.cls[i] == 0;
      const bool leading = a.cls[codim] == Rational(h.degree);
      const bool ok = spairs && a.cls == b.cls && a.cls.is_integral() && support && leading;
      return std::pair<bool, Json>(ok,
                  Json{{"s_pairs", spairs},
                       {"two_seed", a.cls == b.cls},
                       {"integral", a.cls.is_integral()},
                       {"support", support},
                       {"leading_term", leading}});
    }});
  out.push_back(Check{10, "saturation-idempotent", [] {
    const auto p = program(
        "ring P vars x y z w; ideal I = x*y, x*z, x^2*w; ideal J = y, z; ideal K = x, y, z, w;");
    const Ideal i = p.projective_ideal("I");
    bool ok = true;
    for (const char* j : {"J", "K"}) {
      const Ideal s1 = saturate(i, p.projective_ideal(j));
      const Ideal s2 = saturate(s1, p.projective_ideal(j));
      ok = ok && ideal_equal(s1, s2);
    }
    return std::pair<bool, Json>(ok, Json::object());
  }});
  out.push_back(Check{10, "bezout-generic-ci", [=] {
    int count = 0, bad = 0;
    for (int n = 1; n <= 4; ++n)
      for (int c = 1; c <= n; ++c) {
        std::vector<int> degs(static_cast<std::size_t>(c), 1);
        for (;;) {
          const RingPtr ring = Ring::make("P", [&] {
            std::vector<std::string> v;
            for (int i = 0; i <= n; ++i) v.push_back("x" + std::to_string(i));
            return v;
          }());
          SeededRng rng(derive_seed(seed, static_cast<std::uint64_t>(100 * n + 10 * c + count)));
          std::vector<Polynomial> gens;
          Integer prod = 1;
          for (int d : degs) {
            gens.push_back(rng.form(ring, d));
            prod *= d;
          }
          const HilbertData h = hilbert_dim_degree(Ideal(ring, gens));
          ++count;
          bad += (h.projective_dim == n - c && h.degree == prod) ? 0 : 1;
          // next non-decreasing degree tuple in {1,2,3}^c
          int j = c - 1;
          while (j >= 0 && degs[j] == 3) --j;
          if (j < 0) break;
          ++degs[j];
          for (int k = j + 1; k < c; ++k) degs[k] = degs[j];
        }
      }
    return std::pair<bool, Json>(bad == 0, Json{{"cases", count}, {"failures", bad}});
  }});
}

}  // namespace

std::vector<SuiteItem> run_suite(std::uint64_t seed, bool parallel) {
  std::vector<Check> checks;
  linear_spaces(checks, seed);
  hypersurfaces(checks, seed);
  twisted_cubic(checks, seed);
  cancellations(checks, seed);
  negative_control(checks, seed);
  independence(checks, seed);
  compositions(checks);
  riemann_kempf(checks);
  cmk(checks);
  engine(checks, seed);

  auto guarded = [](const Check& c) {
    SuiteItem it{pad2(c.criterion) + "/" + c.name, c.criterion, false, Json::object()};
    try {
      std::tie(it.passed, it.detail) = c.run();
    } catch (const Error& e) {
      it.detail = Json{{"error", std::string(error_code_name(e.code()))}, {"message", e.what()}};
    }
    return it;
  };
  std::vector<SuiteItem> items;
  if (parallel) {
    std::vector<std::future<SuiteItem>> futs;
    for (const auto& c : checks) futs.push_back(std::async(std::launch::async, guarded, c));
    for (auto& f : futs) items.push_back(f.get());
  } else {
    for (const auto& c : checks) items.push_back(guarded(c));
  }
  std::stable_sort(items.begin(), items.end(),
                   [](const SuiteItem& a, const SuiteItem& b) { return a.name < b.name; });
  return items;
}

}  // namespace segtool

#include "verify.hpp"

#include <chrono>
#include <exception>
#include <mutex>
#include <random>
#include <thread>

#include "constructions.hpp"
#include "error.hpp"
#include "io.hpp"
#include "magnitude.hpp"
#include "planar.hpp"
#include "riesz.hpp"

namespace maglab {

void VerdictReport::add(std::string name, bool pass, json detail) {
  checks_.push_back(Check{std::move(name), pass, std::move(detail)});
}

void VerdictReport::append(const VerdictReport& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

bool VerdictReport::all_pass() const {
  for (const auto& c : checks_)
    if (!c.pass) return false;
  return true;
}

json VerdictReport::to_json(bool with_timing) const {
  json checks = json::array();
  for (const auto& c : checks_) {
    json item{{"name", c.name}, {"pass", c.pass}};
    if (!c.detail.is_null()) item["detail"] = c.detail;
    checks.push_back(std::move(item));
  }
  json out{{"subject", subject_}, {"checks", std::move(checks)}, {"all_pass", all_pass()}};
  if (with_timing) out["seconds"] = seconds_;
  return out;
}

void parallel_for(int jobs, int count, const std::function<void(int)>& fn) {
  if (jobs <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::mutex mu;
  int next = 0;
  std::exception_ptr error;
  auto worker = [&]() {
    while (true) {
      int i;
      {
        std::lock_guard<std::mutex> lock(mu);
        if (next >= count || error) return;
        i = next++;
      }
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < std::min(jobs, count); ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

namespace {

using Expected = std::vector<std::pair<Scalar, std::int64_t>>;

GenPolynomial poly_of(const Expected& terms) {
  GenPolynomial p;
  for (const auto& [e, c] : terms) p += GenPolynomial::monomial(e, Rational(c));
  return p;
}

// Displayed coefficients agree (other exponents are ignored).
bool coefficients_match(const GenPolynomial& p, const Expected& terms, json& detail) {
  bool ok = true;
  json rows = json::array();
  for (const auto& [e, c] : terms) {
    Rational got = p.coeff(e);
    rows.push_back(json{{"e", encode_scalar(e)}, {"expected", std::to_string(c)}, {"got", got.to_string()}});
    ok = ok && got == Rational(c);
  }
  detail["coefficients"] = std::move(rows);
  return ok;
}

Scalar sq(const Scalar& x) { return x * x; }

std::vector<std::vector<Scalar>> squared_matrix(const FiniteMetricSpace& x) {
  std::vector<std::vector<Scalar>> m(x.n(), std::vector<Scalar>(x.n()));
  for (int i = 0; i < x.n(); ++i)
    for (int j = 0; j < x.n(); ++j) m[i][j] = sq(x.d(i, j));
  return m;
}

template <typename F>
void guarded(VerdictReport& r, const std::string& name, F&& body) {
  try {
    body();
  } catch (const Error& e) {
    r.add(name, false, json{{"error", error_code_name(e.code())}, {"message", e.what()}});
  }
}

json triples_json(const std::vector<Triple>& v) {
  json out = json::array();
  for (const auto& t : v) out.push_back(json::array({t[0], t[1], t[2]}));
  return out;
}

struct NamedType {
  std::string name;
  CircularType type;
};

NamedType named(bool polygon, int n) {
  return polygon ? NamedType{"Delta" + std::to_string(n), polygon_type(n)}
                 : NamedType{"C" + std::to_string(n), cycle_type(n)};
}

}  // namespace

VerdictReport suite_series() {
  VerdictReport r("series");
  auto run = [&](const std::string& name, const FiniteMetricSpace& x, const Scalar& L, const Expected& expected,
                 bool exact) {
    guarded(r, name, [&] {
      GenPolynomial s = series(formal_magnitude_full(x, SolvePolicy::Elimination).value, L);
      GenPolynomial p = path_expansion(x, L);
      json detail{{"L", encode_scalar(L)}, {"series", s.to_text()}, {"path_expansion", p.to_text()}};
      bool ok = s == p;
      detail["series_equals_path_expansion"] = ok;
      if (exact) {
        bool eq = s == poly_of(expected);
        detail["equals_expected"] = eq;
        ok = ok && eq;
      } else {
        ok = coefficients_match(s, expected, detail) && ok;
      }
      r.add(name, ok, std::move(detail));
    });
  };
  Scalar one(1), two(2), three(3);
  run("series.C4", cycle_graph(4), three, {{0, 4}, {one, -8}, {two, 12}, {three, -16}}, true);
  run("series.C5", cycle_graph(5), two, {{0, 5}, {one, -10}, {two, 10}}, true);
  {
    Scalar b = delta(2, 5);
    Scalar golden = (one + sqrt_rational(5)) / two;
    r.add("series.pentagon.b", b == golden, json{{"b", encode_scalar(b)}});
    run("series.pentagon", regular_polygon(5), b + b,
        {{0, 5}, {one, -10}, {b, -10}, {two, 20}, {one + b, 40}, {b + b, 20}}, false);
  }
  {
    Scalar b = delta(2, 7), d = delta(3, 7);
    run("series.heptagon", regular_polygon(7), d + d,
        {{0, 7},
         {one, -14},
         {b, -14},
         {d, -14},
         {two, 28},
         {b + b, 28},
         {d + d, 28},
         {one + b, 56},
         {one + d, 56},
         {b + d, 56}},
        false);
  }
  guarded(r, "series.C4.isomer", [&] {
    FiniteMetricSpace x = isomer(cycle_type(4));
    GenRational m = formal_magnitude(x);
    GenPolynomial s = series(m, two);
    json detail{{"series", s.to_text()}};
    bool ok = coefficients_match(s, {{0, 4}, {one, -8}, {two, 14}}, detail);
    bool differs = !gr_equal(m, formal_magnitude(cycle_graph(4)));
    detail["differs_from_C4"] = differs;
    r.add("series.C4.isomer", ok && differs, std::move(detail));
  });
  return r;
}

namespace {

std::vector<FiniteMetricSpace> oracle_fixture_spaces() {
  std::vector<FiniteMetricSpace> v;
  for (int n = 3; n <= 8; ++n) {
    v.push_back(cycle_graph(n));
    v.push_back(regular_polygon(n));
  }
  for (int n = 4; n <= 8; ++n)
    for (bool poly : {false, true}) {
      NamedType t = named(poly, n);
      FiniteMetricSpace x = isomer(t.type);
      x.set_label((n % 2 == 0 && n >= 6 ? "mutant(" : "isomer(") + t.name + ")");
      v.push_back(std::move(x));
    }
  for (auto& x : fig2_family("a", "b", "c", Witness{{"a", Rational(1)}, {"b", Rational(2)}, {"c", Rational(3)}}))
    v.push_back(std::move(x));
  return v;
}

}  // namespace

VerdictReport suite_oracle(const SuiteOptions& options) {
  std::vector<FiniteMetricSpace> spaces = oracle_fixture_spaces();
  std::vector<VerdictReport> parts(spaces.size());
  parallel_for(options.jobs, static_cast<int>(spaces.size()), [&](int k) {
    const FiniteMetricSpace& x = spaces[k];
    std::string name = "oracle." + x.label();
    guarded(parts[k], name, [&] {
      Scalar L = x.max_distance() * Scalar(3);
      GenPolynomial s = series(formal_magnitude_full(x, SolvePolicy::Elimination).value, L, x.witness_ptr());
      GenPolynomial p = path_expansion(x, L);
      parts[k].add(name, s == p, json{{"L", encode_scalar(L)}, {"terms", s.size()}});
    });
  });
  VerdictReport r("oracle");
  for (const auto& p : parts) r.append(p);
  return r;
}

VerdictReport suite_mutants(const SuiteOptions& options) {
  struct Item {
    std::string name;
    CircularType type;
    bool nonagon;
  };
  std::vector<Item> items;
  for (int n = 6; n <= 20; n += 2)
    for (bool poly : {false, true}) {
      NamedType t = named(poly, n);
      items.push_back({t.name, t.type, false});
    }
  items.push_back({"Delta9", polygon_type(9), true});
  std::vector<VerdictReport> parts(items.size());
  parallel_for(options.jobs, static_cast<int>(items.size()), [&](int k) {
    const Item& it = items[k];
    VerdictReport& r = parts[k];
    std::string base = "mutant." + it.name;
    guarded(r, base, [&] {
      FiniteMetricSpace x = it.nonagon ? mutant_nonagon(false) : mutant_even(it.type, false);
      FiniteMetricSpace s = circular_space(it.type);
      MetricReport m = validate_metric(x);
      r.add(base + ".metric", m.ok(), json{{"triangle_violations", m.triangle.size()}});
      auto t = quasi_homog_type(x);
      r.add(base + ".row_type", t && *t == row_multiset(s, 0));
      auto iso = are_isometric(x, s, options.isometry_cap);
      r.add(base + ".non_isometric", !iso);
      r.add(base + ".magnitude", gr_equal(formal_magnitude(x), formal_magnitude(s)));
      if (x.n() <= 8)
        r.add(base + ".magnitude_by_elimination",
              gr_equal(formal_magnitude_full(x, SolvePolicy::Elimination).value,
                       formal_magnitude_full(s, SolvePolicy::Elimination).value));
      r.add(base + ".riesz", riesz_equal(x, s).equal);
    });
  });
  VerdictReport r("mutants");
  for (const auto& p : parts) r.append(p);
  return r;
}

std::vector<std::array<int, 3>> lambda_mu_violations(int k) {
  std::vector<std::array<int, 3>> bad;
  for (int l = 1; l <= 2 * k; ++l)
    for (int i = 1; i <= 2 * k + 1; ++i)
      for (int j = 1; j <= 2 * k + 1; ++j) {
        int lambda = isomer_suffix_4k1(k, l, i), mu = isomer_suffix_4k1(k, l, j);
        if (std::abs(lambda - mu) > index_abs(j - i, 2 * k + 1)) bad.push_back({l, i, j});
      }
  return bad;
}

VerdictReport suite_isomers(const SuiteOptions& options) {
  std::vector<NamedType> items;
  for (int n = 4; n <= 19; ++n)
    for (bool poly : {false, true}) items.push_back(named(poly, n));
  std::vector<VerdictReport> parts(items.size());
  parallel_for(options.jobs, static_cast<int>(items.size()), [&](int k) {
    const NamedType& it = items[k];
    VerdictReport& r = parts[k];
    std::string base = "isomer." + it.name;
    guarded(r, base, [&] {
      FiniteMetricSpace x = isomer(it.type, false);
      FiniteMetricSpace s = circular_space(it.type);
      r.add(base + ".metric", validate_metric(x).ok());
      r.add(base + ".edge_multiset", edge_multiset(x) == edge_multiset(s));
      r.add(base + ".non_isometric", !are_isometric(x, s, options.isometry_cap));
      r.add(base + ".riesz", riesz_equal(x, s).equal);
    });
  });
  VerdictReport r("isomers");
  for (const auto& p : parts) r.append(p);
  for (int k = 2; k <= 6; ++k) {
    std::string name = "isomer.lambda_mu.k" + std::to_string(k);
    guarded(r, name, [&] {
      auto bad = lambda_mu_violations(k);
      json detail = json::array();
      for (const auto& b : bad) detail.push_back(json::array({b[0], b[1], b[2]}));
      r.add(name, bad.empty(), json{{"violations", detail}});
    });
  }
  return r;
}

VerdictReport suite_fsolve(int lo, int hi, const SuiteOptions& options) {
  if (lo < 3 || hi < lo) fail(ErrorCode::OutOfRange, "fsolve range must satisfy 3 <= lo <= hi");
  int count = hi - lo + 1;
  std::vector<VerdictReport> parts(count);
  parallel_for(options.jobs, count, [&](int k) {
    int n = lo + k;
    std::string name = "fsolve.n" + std::to_string(n);
    guarded(parts[k], name, [&] {
      FnSolutionSet s = enumerate_solutions(n);
      SolutionDiff d = diff_solutions(s);
      parts[k].add(name, d.ok(n),
                   json{{"n", n},
                        {"solutions", triples_json(s.solutions)},
                        {"missing", triples_json(d.missing)},
                        {"unexpected", triples_json(d.unexpected)}});
    });
  });
  VerdictReport r("fsolve");
  for (const auto& p : parts) r.append(p);
  return r;
}

VerdictReport suite_fixtures(const SuiteOptions& options) {
  VerdictReport r("fixtures");
  auto squared_space = [](std::vector<std::vector<Scalar>> m, const std::string& label) {
    return FiniteMetricSpace(std::move(m), label);
  };
  guarded(r, "fixture.square_isomer_r3", [&] {
    Fixture f = euclidean_fixture("square_isomer_r3");
    FiniteMetricSpace x = squared_space(f.squared, f.name);
    FiniteMetricSpace iso = squared_space(squared_matrix(isomer(polygon_type(4))), "isomer(Delta4)^2");
    FiniteMetricSpace sq4 = squared_space(squared_matrix(regular_polygon(4)), "Delta4^2");
    r.add("fixture.square_isomer_r3.multiset", edge_multiset(x) == edge_multiset(iso),
          json{{"squared_multiset", encode_multiset(edge_multiset(x))}});
    r.add("fixture.square_isomer_r3.non_isometric", !are_isometric(x, sq4, options.isometry_cap));
  });
  guarded(r, "fixture.pentagon_isomer_r4", [&] {
    Fixture f = euclidean_fixture("pentagon_isomer_r4");
    FiniteMetricSpace x = squared_space(f.squared, f.name);
    FiniteMetricSpace iso = squared_space(squared_matrix(isomer(polygon_type(5))), "isomer(Delta5)^2");
    FiniteMetricSpace sq5 = squared_space(squared_matrix(regular_polygon(5)), "Delta5^2");
    r.add("fixture.pentagon_isomer_r4.multiset", edge_multiset(x) == edge_multiset(iso),
          json{{"squared_multiset", encode_multiset(edge_multiset(x))}});
    r.add("fixture.pentagon_isomer_r4.non_isometric", !are_isometric(x, sq5, options.isometry_cap));
  });
  guarded(r, "fixture.hexagon_mutant_r3", [&] {
    Fixture f = euclidean_fixture("hexagon_mutant_r3");
    FiniteMetricSpace x = squared_space(f.squared, f.name);
    FiniteMetricSpace sq6 = squared_space(squared_matrix(regular_polygon(6)), "Delta6^2");
    auto t = quasi_homog_type(x);
    r.add("fixture.hexagon_mutant_r3.row_type", t && *t == row_multiset(sq6, 0));
    r.add("fixture.hexagon_mutant_r3.non_isometric", !are_isometric(x, sq6, options.isometry_cap));
    FiniteMetricSpace mut = squared_space(squared_matrix(mutant_even(polygon_type(6))), "mutant(Delta6)^2");
    r.add("fixture.hexagon_mutant_r3.matches_mutant", are_isometric(x, mut, options.isometry_cap).has_value());
    Embedding e = cayley_menger_embeddable(f.squared);
    r.add("fixture.hexagon_mutant_r3.embeddable_dim3", e.within(3) && e.dimension == 3,
          json{{"euclidean", e.euclidean}, {"dimension", e.dimension}});
  });
  guarded(r, "fixture.hexagon_mutant_nonembeddable", [&] {
    Fixture f = euclidean_fixture("hexagon_mutant_nonembeddable");
    Embedding e = cayley_menger_embeddable(f.squared);
    r.add("fixture.hexagon_mutant_nonembeddable.not_embeddable", !e.euclidean,
          json{{"euclidean", e.euclidean}});
    const FiniteMetricSpace& x = *f.space;
    FiniteMetricSpace d6 = regular_polygon(6);
    auto t = quasi_homog_type(x);
    r.add("fixture.hexagon_mutant_nonembeddable.mutant",
          validate_metric(x).ok() && t && *t == row_multiset(d6, 0) && !are_isometric(x, d6, options.isometry_cap));
  });
  return r;
}

VerdictReport suite_planar() {
  VerdictReport r("planar");
  guarded(r, "planar.n12", [&] {
    std::set<int> all{1, 2, 3, 4, 5, 6};
    auto pts = triangle_points(12, all);
    auto config = triangle_vertices();
    config.insert(config.end(), pts.begin(), pts.end());
    int unit = 0;
    for (std::size_t a = 0; a < config.size(); ++a)
      for (std::size_t b = a + 1; b < config.size(); ++b)
        if (point_pair_distance_squared(config[a], config[b]) == Scalar(1)) ++unit;
    r.add("planar.n12.point_count", config.size() == 15, json{{"points", config.size()}});
    r.add("planar.n12.unit_pairs", unit == 6, json{{"unit_pairs", unit}});
  });
  guarded(r, "planar.n9", [&] {
    auto pts = triangle_points(9, {2, 3, 4});
    Scalar d2 = delta(2, 9);
    Scalar near = sq(d2), far = sq(Scalar(1) + d2);
    bool ok = pts.size() == 6;
    int unit = 0;
    for (std::size_t a = 0; a < pts.size(); ++a) {
      int n_near = 0, n_far = 0;
      for (std::size_t b = 0; b < pts.size(); ++b) {
        if (a == b) continue;
        Scalar d = point_pair_distance_squared(pts[a], pts[b]);
        n_near += d == near;
        n_far += d == far;
        unit += d == Scalar(1);
      }
      ok = ok && n_near == 1 && n_far == 1;
    }
    r.add("planar.n9.pair_distances", ok, json{{"points", pts.size()}});
    r.add("planar.n9.no_new_unit_pairs", unit == 0);
  });
  for (int n : {9, 12, 15}) {
    std::string name = "planar.extended_edges.n" + std::to_string(n);
    guarded(r, name, [&] {
      int t = n / 3;
      auto pts = triangle_points(n, {t - 1, t, t + 1});
      auto verts = triangle_vertices();
      Scalar dn = delta(t - 1, n), df = delta(t + 1, n);
      bool ok = pts.size() == 6 && Scalar(1) + dn == df;
      for (const auto& p : pts) {
        // Nearest vertex at delta_{t-1}; the farthest one lies straight behind it.
        int near = -1, farv = -1;
        for (int v = 0; v < 3; ++v) {
          Scalar d = point_pair_distance_squared(p, verts[v]);
          if (d == sq(dn)) near = v;
          if (d == sq(df)) farv = v;
        }
        ok = ok && near >= 0 && farv >= 0;
        if (near >= 0 && farv >= 0) {
          // Collinear: |P far| = |P near| + |near far| = delta_{t-1} + 1.
          ok = ok && sq(dn + Scalar(1)) == point_pair_distance_squared(p, verts[farv]);
          Triple s = p.dist_indices;
          std::sort(s.begin(), s.end());
          ok = ok && s == Triple{t - 1, t, t + 1};
        }
      }
      r.add(name, ok, json{{"points", pts.size()}});
    });
  }
  return r;
}

namespace {

struct ScalarSampler {
  std::mt19937_64 rng;
  explicit ScalarSampler(std::uint64_t seed) : rng(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
  Rational rational() { return Rational(uniform(-20, 20), uniform(1, 9)); }
  Scalar cyclotomic(int n) {
    Scalar acc(rational());
    for (int i = 2; i <= n / 2; ++i) acc += Scalar(rational()) * delta(i, n);
    return acc;
  }
  Scalar formal() {
    std::map<std::string, Rational> syms{{"a", rational()}, {"b", rational()}, {"c", rational()}};
    return Scalar(FormalScalar(rational(), std::move(syms)));
  }
};

}  // namespace

VerdictReport suite_properties(const SuiteOptions& options) {
  VerdictReport r("properties");
  ScalarSampler s(options.seed);
  const int cases = options.property_cases;
  guarded(r, "property.field_axioms.rational", [&] {
    int bad = 0;
    for (int c = 0; c < cases; ++c) {
      Scalar x(s.rational()), y(s.rational()), z(s.rational());
      bad += !((x + y) + z == x + (y + z)) || !((x * y) * z == x * (y * z)) || !(x * (y + z) == x * y + x * z);
      if (!x.is_zero()) bad += !(x * (Scalar(1) / x) == Scalar(1));
      if (!x.is_zero() && !y.is_zero()) bad += sign(x * y) != sign(x) * sign(y);
    }
    r.add("property.field_axioms.rational", bad == 0, json{{"cases", cases}, {"failures", bad}});
  });
  guarded(r, "property.field_axioms.cyclotomic", [&] {
    const int conductors[] = {5, 7, 8, 9, 12};
    int bad = 0;
    for (int c = 0; c < cases; ++c) {
      int n = conductors[s.uniform(0, 4)];
      Scalar x = s.cyclotomic(n), y = s.cyclotomic(n), z = s.cyclotomic(n);
      bad += !((x + y) + z == x + (y + z)) || !((x * y) * z == x * (y * z)) || !(x * (y + z) == x * y + x * z);
      if (!x.is_zero()) bad += !(x * (Scalar(1) / x) == Scalar(1));
      if (!x.is_zero() && !y.is_zero()) bad += sign(x * y) != sign(x) * sign(y);
    }
    r.add("property.field_axioms.cyclotomic", bad == 0, json{{"cases", cases}, {"failures", bad}});
  });
  guarded(r, "property.vector_axioms.formal", [&] {
    Witness w{{"a", Rational(1)}, {"b", Rational(2)}, {"c", Rational(3)}};
    int bad = 0;
    for (int c = 0; c < cases; ++c) {
      Scalar x = s.formal(), y = s.formal(), z = s.formal();
      Scalar k(s.rational());
      bad += !((x + y) + z == x + (y + z)) || !(x + y == y + x) || !(k * (x + y) == k * x + k * y) ||
             !((x - y) + y == x);
      if (!k.is_zero()) bad += sign(k * x, &w) != sign(k) * sign(x, &w);
    }
    r.add("property.vector_axioms.formal", bad == 0, json{{"cases", cases}, {"failures", bad}});
  });
  guarded(r, "property.index_abs", [&] {
    int bad = 0, checked = 0;
    for (int n = 1; n <= 50; ++n)
      for (int i = -3 * n; i <= 3 * n; ++i) {
        int v = index_abs(i, n);
        int brute = std::abs(i);
        for (int l = -4; l <= 4; ++l) brute = std::min(brute, std::abs(i - l * n));
        bad += v != brute || v < 0 || v > n / 2 || index_abs(-i, n) != v;
        for (int l = -3; l <= 3; ++l) bad += index_abs(i + static_cast<long long>(l) * n, n) != v;
        ++checked;
      }
    r.add("property.index_abs", bad == 0, json{{"cases", checked}, {"failures", bad}});
  });
  guarded(r, "property.circular_strict", [&] {
    int bad = 0, checked = 0;
    for (int n = 3; n <= 30; ++n) {
      CircularType t = polygon_type(n);
      for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) {
          ++checked;
          if (compare(t.at(i) + t.at(j), t.at(i + j)) <= 0) ++bad;
        }
    }
    r.add("property.circular_strict", bad == 0, json{{"cases", checked}, {"failures", bad}});
  });
  guarded(r, "property.weighting_residual", [&] {
    int bad = 0, solves = 0;
    for (const auto& x : oracle_fixture_spaces())
      for (SolvePolicy p : {SolvePolicy::Auto, SolvePolicy::Elimination}) {
        FormalMagnitude m = formal_magnitude_full(x, p);
        ++solves;
        for (const auto& e : weighting_residual(x, m)) bad += !e.is_zero();
      }
    for (int n = 10; n <= 20; n += 2) {
      FiniteMetricSpace x = mutant_even(polygon_type(n), false);
      FormalMagnitude m = formal_magnitude_full(x);
      ++solves;
      for (const auto& e : weighting_residual(x, m)) bad += !e.is_zero();
    }
    r.add("property.weighting_residual", bad == 0, json{{"solves", solves}, {"nonzero_entries", bad}});
  });
  return r;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"series",   "oracle", "mutants",    "isomers",
                                              "fsolve",   "fixtures", "planar", "properties"};
  return names;
}

VerdictReport verify_suite(const std::string& name, const SuiteOptions& options) {
  auto start = std::chrono::steady_clock::now();
  VerdictReport r(name);
  if (name == "series") r = suite_series();
  else if (name == "oracle") r = suite_oracle(options);
  else if (name == "mutants") r = suite_mutants(options);
  else if (name == "isomers") r = suite_isomers(options);
  else if (name == "fsolve") r = suite_fsolve(6, 30, options);
  else if (name == "fixtures") r = suite_fixtures(options);
  else if (name == "planar") r = suite_planar();
  else if (name == "properties") r = suite_properties(options);
  else if (name == "all") {
    for (const auto& s : suite_names()) r.append(verify_suite(s, options));
  } else {
    fail(ErrorCode::UnknownName, "unknown suite '" + name + "'");
  }
  r.set_seconds(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  return r;
}

VerdictReport compare_spaces(const FiniteMetricSpace& a, const FiniteMetricSpace& b, const CompareFlags& flags,
                             int isometry_cap) {
  VerdictReport r(a.label() + " vs " + b.label());
  if (flags.magnitude) {
    GenRational ma = formal_magnitude(a), mb = formal_magnitude(b);
    r.add("magnitude", gr_equal(ma, mb),
          json{{"a", encode_genrational(ma)}, {"b", encode_genrational(mb)}});
  }
  if (flags.riesz) {
    RieszComparison c = riesz_equal(a, b);
    json diff = json::array();
    for (const auto& [v, ca, cb] : c.diff) diff.push_back(json{{"value", encode_scalar(v)}, {"a", ca}, {"b", cb}});
    r.add("riesz", c.equal, json{{"diff", diff}});
  }
  if (flags.isometry) {
    auto perm = are_isometric(a, b, isometry_cap);
    r.add("isometry", perm.has_value(), perm ? json{{"permutation", *perm}} : json(nullptr));
  }
  return r;
}

VerdictReport identification_report(int n) {
  if (n < 3) fail(ErrorCode::OutOfRange, "report needs n >= 3");
  if (n > kFsolveCap) fail(ErrorCode::TooLarge, "report is capped at n=" + std::to_string(kFsolveCap));
  VerdictReport r("n=" + std::to_string(n));
  guarded(r, "polygon.circular", [&] {
    json type = json::array();
    for (const auto& d : polygon_type(n).d) type.push_back(encode_scalar(d));
    r.add("polygon.circular", validate_metric(regular_polygon(n)).ok(), json{{"type", type}});
  });
  bool mutant = false, iso = false;
  if ((n % 2 == 0 && n >= 6) || n == 9) {
    for (bool poly : {true, false}) {
      if (n == 9 && !poly) continue;
      NamedType t = named(poly, n);
      std::string name = "mutant." + t.name;
      guarded(r, name, [&] {
        FiniteMetricSpace x = n == 9 ? mutant_nonagon(true) : mutant_even(t.type, true);
        r.add(name, true, json{{"points", x.n()}});
        if (poly) mutant = true;
      });
    }
  }
  if (n >= 4) {
    for (bool poly : {true, false}) {
      NamedType t = named(poly, n);
      std::string name = "isomer." + t.name;
      guarded(r, name, [&] {
        FiniteMetricSpace x = isomer(t.type, true);
        r.add(name, true, json{{"points", x.n()}});
        if (poly) iso = true;
      });
    }
  }
  guarded(r, "fsolve", [&] {
    FnSolutionSet s = enumerate_solutions(n);
    SolutionDiff d = diff_solutions(s);
    r.add("fsolve", d.ok(n),
          json{{"solutions", triples_json(s.solutions)},
               {"missing", triples_json(d.missing)},
               {"unexpected", triples_json(d.unexpected)}});
  });
  r.add("conclusion", true,
        json{{"magnitude_identifies_polygon", mutant ? "no: a verified mutant shares its formal magnitude"
                                                     : "not refuted by any construction here"},
             {"riesz_identifies_polygon", iso ? "no: a verified isomer shares its Riesz energy"
                                              : "not refuted by any construction here"}});
  return r;
}

}  // namespace maglab

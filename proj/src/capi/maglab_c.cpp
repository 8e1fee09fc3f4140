#include "maglab/maglab.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "constructions.hpp"
#include "error.hpp"
#include "io.hpp"
#include "magnitude.hpp"
#include "planar.hpp"
#include "riesz.hpp"
#include "verify.hpp"

struct maglab_space {
  maglab::FiniteMetricSpace space;
};

namespace {

using maglab::Error;
using maglab::ErrorCode;
using maglab::json;

thread_local std::string g_last_error = "null";

maglab_status to_status(ErrorCode code) { return static_cast<maglab_status>(static_cast<int>(code) + 1); }

maglab_status record(maglab_status status, const std::string& message) {
  g_last_error = json{{"error", maglab_status_name(status)}, {"message", message}}.dump();
  return status;
}

template <typename F>
maglab_status guard(F&& body) {
  try {
    body();
    return MAGLAB_OK;
  } catch (const Error& e) {
    return record(to_status(e.code()), e.what());
  } catch (const json::exception& e) {
    return record(MAGLAB_PARSE, e.what());
  } catch (const std::bad_alloc&) {
    return record(MAGLAB_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return record(MAGLAB_INTERNAL, e.what());
  }
}

void require(const void* p, const char* what) {
  if (!p) maglab::fail(ErrorCode::InvalidArgument, std::string(what) + " must not be null");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(const json& j, char** out) {
  require(out, "out");
  *out = dup(j.dump());
}

json parse(const char* text) {
  require(text, "text");
  return json::parse(text);
}

// Canonical scalar text: a rational "p/q" or the JSON form.
maglab::Scalar parse_scalar(const char* text) {
  require(text, "scalar");
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) j = std::string(text);
  return maglab::decode_scalar(j);
}

maglab::SuiteOptions suite_options(const maglab_verify_options* o) {
  maglab::SuiteOptions s;
  if (!o) return s;
  s.seed = o->seed;
  s.jobs = o->jobs;
  s.property_cases = o->property_cases;
  s.isometry_cap = o->isometry_cap;
  return s;
}

maglab_space* wrap(maglab::FiniteMetricSpace x) { return new maglab_space{std::move(x)}; }

const char* method_name(maglab::SolveMethod m) {
  return m == maglab::SolveMethod::Elimination ? "elimination" : "constant_weighting";
}

}  // namespace

extern "C" {

const char* maglab_version(void) { return "1.0.0"; }

const char* maglab_status_name(maglab_status status) {
  if (status == MAGLAB_OK) return "Ok";
  if (status < MAGLAB_OK || status > MAGLAB_INTERNAL) return "Unknown";
  return maglab::error_code_name(static_cast<ErrorCode>(static_cast<int>(status) - 1));
}

const char* maglab_last_error(void) { return g_last_error.c_str(); }

void maglab_string_free(char* s) { std::free(s); }

maglab_status maglab_set_conductor_cap(int cap) {
  return guard([&] { maglab::set_conductor_cap(cap); });
}

int maglab_get_conductor_cap(void) { return maglab::conductor_cap(); }

const char* maglab_suite_name(int index) {
  const auto& names = maglab::suite_names();
  return index >= 0 && index < static_cast<int>(names.size()) ? names[index].c_str() : nullptr;
}

const char* maglab_fixture_name(int index) {
  const auto& names = maglab::fixture_names();
  return index >= 0 && index < static_cast<int>(names.size()) ? names[index].c_str() : nullptr;
}

maglab_status maglab_type_json(const char* family, int n, char** out) {
  return guard([&] {
    require(family, "family");
    std::string f = family;
    if (f == "cycle") emit(maglab::encode_type(maglab::cycle_type(n)), out);
    else if (f == "polygon") emit(maglab::encode_type(maglab::polygon_type(n)), out);
    else maglab::fail(ErrorCode::UnknownName, "unknown family '" + f + "'");
  });
}

maglab_status maglab_space_build(const char* kind, const char* type_json, int m, maglab_space** out) {
  return guard([&] {
    require(kind, "kind");
    require(out, "out");
    std::string k = kind;
    maglab::CircularType t = maglab::decode_type(parse(type_json));
    if (k == "circular") *out = wrap(maglab::circular_space(t));
    else if (k == "restricted") *out = wrap(maglab::restricted_polygon(t, m));
    else if (k == "mutant") {
      if (t.n % 2 == 1) {
        if (t != maglab::polygon_type(9))
          maglab::fail(ErrorCode::BadN, "odd mutants are only constructed for the regular 9-gon");
        *out = wrap(maglab::mutant_nonagon());
      } else {
        *out = wrap(maglab::mutant_even(t));
      }
    } else if (k == "isomer") *out = wrap(maglab::isomer(t));
    else maglab::fail(ErrorCode::UnknownName, "unknown space kind '" + k + "'");
  });
}

maglab_status maglab_space_fig2(const char* a, const char* b, const char* c, const char* witness_json, int index,
                                maglab_space** out) {
  return guard([&] {
    require(a, "a");
    require(b, "b");
    require(c, "c");
    require(out, "out");
    if (index < 0 || index > 2) maglab::fail(ErrorCode::OutOfRange, "fig2 index must be 0, 1 or 2");
    std::optional<maglab::Witness> w;
    if (witness_json) w = maglab::decode_witness(parse(witness_json));
    auto family = maglab::fig2_family(a, b, c, w);
    *out = wrap(family[index]);
  });
}

maglab_status maglab_space_from_json(const char* text, maglab_space** out) {
  return guard([&] {
    require(out, "out");
    *out = wrap(maglab::decode_space(parse(text)));
  });
}

maglab_status maglab_space_to_json(const maglab_space* space, char** out) {
  return guard([&] {
    require(space, "space");
    emit(maglab::encode_space(space->space), out);
  });
}

int maglab_space_size(const maglab_space* space) { return space ? space->space.n() : 0; }

void maglab_space_free(maglab_space* space) { delete space; }

maglab_status maglab_space_validate(const maglab_space* space, char** out, int* ok) {
  return guard([&] {
    require(space, "space");
    maglab::MetricReport r = maglab::validate_metric(space->space);
    json pairs = json::array(), nonpos = json::array(), tri = json::array();
    for (const auto& [i, j] : r.asymmetric) pairs.push_back(json::array({i, j}));
    for (const auto& [i, j] : r.nonpositive) nonpos.push_back(json::array({i, j}));
    for (const auto& t : r.triangle) tri.push_back(json::array({t[0], t[1], t[2]}));
    emit(json{{"ok", r.ok()},
              {"asymmetric", pairs},
              {"nonzero_diagonal", r.nonzero_diagonal},
              {"nonpositive", nonpos},
              {"triangle", tri}},
         out);
    if (ok) *ok = r.ok();
  });
}

maglab_status maglab_fixture_json(const char* name, char** out) {
  return guard([&] {
    require(name, "name");
    maglab::Fixture f = maglab::euclidean_fixture(name);
    auto space = maglab::fixture_space(f);
    json j = space ? maglab::encode_space(*space) : json{{"n", f.squared.size()}, {"label", f.name}};
    json sq = json::array();
    for (const auto& row : f.squared) {
      json r = json::array();
      for (const auto& x : row) r.push_back(maglab::encode_scalar(x));
      sq.push_back(std::move(r));
    }
    j["squared"] = std::move(sq);
    if (f.points) {
      json pts = json::array();
      for (const auto& p : f.points->points) {
        json r = json::array();
        for (const auto& x : p) r.push_back(maglab::encode_scalar(x));
        pts.push_back(std::move(r));
      }
      j["points"] = std::move(pts);
    }
    maglab::Embedding e = maglab::cayley_menger_embeddable(f.squared);
    j["embedding"] = json{{"euclidean", e.euclidean}, {"dimension", e.euclidean ? json(e.dimension) : json(nullptr)}};
    emit(j, out);
  });
}

maglab_status maglab_magnitude(const maglab_space* space, const char* series_L, unsigned flags, char** out) {
  return guard([&] {
    require(space, "space");
    const maglab::FiniteMetricSpace& x = space->space;
    maglab::Scalar L = series_L ? parse_scalar(series_L) : x.max_distance() * maglab::Scalar(3);
    maglab::FormalMagnitude m = maglab::formal_magnitude_full(x);
    maglab::GenPolynomial s = maglab::series(m.value, L, x.witness_ptr());
    json j{{"formal_magnitude", maglab::encode_genrational(m.value)},
           {"L", maglab::encode_scalar(L)},
           {"series", maglab::encode_genpoly(s)},
           {"method", method_name(m.method)}};
    if (flags & MAGLAB_MAGNITUDE_CLOSED_FORM) {
      auto type = maglab::quasi_homog_type(x);
      if (!type) {
        j["closed_form"] = json{{"quasi_homogeneous", false}};
      } else {
        maglab::GenRational c = maglab::formal_magnitude_qh(*type, x.n());
        j["closed_form"] = json{{"quasi_homogeneous", true},
                                {"formal_magnitude", maglab::encode_genrational(c)},
                                {"agrees", maglab::gr_equal(c, m.value)}};
      }
    }
    if (flags & MAGLAB_MAGNITUDE_PATH_ORACLE) {
      maglab::GenPolynomial p = maglab::path_expansion(x, L);
      j["path_expansion"] = json{{"series", maglab::encode_genpoly(p)}, {"agrees", p == s}};
    }
    emit(j, out);
  });
}

maglab_status maglab_magnitude_at(const maglab_space* space, const char* t, int bits, char** out) {
  return guard([&] {
    require(space, "space");
    require(t, "t");
    maglab::Rational tr = maglab::Rational::parse(t);
    maglab::Interval v = maglab::magnitude_at(space->space, tr, bits);
    emit(json{{"t", tr.to_string()}, {"bits", bits}, {"enclosure", v.to_string(30)}}, out);
  });
}

maglab_status maglab_riesz(const maglab_space* space, int z, char** out) {
  return guard([&] {
    require(space, "space");
    maglab::Scalar v = maglab::riesz_at(space->space, z);
    json j{{"z", z}, {"value", maglab::encode_scalar(v)}};
    if (!v.is_formal() || space->space.witness_ptr())
      j["enclosure"] = maglab::approx(v, 64, space->space.witness_ptr()).to_string(20);
    emit(j, out);
  });
}

maglab_status maglab_compare(const maglab_space* a, const maglab_space* b, unsigned flags, int isometry_cap,
                             char** out, int* all_pass) {
  return guard([&] {
    require(a, "a");
    require(b, "b");
    maglab::CompareFlags f;
    f.magnitude = flags & MAGLAB_COMPARE_MAGNITUDE;
    f.riesz = flags & MAGLAB_COMPARE_RIESZ;
    f.isometry = flags & MAGLAB_COMPARE_ISOMETRY;
    if (!f.magnitude && !f.riesz && !f.isometry) maglab::fail(ErrorCode::InvalidArgument, "no comparison requested");
    maglab::VerdictReport r =
        maglab::compare_spaces(a->space, b->space, f, isometry_cap > 0 ? isometry_cap : maglab::kIsometryCap);
    emit(r.to_json(), out);
    if (all_pass) *all_pass = r.all_pass();
  });
}

maglab_status maglab_fsolve(int n, char** out, int* all_pass) {
  return guard([&] {
    maglab::FnSolutionSet s = maglab::enumerate_solutions(n);
    maglab::SolutionDiff d = maglab::diff_solutions(s);
    auto triples = [](const std::vector<maglab::Triple>& v) {
      json a = json::array();
      for (const auto& t : v) a.push_back(json::array({t[0], t[1], t[2]}));
      return a;
    };
    emit(json{{"n", n},
              {"solutions", triples(s.solutions)},
              {"expected", triples(maglab::expected_solutions(n))},
              {"missing", triples(d.missing)},
              {"unexpected", triples(d.unexpected)},
              {"pass", d.ok(n)}},
         out);
    if (all_pass) *all_pass = d.ok(n);
  });
}

void maglab_verify_options_init(maglab_verify_options* options) {
  if (!options) return;
  maglab::SuiteOptions d;
  options->seed = d.seed;
  options->jobs = d.jobs;
  options->property_cases = d.property_cases;
  options->isometry_cap = d.isometry_cap;
  options->timing = 0;
}

maglab_status maglab_verify(const char* suite, const maglab_verify_options* options, char** out, int* all_pass) {
  return guard([&] {
    require(suite, "suite");
    maglab::VerdictReport r = maglab::verify_suite(suite, suite_options(options));
    emit(r.to_json(options && options->timing), out);
    if (all_pass) *all_pass = r.all_pass();
  });
}

maglab_status maglab_verify_fsolve(int lo, int hi, const maglab_verify_options* options, char** out, int* all_pass) {
  return guard([&] {
    maglab::VerdictReport r = maglab::suite_fsolve(lo, hi, suite_options(options));
    emit(r.to_json(false), out);
    if (all_pass) *all_pass = r.all_pass();
  });
}

maglab_status maglab_report(int n, char** out, int* all_pass) {
  return guard([&] {
    maglab::VerdictReport r = maglab::identification_report(n);
    emit(r.to_json(), out);
    if (all_pass) *all_pass = r.all_pass();
  });
}

}  // extern "C"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>

#include "maglab/maglab.h"

using json = nlohmann::json;

namespace {

struct Failure {
  std::string code;
  std::string message;
};

[[noreturn]] void fail(std::string code, std::string message) { throw Failure{std::move(code), std::move(message)}; }

void check(maglab_status s) {
  if (s == MAGLAB_OK) return;
  json e = json::parse(maglab_last_error());
  fail(e.value("error", "Unknown"), e.value("message", ""));
}

std::string take(char* s) {
  std::string out(s);
  maglab_string_free(s);
  return out;
}

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) fail("Io", "cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

using SpacePtr = std::unique_ptr<maglab_space, void (*)(maglab_space*)>;

SpacePtr load_space(const std::string& path) {
  maglab_space* s = nullptr;
  check(maglab_space_from_json(read_file(path).c_str(), &s));
  return SpacePtr(s, maglab_space_free);
}

std::string space_json(const maglab_space* s) {
  char* out = nullptr;
  check(maglab_space_to_json(s, &out));
  return take(out);
}

std::string exponent_text(const json& e) { return e.is_string() ? e.get<std::string>() : e.dump(); }

std::string poly_text(const json& terms) {
  if (terms.empty()) return "0";
  std::string s;
  for (const auto& t : terms) {
    std::string c = t["c"].get<std::string>();
    bool neg = c[0] == '-';
    if (neg) c.erase(0, 1);
    if (s.empty()) s = neg ? "-" : "";
    else s += neg ? " - " : " + ";
    std::string e = exponent_text(t["e"]);
    if (e == "0") s += c;
    else s += (c == "1" ? "" : c + "*") + "q^{" + e + "}";
  }
  return s;
}

struct Output {
  std::string format = "json";
  std::string file;

  void write(const json& j) const {
    std::string text = format == "text" ? render(j) : j.dump(2) + "\n";
    if (file.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(file);
    if (!out) fail("Io", "cannot write '" + file + "'");
    out << text;
  }

  static std::string render(const json& j) {
    std::ostringstream os;
    if (j.contains("checks")) {
      int passed = 0;
      for (const auto& c : j["checks"]) {
        bool p = c["pass"].get<bool>();
        passed += p;
        os << (p ? "PASS " : "FAIL ") << c["name"].get<std::string>() << "\n";
      }
      os << passed << "/" << j["checks"].size() << " checks passed";
      if (j.contains("seconds")) os << " in " << j["seconds"].get<double>() << " s";
      os << "\n";
    } else if (j.contains("formal_magnitude")) {
      const auto& m = j["formal_magnitude"];
      os << "m(q) = (" << poly_text(m["num"]) << ") / (" << poly_text(m["den"]) << ")\n";
      os << "series to q^{" << exponent_text(j["L"]) << "}: " << poly_text(j["series"]) << "\n";
      if (j.contains("closed_form") && j["closed_form"].contains("agrees"))
        os << "closed form agrees: " << j["closed_form"]["agrees"].get<bool>() << "\n";
      if (j.contains("path_expansion"))
        os << "path expansion agrees: " << j["path_expansion"]["agrees"].get<bool>() << "\n";
    } else if (j.contains("solutions")) {
      os << "n=" << j["n"] << " solutions " << j["solutions"].dump() << " missing " << j["missing"].dump()
         << " unexpected " << j["unexpected"].dump() << "\n";
    } else {
      os << j.dump(2) << "\n";
    }
    return os.str();
  }
};

std::pair<int, int> parse_range(const std::string& r) {
  auto dots = r.find("..");
  if (dots == std::string::npos) fail("Usage", "range must look like LO..HI");
  try {
    return {std::stoi(r.substr(0, dots)), std::stoi(r.substr(dots + 2))};
  } catch (const std::exception&) {
    fail("Usage", "range must look like LO..HI");
  }
}

void apply_conductor_cap() {
  const char* env = std::getenv("MAGLAB_CONDUCTOR_CAP");
  if (!env) return;
  char* end = nullptr;
  long cap = std::strtol(env, &end, 10);
  if (*env == '\0' || *end != '\0' || cap <= 0 || cap > 1 << 20)
    fail("InvalidArgument", "MAGLAB_CONDUCTOR_CAP must be a positive integer");
  check(maglab_set_conductor_cap(static_cast<int>(cap)));
}

void print_error(const std::string& code, const std::string& message) {
  std::cerr << json{{"error", code}, {"message", message}}.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact magnitude and Riesz energy toolkit for finite metric spaces", "magctl"};
  app.require_subcommand(1);
  app.fallthrough();

  Output output;
  unsigned hw = std::thread::hardware_concurrency();
  int jobs = hw == 0 ? 1 : static_cast<int>(hw);
  std::uint64_t seed = 0;
  bool timing = false;
  {
    maglab_verify_options d;
    maglab_verify_options_init(&d);
    seed = d.seed;
  }
  app.add_option("--format", output.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("-o,--output", output.file, "Write the result to a file");
  app.add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Seed for randomized property checks");
  app.add_flag("--timing", timing, "Include wall-clock seconds in reports");

  int exit_code = 0;

  // build
  auto* build = app.add_subcommand("build", "Construct a space (or a circular type) as JSON");
  std::string build_kind, from = "polygon", type_file, fa = "a", fb = "b", fc = "c", witness_file;
  int n = 0, m = 0, index = 0;
  build->add_option("kind", build_kind, "cycle, polygon, circular, restricted, mutant, isomer, fig2 or type")
      ->required()
      ->check(CLI::IsMember({"cycle", "polygon", "circular", "restricted", "mutant", "isomer", "fig2", "type"}));
  build->add_option("--n", n, "Number of points");
  build->add_option("--from", from, "Source type")->check(CLI::IsMember({"cycle", "polygon", "type-file"}));
  build->add_option("--type", type_file, "Circular type JSON file (with --from type-file)");
  build->add_option("--m", m, "Number of vertices kept (restricted)");
  build->add_option("--a", fa, "fig2 length a");
  build->add_option("--b", fb, "fig2 length b");
  build->add_option("--c", fc, "fig2 length c");
  build->add_option("--witness", witness_file, "fig2 witness JSON file");
  build->add_option("--index", index, "fig2 member 0..2")->check(CLI::Range(0, 2));
  build->callback([&] {
    auto type_json = [&](const std::string& family) {
      if (family == "type-file") {
        if (type_file.empty()) fail("Usage", "--from type-file needs --type FILE");
        return read_file(type_file);
      }
      char* out = nullptr;
      check(maglab_type_json(family.c_str(), n, &out));
      return take(out);
    };
    maglab_space* s = nullptr;
    if (build_kind == "type") {
      output.write(json::parse(type_json(from)));
      return;
    } else if (build_kind == "cycle" || build_kind == "polygon") {
      check(maglab_space_build("circular", type_json(build_kind).c_str(), 0, &s));
    } else if (build_kind == "fig2") {
      std::string w = witness_file.empty() ? std::string() : read_file(witness_file);
      check(maglab_space_fig2(fa.c_str(), fb.c_str(), fc.c_str(), witness_file.empty() ? nullptr : w.c_str(), index,
                              &s));
    } else {
      check(maglab_space_build(build_kind.c_str(), type_json(from).c_str(), m, &s));
    }
    SpacePtr owned(s, maglab_space_free);
    output.write(json::parse(space_json(s)));
  });

  // fixture
  auto* fixture = app.add_subcommand("fixture", "Emit a Euclidean fixture");
  std::string fixture_name;
  fixture->add_option("name", fixture_name, "Fixture name")->required();
  fixture->callback([&] {
    char* out = nullptr;
    check(maglab_fixture_json(fixture_name.c_str(), &out));
    output.write(json::parse(take(out)));
  });

  // validate
  auto* validate = app.add_subcommand("validate", "Check the metric axioms");
  std::string validate_file;
  validate->add_option("space", validate_file, "Space JSON file")->required();
  validate->callback([&] {
    auto s = load_space(validate_file);
    char* out = nullptr;
    int ok = 0;
    check(maglab_space_validate(s.get(), &out, &ok));
    output.write(json::parse(take(out)));
    if (!ok) exit_code = 1;
  });

  // magnitude
  auto* magnitude = app.add_subcommand("magnitude", "Formal magnitude and its series");
  std::string magnitude_file, series_L, at_t;
  bool closed_form = false, path_oracle = false;
  int bits = 128;
  magnitude->add_option("space", magnitude_file, "Space JSON file")->required();
  magnitude->add_option("--series", series_L, "Truncation exponent L (canonical scalar)");
  magnitude->add_flag("--closed-form", closed_form, "Cross-check the quasi-homogeneous closed form");
  magnitude->add_flag("--path-oracle", path_oracle, "Cross-check the path-sum expansion");
  magnitude->add_option("--at", at_t, "Also evaluate at q = exp(-t) for rational t");
  magnitude->add_option("--bits", bits, "Precision for --at")->check(CLI::Range(16, 1 << 16));
  magnitude->callback([&] {
    auto s = load_space(magnitude_file);
    unsigned flags = (closed_form ? MAGLAB_MAGNITUDE_CLOSED_FORM : 0u) | (path_oracle ? MAGLAB_MAGNITUDE_PATH_ORACLE : 0u);
    char* out = nullptr;
    check(maglab_magnitude(s.get(), series_L.empty() ? nullptr : series_L.c_str(), flags, &out));
    json j = json::parse(take(out));
    if (!at_t.empty()) {
      check(maglab_magnitude_at(s.get(), at_t.c_str(), bits, &out));
      j["value_at"] = json::parse(take(out));
    }
    if (j.contains("closed_form") && j["closed_form"].contains("agrees") && !j["closed_form"]["agrees"].get<bool>())
      exit_code = 1;
    if (j.contains("path_expansion") && !j["path_expansion"]["agrees"].get<bool>()) exit_code = 1;
    output.write(j);
  });

  // riesz
  auto* riesz = app.add_subcommand("riesz", "Discrete Riesz energy at an integer exponent");
  std::string riesz_file;
  int z = 1;
  riesz->add_option("space", riesz_file, "Space JSON file")->required();
  riesz->add_option("--z", z, "Exponent");
  riesz->callback([&] {
    auto s = load_space(riesz_file);
    char* out = nullptr;
    check(maglab_riesz(s.get(), z, &out));
    output.write(json::parse(take(out)));
  });

  // compare
  auto* compare = app.add_subcommand("compare", "Compare two spaces");
  std::string cmp_a, cmp_b;
  bool cmp_mag = false, cmp_riesz = false, cmp_iso = false;
  int cap = 0;
  compare->add_option("a", cmp_a, "First space JSON file")->required();
  compare->add_option("b", cmp_b, "Second space JSON file")->required();
  compare->add_flag("--magnitude", cmp_mag, "Equal formal magnitude");
  compare->add_flag("--riesz", cmp_riesz, "Equal Riesz energy for all exponents");
  compare->add_flag("--isometry", cmp_iso, "Isometric");
  compare->add_option("--cap", cap, "Isometry search cap on n");
  compare->callback([&] {
    auto a = load_space(cmp_a), b = load_space(cmp_b);
    unsigned flags = (cmp_mag ? MAGLAB_COMPARE_MAGNITUDE : 0u) | (cmp_riesz ? MAGLAB_COMPARE_RIESZ : 0u) |
                     (cmp_iso ? MAGLAB_COMPARE_ISOMETRY : 0u);
    char* out = nullptr;
    int pass = 0;
    check(maglab_compare(a.get(), b.get(), flags, cap, &out, &pass));
    output.write(json::parse(take(out)));
    if (!pass) exit_code = 1;
  });

  maglab_verify_options vopts;
  maglab_verify_options_init(&vopts);
  auto sync_options = [&] {
    vopts.seed = seed;
    vopts.jobs = jobs;
    vopts.timing = timing;
  };

  // fsolve
  auto* fsolve = app.add_subcommand("fsolve", "Solve F_n(i,j,k) = 0 exactly");
  int fs_n = 0;
  std::string range;
  fsolve->add_option("--n", fs_n, "Single n");
  fsolve->add_option("--range", range, "Range LO..HI checked against the expected sets");
  fsolve->callback([&] {
    if (fs_n == 0 && range.empty()) fail("Usage", "fsolve needs --n or --range");
    sync_options();
    json j = json::object();
    int pass = 1;
    char* out = nullptr;
    if (fs_n != 0) {
      check(maglab_fsolve(fs_n, &out, &pass));
      j = json::parse(take(out));
    }
    if (!range.empty()) {
      auto [lo, hi] = parse_range(range);
      int range_pass = 0;
      check(maglab_verify_fsolve(lo, hi, &vopts, &out, &range_pass));
      json r = json::parse(take(out));
      if (fs_n == 0) j = r;
      else j["range"] = r;
      pass = pass && range_pass;
    }
    output.write(j);
    if (!pass) exit_code = 1;
  });

  // verify-paper
  auto* verify = app.add_subcommand("verify-paper", "Run a verification suite");
  std::string suite = "all";
  int cases = vopts.property_cases;
  verify->add_option("suite", suite, "Suite name or 'all'");
  verify->add_option("--cases", cases, "Cases per randomized property")->check(CLI::PositiveNumber);
  verify->add_option("--cap", vopts.isometry_cap, "Isometry search cap on n");
  verify->callback([&] {
    sync_options();
    vopts.property_cases = cases;
    char* out = nullptr;
    int pass = 0;
    check(maglab_verify(suite.c_str(), &vopts, &out, &pass));
    output.write(json::parse(take(out)));
    if (!pass) exit_code = 1;
  });

  // report
  auto* report = app.add_subcommand("report", "Identification facts for one n");
  int report_n = 0;
  report->add_option("--n", report_n, "Number of points")->required();
  report->callback([&] {
    char* out = nullptr;
    int pass = 0;
    check(maglab_report(report_n, &out, &pass));
    output.write(json::parse(take(out)));
    if (!pass) exit_code = 1;
  });

  try {
    apply_conductor_cap();
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::Error& e) {
    print_error("Usage", e.what());
    return 2;
  } catch (const Failure& f) {
    print_error(f.code, f.message);
    return 2;
  } catch (const json::exception& e) {
    print_error("Parse", e.what());
    return 2;
  }
  return exit_code;
}

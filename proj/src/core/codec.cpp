#include "codec.hpp"

#include "error.hpp"

namespace maglab {

json encode_scalar(const Scalar& x) {
  switch (x.backend()) {
    case Backend::Rational: return x.rational().to_string();
    case Backend::Cyclotomic: {
      CyclotomicReal c = x.cyclotomic().minimal();
      json coeffs = json::array();
      for (const auto& r : c.coeffs()) coeffs.push_back(r.to_string());
      return json{{"m", c.conductor()}, {"c", coeffs}};
    }
    case Backend::Formal: {
      json syms = json::object();
      for (const auto& [k, v] : x.formal().syms()) syms[k] = v.to_string();
      return json{{"const", x.formal().constant().to_string()}, {"syms", syms}};
    }
  }
  return nullptr;
}

namespace {

Rational decode_rational(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  fail(ErrorCode::Parse, "expected a rational string, got " + j.dump());
}

}  // namespace

Scalar decode_scalar(const json& j) {
  if (j.is_string() || j.is_number_integer()) return Scalar(decode_rational(j));
  if (!j.is_object()) fail(ErrorCode::Parse, "malformed scalar: " + j.dump());
  if (j.contains("m")) {
    if (!j["m"].is_number_integer() || !j.contains("c") || !j["c"].is_array())
      fail(ErrorCode::Parse, "cyclotomic scalar needs integer \"m\" and array \"c\"");
    std::vector<Rational> c;
    for (const auto& e : j["c"]) c.push_back(decode_rational(e));
    return Scalar(CyclotomicReal::make(j["m"].get<int>(), std::move(c)));
  }
  if (j.contains("syms") || j.contains("const")) {
    Rational k = j.contains("const") ? decode_rational(j["const"]) : Rational(0);
    std::map<std::string, Rational> syms;
    if (j.contains("syms")) {
      if (!j["syms"].is_object()) fail(ErrorCode::Parse, "\"syms\" must be an object");
      for (auto it = j["syms"].begin(); it != j["syms"].end(); ++it) syms[it.key()] = decode_rational(it.value());
    }
    return Scalar(FormalScalar(k, std::move(syms)));
  }
  fail(ErrorCode::Parse, "unrecognised scalar object: " + j.dump());
}

}  // namespace maglab

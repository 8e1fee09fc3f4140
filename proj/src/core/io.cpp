#include "io.hpp"

#include "error.hpp"

namespace maglab {

json encode_witness(const Witness& w) {
  json out = json::object();
  for (const auto& [k, v] : w) out[k] = v.to_string();
  return out;
}

Witness decode_witness(const json& j) {
  if (!j.is_object()) fail(ErrorCode::Parse, "witness must be an object of symbol -> rational");
  Witness w;
  for (auto it = j.begin(); it != j.end(); ++it) {
    Scalar v = decode_scalar(it.value());
    if (!v.is_rational()) fail(ErrorCode::Parse, "witness values must be rationals");
    w[it.key()] = v.rational();
  }
  return w;
}

json encode_space(const FiniteMetricSpace& x) {
  json rows = json::array();
  for (int i = 0; i < x.n(); ++i) {
    json row = json::array();
    for (int j = 0; j < x.n(); ++j) row.push_back(encode_scalar(x.d(i, j)));
    rows.push_back(std::move(row));
  }
  json out{{"n", x.n()}, {"dist", std::move(rows)}, {"label", x.label()}};
  if (x.witness()) out["witness"] = encode_witness(*x.witness());
  return out;
}

FiniteMetricSpace decode_space(const json& j) {
  if (!j.is_object() || !j.contains("dist") || !j["dist"].is_array())
    fail(ErrorCode::Parse, "space JSON needs a \"dist\" array");
  const json& rows = j["dist"];
  int n = j.contains("n") ? j["n"].get<int>() : static_cast<int>(rows.size());
  if (n < 1) fail(ErrorCode::BadN, "a metric space needs at least one point");
  std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n, Scalar(0)));
  bool full = static_cast<int>(rows.size()) == n;
  for (const auto& r : rows) full = full && r.is_array() && static_cast<int>(r.size()) == n;
  if (full) {
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) m[i][k] = decode_scalar(rows[i][k]);
  } else {
    int count = static_cast<int>(rows.size());
    if (count != n && count != n - 1) fail(ErrorCode::Parse, "\"dist\" is neither a full matrix nor an upper triangle");
    for (int i = 0; i < count; ++i) {
      if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != n - 1 - i)
        fail(ErrorCode::Parse, "upper-triangle row " + std::to_string(i) + " has the wrong length");
      for (int k = 0; k < n - 1 - i; ++k) {
        Scalar v = decode_scalar(rows[i][k]);
        m[i][i + 1 + k] = v;
        m[i + 1 + k][i] = v;
      }
    }
  }
  std::string label = j.contains("label") && j["label"].is_string() ? j["label"].get<std::string>() : "";
  std::optional<Witness> w;
  if (j.contains("witness")) w = decode_witness(j["witness"]);
  return FiniteMetricSpace(std::move(m), std::move(label), std::move(w));
}

json encode_multiset(const EdgeMultiset& m) {
  json out = json::array();
  for (const auto& [v, c] : m.entries()) out.push_back(json{{"value", encode_scalar(v)}, {"count", c}});
  return out;
}

json encode_genrational(const GenRational& r) {
  return json{{"num", encode_genpoly(r.num())}, {"den", encode_genpoly(r.den())}};
}

json encode_type(const CircularType& t) {
  json d = json::array();
  for (const auto& x : t.d) d.push_back(encode_scalar(x));
  return json{{"n", t.n}, {"d", std::move(d)}};
}

CircularType decode_type(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("d") || !j["n"].is_number_integer() || !j["d"].is_array())
    fail(ErrorCode::Parse, "circular type needs integer \"n\" and array \"d\"");
  CircularType t;
  t.n = j["n"].get<int>();
  if (t.n < 2) fail(ErrorCode::BadN, "circular type needs n >= 2");
  for (const auto& x : j["d"]) t.d.push_back(decode_scalar(x));
  if (static_cast<int>(t.d.size()) != t.n / 2)
    fail(ErrorCode::BadLength, "circular type of n=" + std::to_string(t.n) + " needs " + std::to_string(t.n / 2) + " entries");
  return t;
}

}  // namespace maglab

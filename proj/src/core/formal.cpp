#include "formal.hpp"

#include "error.hpp"

namespace maglab {

FormalScalar FormalScalar::symbol(const std::string& name) {
  if (name.empty()) fail(ErrorCode::InvalidArgument, "empty symbol name");
  return FormalScalar(Rational(0), {{name, Rational(1)}});
}

FormalScalar::FormalScalar(Rational constant, std::map<std::string, Rational> syms)
    : const_(std::move(constant)) {
  for (auto& [k, v] : syms)
    if (!v.is_zero()) syms_.emplace(k, v);
}

FormalScalar FormalScalar::operator-() const { return scaled(Rational(-1)); }

FormalScalar operator+(const FormalScalar& a, const FormalScalar& b) {
  std::map<std::string, Rational> s = a.syms_;
  for (auto& [k, v] : b.syms_) {
    Rational t = s[k] + v;
    if (t.is_zero())
      s.erase(k);
    else
      s[k] = t;
  }
  FormalScalar r;
  r.const_ = a.const_ + b.const_;
  r.syms_ = std::move(s);
  return r;
}

FormalScalar operator-(const FormalScalar& a, const FormalScalar& b) { return a + (-b); }

FormalScalar FormalScalar::scaled(const Rational& r) const {
  if (r.is_zero()) return FormalScalar();
  FormalScalar out;
  out.const_ = const_ * r;
  for (auto& [k, v] : syms_) out.syms_.emplace(k, v * r);
  return out;
}

Rational FormalScalar::evaluate(const Witness& w) const {
  Rational acc = const_;
  for (auto& [k, v] : syms_) {
    auto it = w.find(k);
    if (it == w.end()) fail(ErrorCode::NoWitness, "no witness value for symbol '" + k + "'");
    acc += v * it->second;
  }
  return acc;
}

int structural_compare(const FormalScalar& a, const FormalScalar& b) {
  if (a.const_ != b.const_) return a.const_ < b.const_ ? -1 : 1;
  auto ia = a.syms_.begin();
  auto ib = b.syms_.begin();
  while (ia != a.syms_.end() || ib != b.syms_.end()) {
    // Missing coordinates are zero; walk both maps in name order.
    if (ib == b.syms_.end() || (ia != a.syms_.end() && ia->first < ib->first)) {
      return ia->second.sign();
    }
    if (ia == a.syms_.end() || ib->first < ia->first) {
      return -ib->second.sign();
    }
    if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
    ++ia;
    ++ib;
  }
  return 0;
}

}  // namespace maglab

#pragma once

#include "codec.hpp"
#include "genpoly.hpp"
#include "metric_space.hpp"

namespace maglab {

json encode_space(const FiniteMetricSpace& x);
/// Accepts a full matrix or the strict upper triangle (row i holding
/// n-1-i entries). Throws Parse.
FiniteMetricSpace decode_space(const json& j);

json encode_multiset(const EdgeMultiset& m);
json encode_genrational(const GenRational& r);

/// Circular type as {"n": n, "d": [d_1, ..., d_floor(n/2)]}.
json encode_type(const CircularType& t);
CircularType decode_type(const json& j);

Witness decode_witness(const json& j);
json encode_witness(const Witness& w);

}  // namespace maglab

#pragma once

#include "json.hpp"

#include "scalar.hpp"

namespace maglab {

using json = nlohmann::json;

/// Rational -> "p/q"; cyclotomic -> {"m", "c"} at its minimal conductor;
/// formal -> {"const", "syms"}.
json encode_scalar(const Scalar& x);
/// Inverse of encode_scalar; also accepts plain JSON integers. Throws Parse.
Scalar decode_scalar(const json& j);

}  // namespace maglab

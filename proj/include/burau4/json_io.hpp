#pragma once

#include <json.hpp>

#include "burau4/pingpong.hpp"

namespace burau4
{

using json = nlohmann::json;

// Polynomial: {"terms": {"<exponent>": <coefficient>, ...}, "p": p}. Coefficients
// outside the 64-bit range are written as decimal strings; both forms are read.
json to_json(const LaurentPoly &f);
LaurentPoly poly_from_json(const json &j);

// {"rows": [[poly, poly, poly], x3], "p": p}
json to_json(const Mat3 &m);
Mat3 mat_from_json(const json &j);

// {"coords": [poly, poly, poly], "p": p}
json to_json(const Vec3 &v);
Vec3 vec_from_json(const json &j);

// {"word": "<normal form>", "p": p, "steps": [{"op", "set", "vector"}...], "verdict": bool}
json to_json(const Certificate &c);
Certificate certificate_from_json(const json &j);

json to_json(const LemmaReport &r);
json to_json(const MappingReport &r);

} // namespace burau4

#pragma once

#include <json.hpp>

#include "uqh/hpoly.hpp"
#include "uqh/quotient.hpp"

namespace uqh {

using Json = nlohmann::ordered_json;

// Wire schema (bit-exact round-trip; big integers travel as decimal strings):
//   LaurentScalar   {"s_powers": {"<exp>": ["<num>", "<den>"], ...}}
//   HPoly           [scalar, scalar, ...]          (ascending powers of h)
//   LaurentQuotient {"num": scalar, "den": scalar}

Json to_json(const LaurentScalar& x);
Json to_json(const HPoly& x);
Json to_json(const LaurentQuotient& x);

LaurentScalar laurent_from_json(const Json& j);
HPoly hpoly_from_json(const Json& j);
LaurentQuotient quotient_from_json(const Json& j);

} // namespace uqh

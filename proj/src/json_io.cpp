#include "uqh/json_io.hpp"

#include "uqh/errors.hpp"

namespace uqh {

Json to_json(const LaurentScalar& x) {
    Json powers = Json::object();
    for (const auto& [e, c] : x.coefficients())
        powers[std::to_string(e)] = Json::array({numerator(c).str(), denominator(c).str()});
    return Json{{"s_powers", powers}};
}

Json to_json(const HPoly& x) {
    Json arr = Json::array();
    for (const auto& c : x.coefficients()) arr.push_back(to_json(c));
    return arr;
}

Json to_json(const LaurentQuotient& x) {
    return Json{{"num", to_json(x.num())}, {"den", to_json(x.den())}};
}

LaurentScalar laurent_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("s_powers"))
        throw ConfigError("scalar JSON must be {\"s_powers\": {...}}");
    LaurentScalar r;
    for (const auto& [key, val] : j.at("s_powers").items()) {
        const int exp = std::stoi(key);
        const Integer num(val.at(0).get<std::string>());
        const Integer den(val.at(1).get<std::string>());
        r += LaurentScalar::monomial(exp, Rational(num, den));
    }
    return r;
}

HPoly hpoly_from_json(const Json& j) {
    if (!j.is_array()) throw ConfigError("h-polynomial JSON must be an array of scalars");
    HPoly r;
    for (size_t k = 0; k < j.size(); ++k)
        r += HPoly::monomial(static_cast<int>(k), laurent_from_json(j[k]));
    return r;
}

LaurentQuotient quotient_from_json(const Json& j) {
    return {laurent_from_json(j.at("num")), laurent_from_json(j.at("den"))};
}

} // namespace uqh

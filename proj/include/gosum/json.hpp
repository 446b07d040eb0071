#ifndef GOSUM_JSON_HPP
#define GOSUM_JSON_HPP

#include <json.hpp>

#include <gosum/catalog.hpp>
#include <gosum/gosper.hpp>
#include <gosum/tables.hpp>

// JSON encodings (schemas in docs/json-schemas.md). Rationals are strings
// "p/q" or "p"; polynomials are ascending coefficient arrays of such strings.
namespace gosum
{

nlohmann::json to_json(const Rational &r);
nlohmann::json to_json(const std::vector<Rational> &v);
nlohmann::json to_json(const Polynomial &p);
nlohmann::json to_json(const RationalFunction &r);
nlohmann::json to_json(const NormalForm &nf);
nlohmann::json to_json(const Certificate &cert);
// Row-major arrays of integer strings.
nlohmann::json to_json(const LowerTriangularTable &table);
nlohmann::json to_json(const IdentityResult &result);

// Inverses for the scalar and polynomial encodings. Throw
// std::invalid_argument on malformed input.
Rational rational_from_json(const nlohmann::json &j);
Polynomial polynomial_from_json(const nlohmann::json &j);

} // namespace gosum

#endif

#include <gosum/json.hpp>

namespace gosum
{

using nlohmann::json;

json to_json(const Rational &r)
{
    return to_string(r);
}

json to_json(const std::vector<Rational> &v)
{
    json out = json::array();
    for (const auto &x : v) {
        out.push_back(to_string(x));
    }
    return out;
}

json to_json(const Polynomial &p)
{
    return to_json(p.coefficients());
}

json to_json(const RationalFunction &r)
{
    return {{"numerator", to_json(r.numerator())}, {"denominator", to_json(r.denominator())}};
}

json to_json(const NormalForm &nf)
{
    return {{"z", to_json(nf.z)}, {"a", to_json(nf.a)}, {"b", to_json(nf.b)}, {"c", to_json(nf.c)}};
}

json to_json(const Certificate &cert)
{
    return {{"x", to_json(cert.x)}, {"multiplier", to_json(cert.multiplier)}};
}

json to_json(const LowerTriangularTable &table)
{
    json rows = json::array();
    for (const auto &row : table.rows()) {
        rows.push_back(to_json(row));
    }
    return rows;
}

json to_json(const IdentityResult &result)
{
    return {{"id", result.id},
            {"status", result.pass ? "PASS" : "FAIL"},
            {"lhs", result.lhs},
            {"rhs", result.rhs}};
}

Rational rational_from_json(const json &j)
{
    if (!j.is_string()) {
        throw std::invalid_argument("rational must be encoded as a string");
    }
    return parse_rational(j.get<std::string>());
}

Polynomial polynomial_from_json(const json &j)
{
    if (!j.is_array()) {
        throw std::invalid_argument("polynomial must be encoded as an array");
    }
    std::vector<Rational> coeffs;
    for (const auto &c : j) {
        coeffs.push_back(rational_from_json(c));
    }
    Polynomial p(std::move(coeffs));
    if (p.coefficients().size() != j.size()) {
        throw std::invalid_argument("polynomial array has a zero leading coefficient");
    }
    return p;
}

} // namespace gosum

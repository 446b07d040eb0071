#include <gosum/rational.hpp>

#include <cctype>
#include <stdexcept>

namespace gosum
{

namespace
{

bool valid_integer_text(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
            return false;
        }
    }
    return true;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

Integer integer_from(std::string_view s)
{
    std::string digits(s);
    if (!digits.empty() && digits.front() == '+') {
        digits.erase(0, 1);
    }
    return Integer(digits, 10);
}

} // namespace

Rational parse_rational(std::string_view text)
{
    const auto s = trim(text);
    const auto slash = s.find('/');
    const auto num_text = trim(s.substr(0, slash));
    if (!valid_integer_text(num_text)) {
        throw std::invalid_argument("invalid rational '" + std::string(text) + "'");
    }
    Integer den = 1;
    if (slash != std::string_view::npos) {
        const auto den_text = trim(s.substr(slash + 1));
        if (!valid_integer_text(den_text)) {
            throw std::invalid_argument("invalid rational '" + std::string(text) + "'");
        }
        den = integer_from(den_text);
        if (den == 0) {
            throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        }
    }
    Rational r(integer_from(num_text), den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational &r)
{
    if (r.get_den() == 1) {
        return r.get_num().get_str();
    }
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

bool is_integer(const Rational &r)
{
    return r.get_den() == 1;
}

bool is_nonpositive_integer(const Rational &r)
{
    return is_integer(r) && sgn(r) <= 0;
}

Rational pow(const Rational &base, std::int64_t exponent)
{
    if (exponent < 0) {
        if (base == 0) {
            throw std::domain_error("zero raised to a negative power");
        }
        return 1 / pow(base, -exponent);
    }
    Rational result = 1;
    Rational b = base;
    auto e = static_cast<std::uint64_t>(exponent);
    while (e != 0) {
        if (e & 1U) {
            result *= b;
        }
        e >>= 1U;
        if (e != 0) {
            b *= b;
        }
    }
    return result;
}

Rational falling_factorial(const Rational &n, unsigned m)
{
    Rational result = 1;
    for (unsigned i = 0; i < m; ++i) {
        result *= n - i;
    }
    return result;
}

Rational rising_factorial(const Rational &a, unsigned m)
{
    Rational result = 1;
    for (unsigned i = 0; i < m; ++i) {
        result *= a + i;
    }
    return result;
}

Integer factorial(unsigned n)
{
    Integer result;
    mpz_fac_ui(result.get_mpz_t(), n);
    return result;
}

Integer binomial(unsigned n, unsigned k)
{
    Integer result;
    mpz_bin_uiui(result.get_mpz_t(), n, k);
    return result;
}

} // namespace gosum

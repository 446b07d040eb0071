#ifndef GOSUM_RATIONAL_FUNCTION_HPP
#define GOSUM_RATIONAL_FUNCTION_HPP

#include <optional>
#include <string>

#include <gosum/polynomial.hpp>

namespace gosum
{

// Quotient of polynomials in k, kept in lowest terms with a monic
// denominator. Zero is 0/1.
class RationalFunction
{
public:
    RationalFunction() : den_(Polynomial::constant(1)) {}
    explicit RationalFunction(Polynomial numerator);
    // Throws std::domain_error when the denominator is zero.
    RationalFunction(Polynomial numerator, Polynomial denominator);

    [[nodiscard]] const Polynomial &numerator() const noexcept
    {
        return num_;
    }
    [[nodiscard]] const Polynomial &denominator() const noexcept
    {
        return den_;
    }
    [[nodiscard]] bool is_zero() const noexcept
    {
        return num_.is_zero();
    }

    // Empty when the denominator vanishes at k.
    [[nodiscard]] std::optional<Rational> operator()(const Rational &k) const;

    // r(k + j).
    [[nodiscard]] RationalFunction shift(std::int64_t j) const;

    RationalFunction &operator+=(const RationalFunction &other);
    RationalFunction &operator-=(const RationalFunction &other);
    RationalFunction &operator*=(const RationalFunction &other);
    // Throws std::domain_error when other is zero.
    RationalFunction &operator/=(const RationalFunction &other);

    friend RationalFunction operator+(RationalFunction a, const RationalFunction &b)
    {
        return a += b;
    }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction &b)
    {
        return a -= b;
    }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction &b)
    {
        return a *= b;
    }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction &b)
    {
        return a /= b;
    }
    friend bool operator==(const RationalFunction &, const RationalFunction &) = default;

private:
    void normalize();

    Polynomial num_;
    Polynomial den_;
};

// "num" when the denominator is 1, otherwise "(num)/(den)".
std::string to_string(const RationalFunction &r, std::string_view var = "k");

} // namespace gosum

#endif

#ifndef GOSUM_POLYNOMIAL_HPP
#define GOSUM_POLYNOMIAL_HPP

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gosum/rational.hpp>

namespace gosum
{

// Dense univariate polynomial over the rationals. Coefficient i multiplies
// k^i; the leading coefficient is never zero, so the zero polynomial is the
// empty coefficient list.
class Polynomial
{
public:
    // Degree reported for the zero polynomial.
    static constexpr int minus_infinity = std::numeric_limits<int>::min();

    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);
    Polynomial(std::initializer_list<Rational> coefficients);

    static Polynomial constant(const Rational &c);
    static Polynomial monomial(const Rational &c, unsigned degree);
    // The polynomial k.
    static Polynomial variable();

    [[nodiscard]] bool is_zero() const noexcept
    {
        return coeffs_.empty();
    }
    [[nodiscard]] bool is_constant() const noexcept
    {
        return coeffs_.size() <= 1;
    }
    [[nodiscard]] int degree() const noexcept
    {
        return coeffs_.empty() ? minus_infinity : static_cast<int>(coeffs_.size()) - 1;
    }
    [[nodiscard]] const std::vector<Rational> &coefficients() const noexcept
    {
        return coeffs_;
    }
    // Zero beyond the degree.
    [[nodiscard]] Rational coefficient(std::size_t i) const;
    // Zero for the zero polynomial.
    [[nodiscard]] Rational leading_coefficient() const;

    [[nodiscard]] Rational operator()(const Rational &k) const;

    // p(k + j).
    [[nodiscard]] Polynomial shift(const Rational &j) const;
    [[nodiscard]] Polynomial shift(std::int64_t j) const
    {
        return shift(Rational(static_cast<long>(j)));
    }
    // p(-k).
    [[nodiscard]] Polynomial reflect() const;

    // Divided by the leading coefficient; zero stays zero.
    [[nodiscard]] Polynomial monic() const;

    Polynomial &operator+=(const Polynomial &other);
    Polynomial &operator-=(const Polynomial &other);
    Polynomial &operator*=(const Polynomial &other);
    Polynomial &operator*=(const Rational &c);

    friend Polynomial operator+(Polynomial p, const Polynomial &q)
    {
        return p += q;
    }
    friend Polynomial operator-(Polynomial p, const Polynomial &q)
    {
        return p -= q;
    }
    friend Polynomial operator*(Polynomial p, const Polynomial &q)
    {
        return p *= q;
    }
    friend Polynomial operator*(Polynomial p, const Rational &c)
    {
        return p *= c;
    }
    friend Polynomial operator*(const Rational &c, Polynomial p)
    {
        return p *= c;
    }
    friend Polynomial operator-(Polynomial p)
    {
        return p *= Rational(-1);
    }
    friend bool operator==(const Polynomial &, const Polynomial &) = default;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

// Quotient and remainder with p = q * quot + rem and deg rem < deg q.
// Throws std::domain_error when q is zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial &p, const Polynomial &q);

// Quotient of an exact division; throws std::domain_error if q does not
// divide p.
Polynomial exact_quotient(const Polynomial &p, const Polynomial &q);

// Monic greatest common divisor. Throws std::domain_error if both are zero.
Polynomial gcd(const Polynomial &p, const Polynomial &q);

// Determinant of the Sylvester matrix whose first deg(q) rows hold the
// coefficients of p and whose last deg(p) rows hold those of q, highest
// degree first. Equivalently lc(p)^deg(q) times the product of q over the
// roots of p, so resultant(k, k - 1) = -1. Throws std::domain_error for a
// zero argument.
Rational resultant(const Polynomial &p, const Polynomial &q);

// Primitive integer multiple of p with positive leading coefficient.
std::vector<Integer> primitive_part(const Polynomial &p);

// Nonnegative integer roots in ascending order, without multiplicity.
// Throws std::domain_error for the zero polynomial.
std::vector<Integer> nonneg_integer_roots(const Polynomial &p);

// The unique polynomial of degree < xs.size() through the given points.
// xs must be pairwise distinct.
Polynomial interpolate(std::span<const Rational> xs, std::span<const Rational> ys);

// Readable form in the given variable, e.g. "k^2 - 3/2*k + 1". The output is
// accepted by the term parser.
std::string to_string(const Polynomial &p, std::string_view var = "k");

} // namespace gosum

#endif

#ifndef GOSUM_SERIES_HPP
#define GOSUM_SERIES_HPP

#include <cstdint>
#include <vector>

#include <gosum/rational.hpp>

namespace gosum
{

// Power series in x truncated after x^order, stored with ordinary
// coefficients. egf_coefficient(d) = d! * coefficient(d).
class TruncatedSeries
{
public:
    explicit TruncatedSeries(unsigned order);
    // coefficients.size() must be order + 1 or less (missing entries are 0).
    TruncatedSeries(std::vector<Rational> coefficients, unsigned order);

    static TruncatedSeries one(unsigned order);
    // e^(s x).
    static TruncatedSeries exp_linear(const Rational &s, unsigned order);
    // Series whose egf coefficients are the given values.
    static TruncatedSeries from_egf(const std::vector<Rational> &values, unsigned order);

    [[nodiscard]] unsigned order() const noexcept
    {
        return static_cast<unsigned>(coeffs_.size() - 1);
    }
    [[nodiscard]] const std::vector<Rational> &coefficients() const noexcept
    {
        return coeffs_;
    }
    [[nodiscard]] const Rational &coefficient(unsigned d) const
    {
        return coeffs_.at(d);
    }
    [[nodiscard]] Rational egf_coefficient(unsigned d) const;
    [[nodiscard]] std::vector<Rational> egf_coefficients() const;

    // Throws std::domain_error for a zero constant term.
    [[nodiscard]] TruncatedSeries inverse() const;
    // Negative exponents go through inverse().
    [[nodiscard]] TruncatedSeries pow(std::int64_t exponent) const;
    [[nodiscard]] TruncatedSeries scale(const Rational &c) const;
    // f(-x).
    [[nodiscard]] TruncatedSeries negate_argument() const;
    // f'(x), one order lower.
    [[nodiscard]] TruncatedSeries derivative() const;
    // exp(f) via (exp f)' = f' exp f. Throws std::domain_error unless the
    // constant term is zero.
    [[nodiscard]] TruncatedSeries exp() const;

    TruncatedSeries &operator+=(const TruncatedSeries &other);
    TruncatedSeries &operator-=(const TruncatedSeries &other);
    TruncatedSeries &operator*=(const TruncatedSeries &other);

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries &b)
    {
        return a += b;
    }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries &b)
    {
        return a -= b;
    }
    friend TruncatedSeries operator*(TruncatedSeries a, const TruncatedSeries &b)
    {
        return a *= b;
    }
    friend bool operator==(const TruncatedSeries &, const TruncatedSeries &) = default;

private:
    void truncate(unsigned order);

    std::vector<Rational> coeffs_;
};

// B(x) = exp(e^x - 1), the Bell number generating function.
TruncatedSeries bell_series(unsigned order);

} // namespace gosum

#endif

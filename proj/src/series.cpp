#include <gosum/series.hpp>

#include <algorithm>
#include <stdexcept>

namespace gosum
{

TruncatedSeries::TruncatedSeries(unsigned order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coefficients, unsigned order)
    : coeffs_(std::move(coefficients))
{
    if (coeffs_.size() > order + 1U) {
        throw std::invalid_argument("more coefficients than the truncation order allows");
    }
    coeffs_.resize(order + 1);
}

TruncatedSeries TruncatedSeries::one(unsigned order)
{
    TruncatedSeries s(order);
    s.coeffs_[0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::exp_linear(const Rational &s, unsigned order)
{
    TruncatedSeries out(order);
    Rational term = 1;
    for (unsigned d = 0; d <= order; ++d) {
        out.coeffs_[d] = term;
        term = term * s / (d + 1);
    }
    return out;
}

TruncatedSeries TruncatedSeries::from_egf(const std::vector<Rational> &values, unsigned order)
{
    TruncatedSeries out(order);
    for (unsigned d = 0; d <= order && d < values.size(); ++d) {
        out.coeffs_[d] = values[d] / Rational(factorial(d));
    }
    return out;
}

Rational TruncatedSeries::egf_coefficient(unsigned d) const
{
    return coeffs_.at(d) * Rational(factorial(d));
}

std::vector<Rational> TruncatedSeries::egf_coefficients() const
{
    std::vector<Rational> out;
    out.reserve(coeffs_.size());
    for (unsigned d = 0; d < coeffs_.size(); ++d) {
        out.push_back(egf_coefficient(d));
    }
    return out;
}

void TruncatedSeries::truncate(unsigned order)
{
    coeffs_.resize(order + 1);
}

TruncatedSeries TruncatedSeries::inverse() const
{
    if (coeffs_[0] == 0) {
        throw std::domain_error("series with zero constant term has no inverse");
    }
    const unsigned n = order();
    TruncatedSeries out(n);
    const Rational inv0 = 1 / coeffs_[0];
    out.coeffs_[0] = inv0;
    for (unsigned d = 1; d <= n; ++d) {
        Rational acc = 0;
        for (unsigned i = 1; i <= d; ++i) {
            acc += coeffs_[i] * out.coeffs_[d - i];
        }
        out.coeffs_[d] = -acc * inv0;
    }
    return out;
}

TruncatedSeries TruncatedSeries::pow(std::int64_t exponent) const
{
    if (exponent < 0) {
        return inverse().pow(-exponent);
    }
    TruncatedSeries result = one(order());
    TruncatedSeries base = *this;
    auto e = static_cast<std::uint64_t>(exponent);
    while (e != 0) {
        if (e & 1U) {
            result *= base;
        }
        e >>= 1U;
        if (e != 0) {
            base *= base;
        }
    }
    return result;
}

TruncatedSeries TruncatedSeries::scale(const Rational &c) const
{
    auto out = *this;
    for (auto &x : out.coeffs_) {
        x *= c;
    }
    return out;
}

TruncatedSeries TruncatedSeries::negate_argument() const
{
    auto out = *this;
    for (std::size_t d = 1; d < out.coeffs_.size(); d += 2) {
        out.coeffs_[d] = -out.coeffs_[d];
    }
    return out;
}

TruncatedSeries TruncatedSeries::derivative() const
{
    if (order() == 0) {
        return TruncatedSeries(0);
    }
    TruncatedSeries out(order() - 1);
    for (unsigned d = 1; d <= order(); ++d) {
        out.coeffs_[d - 1] = coeffs_[d] * d;
    }
    return out;
}

TruncatedSeries TruncatedSeries::exp() const
{
    if (coeffs_[0] != 0) {
        throw std::domain_error("exp of a series with nonzero constant term is not rational");
    }
    const unsigned n = order();
    TruncatedSeries out(n);
    out.coeffs_[0] = 1;
    // (d+1) E_{d+1} = sum_{i=0}^{d} (i+1) u_{i+1} E_{d-i}
    for (unsigned d = 0; d < n; ++d) {
        Rational acc = 0;
        for (unsigned i = 0; i <= d; ++i) {
            acc += coeffs_[i + 1] * (i + 1) * out.coeffs_[d - i];
        }
        out.coeffs_[d + 1] = acc / (d + 1);
    }
    return out;
}

TruncatedSeries &TruncatedSeries::operator+=(const TruncatedSeries &other)
{
    truncate(std::min(order(), other.order()));
    for (std::size_t d = 0; d < coeffs_.size(); ++d) {
        coeffs_[d] += other.coeffs_[d];
    }
    return *this;
}

TruncatedSeries &TruncatedSeries::operator-=(const TruncatedSeries &other)
{
    truncate(std::min(order(), other.order()));
    for (std::size_t d = 0; d < coeffs_.size(); ++d) {
        coeffs_[d] -= other.coeffs_[d];
    }
    return *this;
}

TruncatedSeries &TruncatedSeries::operator*=(const TruncatedSeries &other)
{
    const unsigned n = std::min(order(), other.order());
    std::vector<Rational> out(n + 1);
    for (unsigned i = 0; i <= n; ++i) {
        if (coeffs_[i] == 0) {
            continue;
        }
        for (unsigned j = 0; i + j <= n; ++j) {
            out[i + j] += coeffs_[i] * other.coeffs_[j];
        }
    }
    coeffs_ = std::move(out);
    return *this;
}

TruncatedSeries bell_series(unsigned order)
{
    return (TruncatedSeries::exp_linear(1, order) - TruncatedSeries::one(order)).exp();
}

} // namespace gosum

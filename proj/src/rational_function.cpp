#include <gosum/rational_function.hpp>

#include <stdexcept>

namespace gosum
{

RationalFunction::RationalFunction(Polynomial numerator)
    : num_(std::move(numerator)), den_(Polynomial::constant(1))
{
}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator))
{
    if (den_.is_zero()) {
        throw std::domain_error("rational function with zero denominator");
    }
    normalize();
}

void RationalFunction::normalize()
{
    if (num_.is_zero()) {
        den_ = Polynomial::constant(1);
        return;
    }
    const auto g = gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = exact_quotient(num_, g);
        den_ = exact_quotient(den_, g);
    }
    const Rational lc = den_.leading_coefficient();
    if (lc != 1) {
        num_ *= 1 / lc;
        den_ *= 1 / lc;
    }
}

std::optional<Rational> RationalFunction::operator()(const Rational &k) const
{
    const Rational d = den_(k);
    if (d == 0) {
        return std::nullopt;
    }
    return num_(k) / d;
}

RationalFunction RationalFunction::shift(std::int64_t j) const
{
    RationalFunction out;
    out.num_ = num_.shift(j);
    out.den_ = den_.shift(j);
    return out;
}

RationalFunction &RationalFunction::operator+=(const RationalFunction &other)
{
    num_ = num_ * other.den_ + other.num_ * den_;
    den_ *= other.den_;
    normalize();
    return *this;
}

RationalFunction &RationalFunction::operator-=(const RationalFunction &other)
{
    num_ = num_ * other.den_ - other.num_ * den_;
    den_ *= other.den_;
    normalize();
    return *this;
}

RationalFunction &RationalFunction::operator*=(const RationalFunction &other)
{
    num_ *= other.num_;
    den_ *= other.den_;
    normalize();
    return *this;
}

RationalFunction &RationalFunction::operator/=(const RationalFunction &other)
{
    if (other.is_zero()) {
        throw std::domain_error("rational function division by zero");
    }
    num_ *= other.den_;
    den_ *= other.num_;
    normalize();
    return *this;
}

std::string to_string(const RationalFunction &r, std::string_view var)
{
    if (r.denominator() == Polynomial::constant(1)) {
        return to_string(r.numerator(), var);
    }
    return "(" + to_string(r.numerator(), var) + ")/(" + to_string(r.denominator(), var) + ")";
}

} // namespace gosum

#include <gosum/corrections.hpp>

#include <stdexcept>

namespace gosum
{

std::string to_string(Family family)
{
    switch (family) {
    case Family::bell:
        return "bell";
    case Family::f:
        return "f";
    case Family::g:
        return "g";
    }
    return "?";
}

Family parse_family(std::string_view name)
{
    if (name == "bell") {
        return Family::bell;
    }
    if (name == "f") {
        return Family::f;
    }
    if (name == "g") {
        return Family::g;
    }
    throw std::invalid_argument("unknown family '" + std::string(name) + "' (expected bell, f or g)");
}

namespace
{

void check_parameters(const Rational &a, const Rational &z)
{
    if (z == 0) {
        throw std::invalid_argument("z must be nonzero");
    }
    if (is_nonpositive_integer(a)) {
        throw std::invalid_argument("a must not be a nonpositive integer (got " + to_string(a) + ")");
    }
}

Rational binom(unsigned n, int k)
{
    if (k < 0 || static_cast<unsigned>(k) > n) {
        return 0;
    }
    return Rational(binomial(n, static_cast<unsigned>(k)));
}

std::vector<Rational> negated(std::vector<Rational> v)
{
    for (auto &x : v) {
        x = -x;
    }
    return v;
}

} // namespace

void BasisFamily::validate() const
{
    if (family != Family::bell) {
        check_parameters(a, z);
    }
}

Polynomial BasisFamily::basis(unsigned d) const
{
    const Polynomial k = Polynomial::variable();
    const Polynomial kd = Polynomial::monomial(1, d);
    const Polynomial k1d = Polynomial::monomial(1, d).shift(1);
    switch (family) {
    case Family::bell:
        return kd * k - k1d;
    case Family::f:
        return kd * Polynomial({a - 1, Rational(1)}) - k1d * z;
    case Family::g:
        return k1d * Polynomial({a, Rational(1)}) * z - kd;
    }
    return {};
}

TermSpec BasisFamily::pure_term() const
{
    validate();
    TermSpec t;
    switch (family) {
    case Family::bell:
        t.factorial_exponent = -1;
        break;
    case Family::f:
        t.geometric_base = z;
        t.rising_factors.push_back({a, -1});
        break;
    case Family::g:
        t.geometric_base = z;
        t.rising_factors.push_back({a, 1});
        break;
    }
    return normalize(std::move(t));
}

TermSpec BasisFamily::term(const Polynomial &p) const
{
    TermSpec t = pure_term();
    t.polynomial_part = p;
    return normalize(std::move(t));
}

CorrectionSequence bell_numbers(unsigned dmax)
{
    CorrectionSequence seq{Family::bell, 1, 1, {Rational(1)}};
    for (unsigned d = 0; d < dmax; ++d) {
        Rational next = 0;
        for (unsigned j = 0; j <= d; ++j) {
            next += binom(d, static_cast<int>(j)) * seq.values[j];
        }
        seq.values.push_back(next);
    }
    return seq;
}

CorrectionSequence f_correction(const Rational &a, const Rational &z, unsigned dmax)
{
    check_parameters(a, z);
    std::vector<Rational> c{Rational(-1)};
    for (unsigned d = 0; d < dmax; ++d) {
        Rational acc = 0;
        for (unsigned j = 0; j <= d; ++j) {
            acc += binom(d, static_cast<int>(j)) * c[j];
        }
        c.push_back((1 - a) * c[d] + z * acc);
    }
    return {Family::f, a, z, negated(std::move(c))};
}

CorrectionSequence g_correction(const Rational &a, const Rational &z, unsigned dmax)
{
    check_parameters(a, z);
    std::vector<Rational> c{Rational(-1)};
    for (unsigned d = 0; d < dmax; ++d) {
        Rational acc = 0;
        for (unsigned j = 0; j <= d; ++j) {
            const int jj = static_cast<int>(j);
            acc += (a * binom(d, jj) + binom(d, jj - 1)) * c[j];
        }
        c.push_back((c[d] - z * acc) / z);
    }
    return {Family::g, a, z, negated(std::move(c))};
}

CorrectionSequence recurrence_route(const BasisFamily &fam, unsigned dmax)
{
    switch (fam.family) {
    case Family::bell:
        return bell_numbers(dmax);
    case Family::f:
        return f_correction(fam.a, fam.z, dmax);
    case Family::g:
        return g_correction(fam.a, fam.z, dmax);
    }
    return {};
}

TruncatedSeries egf_f(const Rational &a, const Rational &z, unsigned order)
{
    check_parameters(a, z);
    const auto u = TruncatedSeries({Rational(0), 1 - a}, order)
                   + (TruncatedSeries::exp_linear(1, order) - TruncatedSeries::one(order)).scale(z);
    return u.exp();
}

TruncatedSeries egf_g(const Rational &a, const Rational &z, unsigned order)
{
    check_parameters(a, z);
    const auto u = TruncatedSeries({Rational(0), -a}, order)
                   + (TruncatedSeries::one(order) - TruncatedSeries::exp_linear(-1, order)).scale(1 / z);
    return u.exp();
}

CorrectionSequence egf_route(const BasisFamily &fam, unsigned dmax)
{
    switch (fam.family) {
    case Family::bell:
        return {Family::bell, 1, 1, bell_series(dmax).egf_coefficients()};
    case Family::f:
        return {Family::f, fam.a, fam.z, egf_f(fam.a, fam.z, dmax).egf_coefficients()};
    case Family::g:
        return {Family::g, fam.a, fam.z, egf_g(fam.a, fam.z, dmax).egf_coefficients()};
    }
    return {};
}

CorrectionSequence basis_reduction(const BasisFamily &fam, unsigned dmax)
{
    fam.validate();
    // reduced[j] = k^j + c(j), proof-level sign (c(0) = -1).
    std::vector<Polynomial> reduced{Polynomial::constant(-1)};
    std::vector<Rational> c{Rational(-1)};
    for (unsigned d = 0; d < dmax; ++d) {
        Polynomial q = fam.basis(d);
        for (unsigned j = d; j >= 1; --j) {
            const Rational coeff = q.coefficient(j);
            if (coeff != 0) {
                q -= reduced[j] * coeff;
            }
        }
        const Rational lead = q.coefficient(d + 1);
        if (q.degree() != static_cast<int>(d) + 1 || lead == 0) {
            throw std::logic_error("basis element has the wrong degree");
        }
        for (unsigned j = 1; j <= d; ++j) {
            if (q.coefficient(j) != 0) {
                throw std::logic_error("basis reduction left a middle power");
            }
        }
        const Rational next = q.coefficient(0) / lead;
        c.push_back(next);
        reduced.push_back(Polynomial::monomial(1, d + 1) + Polynomial::constant(next));
    }
    CorrectionSequence seq{fam.family, fam.a, fam.z, negated(std::move(c))};
    if (fam.family == Family::bell) {
        seq.a = 1;
        seq.z = 1;
    }
    return seq;
}

TermSpec summable_term(const BasisFamily &fam, unsigned d)
{
    const Rational constant = recurrence_route(fam, d).values[d];
    return fam.term(Polynomial::monomial(1, d) - Polynomial::constant(constant));
}

} // namespace gosum

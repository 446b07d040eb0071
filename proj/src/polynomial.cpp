#include <gosum/polynomial.hpp>

#include <algorithm>
#include <stdexcept>

namespace gosum
{

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients))
{
    trim();
}

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients)
{
    trim();
}

Polynomial Polynomial::constant(const Rational &c)
{
    return Polynomial({c});
}

Polynomial Polynomial::monomial(const Rational &c, unsigned degree)
{
    std::vector<Rational> coeffs(degree + 1);
    coeffs[degree] = c;
    return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::variable()
{
    return Polynomial({Rational(0), Rational(1)});
}

void Polynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

Rational Polynomial::coefficient(std::size_t i) const
{
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational Polynomial::leading_coefficient() const
{
    return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational Polynomial::operator()(const Rational &k) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * k + *it;
    }
    return acc;
}

Polynomial Polynomial::shift(const Rational &j) const
{
    if (j == 0 || is_constant()) {
        return *this;
    }
    // Horner in (k + j).
    std::vector<Rational> acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc.emplace_back(0);
        for (std::size_t i = acc.size() - 1; i > 0; --i) {
            acc[i] = acc[i - 1] + j * acc[i];
        }
        acc[0] = j * acc[0] + *it;
    }
    return Polynomial(std::move(acc));
}

Polynomial Polynomial::reflect() const
{
    auto coeffs = coeffs_;
    for (std::size_t i = 1; i < coeffs.size(); i += 2) {
        coeffs[i] = -coeffs[i];
    }
    return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::monic() const
{
    if (is_zero()) {
        return *this;
    }
    auto out = *this;
    out *= 1 / leading_coefficient();
    return out;
}

Polynomial &Polynomial::operator+=(const Polynomial &other)
{
    if (other.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size());
    }
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
        coeffs_[i] += other.coeffs_[i];
    }
    trim();
    return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &other)
{
    if (other.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size());
    }
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
        coeffs_[i] -= other.coeffs_[i];
    }
    trim();
    return *this;
}

Polynomial &Polynomial::operator*=(const Polynomial &other)
{
    if (is_zero() || other.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * other.coeffs_[j];
        }
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Polynomial &Polynomial::operator*=(const Rational &c)
{
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto &x : coeffs_) {
        x *= c;
    }
    return *this;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial &p, const Polynomial &q)
{
    if (q.is_zero()) {
        throw std::domain_error("polynomial division by zero");
    }
    if (p.degree() < q.degree()) {
        return {Polynomial(), p};
    }
    auto rem = p.coefficients();
    const auto &div = q.coefficients();
    const auto dq = div.size() - 1;
    const Rational inv_lc = 1 / div.back();
    std::vector<Rational> quot(rem.size() - dq);
    for (std::size_t i = quot.size(); i-- > 0;) {
        const Rational factor = rem[i + dq] * inv_lc;
        quot[i] = factor;
        if (factor == 0) {
            continue;
        }
        for (std::size_t j = 0; j <= dq; ++j) {
            rem[i + j] -= factor * div[j];
        }
    }
    rem.resize(dq);
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial exact_quotient(const Polynomial &p, const Polynomial &q)
{
    auto [quot, rem] = divmod(p, q);
    if (!rem.is_zero()) {
        throw std::domain_error("inexact polynomial division");
    }
    return quot;
}

Polynomial gcd(const Polynomial &p, const Polynomial &q)
{
    if (p.is_zero() && q.is_zero()) {
        throw std::domain_error("gcd of two zero polynomials");
    }
    auto a = p.monic();
    auto b = q.monic();
    while (!b.is_zero()) {
        auto r = divmod(a, b).second.monic();
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::vector<Integer> primitive_part(const Polynomial &p)
{
    if (p.is_zero()) {
        return {};
    }
    Integer den = 1;
    for (const auto &c : p.coefficients()) {
        den = lcm(den, Integer(c.get_den()));
    }
    std::vector<Integer> out;
    out.reserve(p.coefficients().size());
    Integer content = 0;
    for (const auto &c : p.coefficients()) {
        Integer v = c.get_num() * (den / c.get_den());
        content = gcd(content, v);
        out.push_back(std::move(v));
    }
    if (sgn(out.back()) < 0) {
        content = -content;
    }
    for (auto &v : out) {
        v /= content;
    }
    return out;
}

namespace
{

// Fraction-free (Bareiss) elimination; every intermediate entry is an
// integer minor of the input.
Integer bareiss_determinant(std::vector<std::vector<Integer>> m)
{
    const std::size_t n = m.size();
    if (n == 0) {
        return 1;
    }
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && m[r][k] == 0) {
                ++r;
            }
            if (r == n) {
                return 0;
            }
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

// Integer multiple of p and the scale used: p * scale has integer coefficients.
std::pair<std::vector<Integer>, Integer> clear_denominators(const Polynomial &p)
{
    Integer den = 1;
    for (const auto &c : p.coefficients()) {
        den = lcm(den, Integer(c.get_den()));
    }
    std::vector<Integer> out;
    for (const auto &c : p.coefficients()) {
        out.push_back(c.get_num() * (den / c.get_den()));
    }
    return {std::move(out), den};
}

Integer ceil_root(const Integer &value, unsigned n)
{
    Integer r;
    mpz_root(r.get_mpz_t(), value.get_mpz_t(), n);
    Integer check;
    mpz_pow_ui(check.get_mpz_t(), r.get_mpz_t(), n);
    if (check < value) {
        ++r;
    }
    return r;
}

Integer eval_integer(const std::vector<Integer> &coeffs, const Integer &x)
{
    Integer acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

} // namespace

Rational resultant(const Polynomial &p, const Polynomial &q)
{
    if (p.is_zero() || q.is_zero()) {
        throw std::domain_error("resultant with a zero polynomial");
    }
    const auto m = static_cast<std::size_t>(p.degree());
    const auto n = static_cast<std::size_t>(q.degree());
    auto [pi, ps] = clear_denominators(p);
    auto [qi, qs] = clear_denominators(q);
    const std::size_t size = m + n;
    std::vector<std::vector<Integer>> sylvester(size, std::vector<Integer>(size, 0));
    for (std::size_t row = 0; row < n; ++row) {
        for (std::size_t i = 0; i <= m; ++i) {
            sylvester[row][row + i] = pi[m - i];
        }
    }
    for (std::size_t row = 0; row < m; ++row) {
        for (std::size_t i = 0; i <= n; ++i) {
            sylvester[n + row][row + i] = qi[n - i];
        }
    }
    // Res(ps*p, qs*q) = ps^n qs^m Res(p, q).
    Integer scale_p;
    Integer scale_q;
    mpz_pow_ui(scale_p.get_mpz_t(), ps.get_mpz_t(), n);
    mpz_pow_ui(scale_q.get_mpz_t(), qs.get_mpz_t(), m);
    Rational res(bareiss_determinant(std::move(sylvester)), scale_p * scale_q);
    res.canonicalize();
    return res;
}

std::vector<Integer> nonneg_integer_roots(const Polynomial &p)
{
    if (p.is_zero()) {
        throw std::domain_error("roots of the zero polynomial");
    }
    auto coeffs = primitive_part(p);
    std::vector<Integer> roots;
    std::size_t low = 0;
    while (coeffs[low] == 0) {
        ++low;
    }
    if (low > 0) {
        roots.emplace_back(0);
        coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(low));
    }
    const std::size_t n = coeffs.size() - 1;
    if (n == 0) {
        return roots;
    }
    // Fujiwara bound: every root has modulus below
    // 2 max(|a_{n-1}/a_n|, |a_{n-2}/a_n|^(1/2), ..., |a_0/(2 a_n)|^(1/n)).
    const Integer lead = abs(coeffs[n]);
    Integer bound = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        Integer mag = abs(coeffs[n - i]);
        if (i == n) {
            mag = (mag + 1) / 2;
        }
        Integer ratio;
        mpz_cdiv_q(ratio.get_mpz_t(), mag.get_mpz_t(), lead.get_mpz_t());
        bound = std::max(bound, ceil_root(ratio, static_cast<unsigned>(i)));
    }
    bound *= 2;

    // Rational root theorem: a nonzero integer root divides the constant term.
    const Integer constant = abs(coeffs[0]);
    Integer sqrt_constant;
    mpz_sqrt(sqrt_constant.get_mpz_t(), constant.get_mpz_t());
    std::vector<Integer> candidates;
    if (bound <= sqrt_constant) {
        for (Integer j = 1; j <= bound; ++j) {
            if (constant % j == 0) {
                candidates.push_back(j);
            }
        }
    } else {
        for (Integer j = 1; j <= sqrt_constant; ++j) {
            if (constant % j == 0) {
                candidates.push_back(j);
                candidates.push_back(constant / j);
            }
        }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    }
    for (const auto &j : candidates) {
        if (j <= bound && eval_integer(coeffs, j) == 0) {
            roots.push_back(j);
        }
    }
    return roots;
}

Polynomial interpolate(std::span<const Rational> xs, std::span<const Rational> ys)
{
    if (xs.size() != ys.size()) {
        throw std::invalid_argument("interpolate: size mismatch");
    }
    const std::size_t n = xs.size();
    // Newton divided differences.
    std::vector<Rational> diff(ys.begin(), ys.end());
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = n - 1; i >= level; --i) {
            const Rational span = xs[i] - xs[i - level];
            if (span == 0) {
                throw std::invalid_argument("interpolate: repeated abscissa");
            }
            diff[i] = (diff[i] - diff[i - 1]) / span;
        }
    }
    Polynomial result;
    for (std::size_t i = n; i-- > 0;) {
        result *= Polynomial({-xs[i], Rational(1)});
        result += Polynomial::constant(diff[i]);
    }
    return result;
}

std::string to_string(const Polynomial &p, std::string_view var)
{
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    const auto &coeffs = p.coefficients();
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        const Rational &c = coeffs[i];
        if (c == 0) {
            continue;
        }
        const bool negative = sgn(c) < 0;
        if (out.empty()) {
            if (negative) {
                out += "-";
            }
        } else {
            out += negative ? " - " : " + ";
        }
        const Rational mag = abs(c);
        std::string power;
        if (i >= 1) {
            power = std::string(var);
            if (i > 1) {
                power += "^" + std::to_string(i);
            }
        }
        if (power.empty()) {
            out += to_string(mag);
        } else if (mag == 1) {
            out += power;
        } else {
            out += to_string(mag) + "*" + power;
        }
    }
    return out;
}

} // namespace gosum

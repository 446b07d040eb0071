#include <gosum/gosper.hpp>

#include <algorithm>

namespace gosum
{

std::vector<Integer> dispersion_set(const Polynomial &p, const Polynomial &q)
{
    if (p.is_zero() || q.is_zero()) {
        throw std::domain_error("dispersion of a zero polynomial");
    }
    if (p.is_constant() || q.is_constant()) {
        return {};
    }
    // The leading coefficient of q(k+j) in k does not depend on j, so the
    // resultant is a polynomial in j of degree at most deg p * deg q and is
    // recovered exactly by interpolation.
    const auto points = static_cast<std::size_t>(p.degree()) * static_cast<std::size_t>(q.degree()) + 1;
    std::vector<Rational> js;
    std::vector<Rational> values;
    js.reserve(points);
    values.reserve(points);
    for (std::size_t j = 0; j < points; ++j) {
        js.emplace_back(static_cast<unsigned long>(j));
        values.push_back(resultant(p, q.shift(static_cast<std::int64_t>(j))));
    }
    const Polynomial res = interpolate(js, values);
    return nonneg_integer_roots(res);
}

NormalForm normal_form(const RationalFunction &r)
{
    if (r.is_zero()) {
        throw std::domain_error("normal form of the zero rational function");
    }
    NormalForm nf;
    nf.z = r.numerator().leading_coefficient();
    nf.a = r.numerator().monic();
    nf.b = r.denominator();
    nf.c = Polynomial::constant(1);
    for (const auto &jj : dispersion_set(nf.a, nf.b)) {
        if (!jj.fits_slong_p()) {
            throw std::overflow_error("dispersion too large");
        }
        const long j = jj.get_si();
        const Polynomial g = gcd(nf.a, nf.b.shift(j));
        if (g.is_constant()) {
            continue;
        }
        nf.a = exact_quotient(nf.a, g);
        nf.b = exact_quotient(nf.b, g.shift(-j));
        for (long i = 1; i <= j; ++i) {
            nf.c *= g.shift(-i);
        }
    }
    nf.c = nf.c.monic();
    return nf;
}

RationalFunction reconstruct(const NormalForm &nf)
{
    return RationalFunction(nf.scaled_a() * nf.c.shift(1), nf.b * nf.c);
}

std::optional<unsigned> degree_bound(const Polynomial &a, const Polynomial &b, const Polynomial &c)
{
    const Polynomial lhs = a;
    const Polynomial rhs = b.shift(-1);
    const Polynomial plus = lhs + rhs;
    const Polynomial minus = lhs - rhs;
    const int dp = plus.degree();
    const int dm = minus.degree();
    const int dc = c.degree();
    if (c.is_zero()) {
        return 0U;
    }
    std::optional<int> bound;
    if (dm >= dp) {
        bound = dc - dm;
    } else if (dm < dp - 1) {
        bound = dc - dp + 1;
    } else {
        // Leading terms may cancel at degree -2 lc(minus)/lc(plus).
        bound = dc - dp + 1;
        const Rational special = -2 * minus.leading_coefficient() / plus.leading_coefficient();
        if (is_integer(special) && sgn(special) >= 0) {
            const Integer &v = special.get_num();
            if (!v.fits_sint_p()) {
                throw std::overflow_error("degree bound too large");
            }
            bound = std::max(*bound, static_cast<int>(v.get_si()));
        }
    }
    if (*bound < 0) {
        return std::nullopt;
    }
    return static_cast<unsigned>(*bound);
}

std::optional<unsigned> degree_bound(const NormalForm &nf)
{
    return degree_bound(nf.scaled_a(), nf.b, nf.c);
}

namespace
{

// Any solution of the linear system m * u = rhs, with free unknowns set to 0.
std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs,
                                                  std::size_t unknowns)
{
    const std::size_t rows = m.size();
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < unknowns && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && m[piv][col] == 0) {
            ++piv;
        }
        if (piv == rows) {
            continue;
        }
        std::swap(m[piv], m[row]);
        std::swap(rhs[piv], rhs[row]);
        const Rational inv = 1 / m[row][col];
        for (std::size_t j = col; j < unknowns; ++j) {
            m[row][j] *= inv;
        }
        rhs[row] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col] == 0) {
                continue;
            }
            const Rational factor = m[i][col];
            for (std::size_t j = col; j < unknowns; ++j) {
                m[i][j] -= factor * m[row][j];
            }
            rhs[i] -= factor * rhs[row];
        }
        pivot_cols.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < rows; ++i) {
        if (rhs[i] != 0) {
            return std::nullopt;
        }
    }
    std::vector<Rational> u(unknowns);
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
        u[pivot_cols[i]] = rhs[i];
    }
    return u;
}

} // namespace

std::optional<Polynomial> solve_gosper(const Polynomial &a, const Polynomial &b, const Polynomial &c)
{
    const auto bound = degree_bound(a, b, c);
    if (!bound) {
        return std::nullopt;
    }
    const Polynomial lagged_b = b.shift(-1);
    const std::size_t unknowns = *bound + 1;
    // Column i: image of k^i under x -> x(k+1) a(k) - x(k) b(k-1).
    std::vector<Polynomial> columns;
    std::size_t rows = c.is_zero() ? 1 : static_cast<std::size_t>(c.degree()) + 1;
    for (std::size_t i = 0; i < unknowns; ++i) {
        const Polynomial ki = Polynomial::monomial(1, static_cast<unsigned>(i));
        columns.push_back(ki.shift(1) * a - ki * lagged_b);
        rows = std::max(rows, static_cast<std::size_t>(std::max(columns.back().degree(), 0)) + 1);
    }
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(unknowns));
    std::vector<Rational> rhs(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t i = 0; i < unknowns; ++i) {
            m[r][i] = columns[i].coefficient(r);
        }
        rhs[r] = c.coefficient(r);
    }
    auto u = solve_linear(std::move(m), std::move(rhs), unknowns);
    if (!u) {
        return std::nullopt;
    }
    return Polynomial(std::move(*u));
}

std::optional<Polynomial> solve_gosper(const NormalForm &nf)
{
    return solve_gosper(nf.scaled_a(), nf.b, nf.c);
}

bool verify_certificate(const RationalFunction &r, const Certificate &cert)
{
    const auto &mult = cert.multiplier;
    return mult.shift(1) * r - mult == RationalFunction(Polynomial::constant(1));
}

std::optional<Certificate> antidifference(const TermSpec &t)
{
    if (t.is_zero()) {
        return Certificate{Polynomial(), RationalFunction(), NormalForm{1, Polynomial::constant(1),
                                                                       Polynomial::constant(1),
                                                                       Polynomial::constant(1)}};
    }
    const RationalFunction r = term_ratio(t);
    NormalForm nf = normal_form(r);
    auto x = solve_gosper(nf);
    if (!x) {
        return std::nullopt;
    }
    RationalFunction multiplier(*x * nf.b.shift(-1), nf.c);
    Certificate cert{std::move(*x), std::move(multiplier), std::move(nf)};
    if (!verify_certificate(r, cert)) {
        throw std::logic_error("Gosper certificate failed verification for " + pretty_print(t));
    }
    return cert;
}

Rational antidifference_at(const TermSpec &t, const Certificate &cert, unsigned k0)
{
    if (t.is_zero()) {
        return 0;
    }
    const auto &nf = cert.normal_form;
    const RationalFunction poly_over_shell(t.polynomial_part, nf.c);
    const Polynomial lagged_b = nf.b.shift(-1);
    // S(k0) = S(m) - sum_{k0 <= k < m} f(k) for the first m >= k0 off the
    // poles of p/c.
    Rational carried = 0;
    for (unsigned m = k0;; ++m) {
        if (auto h = poly_over_shell(m)) {
            return cert.x(m) * lagged_b(m) * *h * pure_part_eval(t, m) - carried;
        }
        carried += term_eval(t, m);
    }
}

Rational definite_sum(const TermSpec &t, const Certificate &cert, unsigned n)
{
    return antidifference_at(t, cert, n + 1) - antidifference_at(t, cert, 0);
}

Rational definite_sum(const TermSpec &t, unsigned n)
{
    const auto cert = antidifference(t);
    if (!cert) {
        throw NotSummable(pretty_print(t) + " is not Gosper summable");
    }
    return definite_sum(t, *cert, n);
}

Rational brute_sum(const TermSpec &t, unsigned n)
{
    Rational s = 0;
    for (unsigned k = 0; k <= n; ++k) {
        s += term_eval(t, k);
    }
    return s;
}

} // namespace gosum

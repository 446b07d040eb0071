#include <doctest.h>

#include <gosum/gosper.hpp>

using namespace gosum;

namespace
{

const Polynomial one{1};
const Polynomial k = Polynomial::variable();

} // namespace

TEST_CASE("normal forms of the worked examples")
{
    CHECK(normal_form(term_ratio(parse_term("1/fact(k)"))) == NormalForm{1, one, Polynomial{1, 1}, one});
    CHECK(normal_form(RationalFunction(k, Polynomial{1, 1} * Polynomial{-1, 1}))
          == NormalForm{1, one, Polynomial{1, 1}, Polynomial{-1, 1}});
    // z^k rf(a, k): ratio z (a + k).
    CHECK(normal_form(term_ratio(parse_term("pow(3,k)*rf(1/2,k)")))
          == NormalForm{3, Polynomial{Rational(1, 2), 1}, one, one});
    CHECK_THROWS_AS(normal_form(RationalFunction()), std::domain_error);
}

TEST_CASE("dispersion set")
{
    // roots of p: 0; roots of q(k+j): -1-j, 1-j.
    CHECK(dispersion_set(k, Polynomial{1, 1} * Polynomial{-1, 1}) == std::vector<Integer>{1});
    CHECK(dispersion_set(one, k).empty());
    // p = (k+5)(k+1/2), q = k: j = 5.
    CHECK(dispersion_set(Polynomial{5, 1} * Polynomial{Rational(1, 2), 1}, k) == std::vector<Integer>{5});
    CHECK(dispersion_set(Polynomial{3, 1} * Polynomial{1, 1}, k * Polynomial{1, 1}) == std::vector<Integer>{0, 1, 2, 3});
}

TEST_CASE("degree bound case analysis")
{
    // A = 1, B = k: s+ and s- both degree 1, e = 0 - 1.
    CHECK_FALSE(degree_bound(one, Polynomial{1, 1}, one).has_value());
    CHECK(degree_bound(one, Polynomial{1, 1}, Polynomial{-1, 1}) == 0U);
    for (unsigned d = 0; d <= 6; ++d) {
        const Polynomial pd = Polynomial::monomial(1, d + 1) - Polynomial::monomial(1, d).shift(1);
        const auto e = degree_bound(one, Polynomial{1, 1}, pd);
        REQUIRE(e.has_value());
        CHECK(*e >= d);
    }
    // A = k + 2, B = k: s- = 2 (deg 0), s+ = 2k + 2 (deg 1); candidates
    // deg c - 1 + 1 and -2 * 2 / 2 = -2.
    CHECK(degree_bound(Polynomial{2, 1}, Polynomial{1, 1}, Polynomial{0, 0, 1}) == 2U);
    // A = k - 4, B = k: s- = -4, s+ = 2k: candidate -2(-4)/2 = 4 beats deg c = 0.
    CHECK(degree_bound(Polynomial{-4, 1}, Polynomial{1, 1}, one) == 4U);
}

TEST_CASE("Gosper equation solutions")
{
    CHECK_FALSE(solve_gosper(one, Polynomial{1, 1}, one).has_value());
    CHECK(solve_gosper(one, Polynomial{1, 1}, Polynomial{-1, 1}) == Polynomial{-1});
    for (unsigned d = 0; d <= 6; ++d) {
        const Polynomial pd = Polynomial::monomial(1, d + 1) - Polynomial::monomial(1, d).shift(1);
        const auto x = solve_gosper(one, Polynomial{1, 1}, pd);
        REQUIRE(x.has_value());
        CHECK(x->shift(1) - *x * k == pd);
    }
    // (k^2 - 2)/k!: the shell is k^2 - 2 itself.
    const auto t = parse_term("(k^2-2)/fact(k)");
    const auto nf = normal_form(term_ratio(t));
    CHECK(nf.c == Polynomial{-2, 0, 1});
    const auto x = solve_gosper(nf);
    REQUIRE(x.has_value());
    CHECK(x->shift(1) * nf.scaled_a() - *x * nf.b.shift(-1) == nf.c);
}

TEST_CASE("antidifference verdicts")
{
    CHECK_FALSE(antidifference(parse_term("1/fact(k)")).has_value());
    const auto cert = antidifference(parse_term("(k-1)/fact(k)"));
    REQUIRE(cert.has_value());
    CHECK(cert->x == Polynomial{-1});
    CHECK(cert->multiplier == RationalFunction(-k, Polynomial{-1, 1}));

    const auto t = parse_term("(k^2-11)*fact(k)/pow(-2,k)");
    const auto c2 = antidifference(t);
    REQUIRE(c2.has_value());
    for (unsigned n = 0; n <= 12; ++n) {
        const Rational closed = (Rational(n) - 3) * Rational(factorial(n + 1)) / pow(Rational(-2), n) - 8;
        CHECK(definite_sum(t, *c2, n) == closed);
    }

    const auto zero = antidifference(parse_term("0"));
    REQUIRE(zero.has_value());
    CHECK(zero->x.is_zero());
    CHECK(definite_sum(parse_term("0"), 7) == 0);

    // Geometric and polynomial terms are summable.
    CHECK(antidifference(parse_term("pow(3,k)")).has_value());
    CHECK(antidifference(parse_term("k^3")).has_value());
    CHECK(definite_sum(parse_term("k^3"), 10) == 3025);
    CHECK(definite_sum(parse_term("pow(1/2,k)"), 4) == Rational(31, 16));
    CHECK_FALSE(antidifference(parse_term("1/rf(1/2,k)")).has_value());
}

TEST_CASE("certificate verification")
{
    const RationalFunction r(k, Polynomial{1, 1} * Polynomial{-1, 1});
    Certificate cert{Polynomial{-1}, RationalFunction(-k, Polynomial{-1, 1}), {}};
    CHECK(verify_certificate(r, cert));
    Certificate perturbed = cert;
    perturbed.multiplier += RationalFunction(one);
    CHECK_FALSE(verify_certificate(r, perturbed));
    Certificate zero{Polynomial(), RationalFunction(), {}};
    CHECK_FALSE(verify_certificate(r, zero));
}

TEST_CASE("definite sums")
{
    CHECK(definite_sum(parse_term("(k-1)/fact(k)"), 5) == Rational(-1, 120));
    // -(n^3 + 4n^2 + 9n + 15)/n! at n = 3.
    const auto t = parse_term("(k^4-15)/fact(k)");
    CHECK(definite_sum(t, 3) == Rational(-35, 2));
    CHECK(brute_sum(t, 3) == Rational(-35, 2));
    for (const char *src : {"(k-1)/fact(k)", "pow(2,k)*(k-2)/fact(k)", "k^2", "(k^2-11)*fact(k)/pow(-2,k)"}) {
        const auto term = parse_term(src);
        CHECK(definite_sum(term, 0) == term_eval(term, 0));
    }
    CHECK_THROWS_AS(definite_sum(parse_term("1/fact(k)"), 3), NotSummable);
}

TEST_CASE("shell pole at a nonnegative integer")
{
    // c(k) = k - 1 vanishes at k = 1; S(1) must still come out right.
    const auto t = parse_term("(k-1)/fact(k)");
    const auto cert = antidifference(t);
    REQUIRE(cert.has_value());
    CHECK(cert->normal_form.c(1) == 0);
    CHECK(antidifference_at(t, *cert, 1) == -1);
    CHECK(antidifference_at(t, *cert, 0) == 0);
}

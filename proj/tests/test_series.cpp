#include <doctest.h>

#include <gosum/series.hpp>
#include <support/oracles.hpp>

using namespace gosum;
namespace oracle = gosum::testing;

TEST_CASE("exp of a linear argument")
{
    const auto e = TruncatedSeries::exp_linear(Rational(3, 2), 8);
    CHECK(e.egf_coefficients() == oracle::egf_exp_linear(Rational(3, 2), 8));
    CHECK(TruncatedSeries::exp_linear(0, 5) == TruncatedSeries::one(5));
    CHECK(e.coefficient(2) == Rational(9, 8));
}

TEST_CASE("Bell series")
{
    CHECK(bell_series(20).egf_coefficients() == oracle::bell_triangle(20));
    CHECK(bell_series(4).egf_coefficients() == std::vector<Rational>{1, 1, 2, 5, 15});
}

TEST_CASE("from_egf and egf_coefficient invert each other")
{
    const std::vector<Rational> v{1, -2, Rational(1, 3), 7, 0, 5};
    const auto s = TruncatedSeries::from_egf(v, 5);
    CHECK(s.egf_coefficients() == v);
    CHECK(s.coefficient(3) == Rational(7, 6));
}

TEST_CASE("products, powers and inverses")
{
    const auto b = bell_series(12);
    const auto bv = b.egf_coefficients();
    CHECK((b * b).egf_coefficients() == oracle::egf_product(bv, bv));
    CHECK(b.pow(3).egf_coefficients() == oracle::egf_power(bv, 3));
    CHECK(b.pow(0) == TruncatedSeries::one(12));
    CHECK(b.inverse().egf_coefficients() == oracle::egf_inverse(bv));
    CHECK(b.pow(-2) * b.pow(2) == TruncatedSeries::one(12));
    CHECK(b * b.inverse() == TruncatedSeries::one(12));
    CHECK_THROWS_AS(static_cast<void>(TruncatedSeries({0, 1}, 3).inverse()), std::domain_error);
}

TEST_CASE("argument reflection and scaling")
{
    const auto b = bell_series(10);
    CHECK(b.negate_argument().egf_coefficients() == oracle::egf_reflect(b.egf_coefficients()));
    CHECK(b.scale(Rational(-1, 2)).coefficient(3) == b.coefficient(3) * Rational(-1, 2));
    // e^x e^(-x) = 1
    CHECK(TruncatedSeries::exp_linear(1, 9) * TruncatedSeries::exp_linear(1, 9).negate_argument()
          == TruncatedSeries::one(9));
}

TEST_CASE("derivative and exp")
{
    const auto e = TruncatedSeries::exp_linear(5, 10);
    const auto de = e.derivative();
    CHECK(de.order() == 9);
    CHECK(de == TruncatedSeries::exp_linear(5, 9).scale(5));
    // B'(x) = e^x B(x)
    const auto b = bell_series(11);
    CHECK(b.derivative() == TruncatedSeries::exp_linear(1, 10) * bell_series(10));
    // exp(3x) from the series 3x.
    CHECK(TruncatedSeries({0, 3}, 10).exp() == TruncatedSeries::exp_linear(3, 10));
    CHECK_THROWS_AS(static_cast<void>(TruncatedSeries({1, 3}, 4).exp()), std::domain_error);
}

TEST_CASE("mixed orders truncate to the smaller one")
{
    const auto s = TruncatedSeries::exp_linear(1, 6) + TruncatedSeries::exp_linear(1, 3);
    CHECK(s.order() == 3);
    CHECK(s.coefficient(3) == Rational(1, 3));
}

// Runs every acceptance criterion exactly and prints one PASS/FAIL line each.
// Exit status is the number of failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <gosum/corrections.hpp>
#include <gosum/gosper.hpp>
#include <gosum/series.hpp>
#include <gosum/tables.hpp>
#include <gosum/term.hpp>
#include <support/random_terms.hpp>

using namespace gosum;

namespace
{

// Collects the first failure of a criterion.
class Check
{
public:
    void expect(bool cond, const std::string &what)
    {
        ++count_;
        if (!cond && failure_.empty()) {
            failure_ = what;
        }
    }
    void equal(const Rational &lhs, const Rational &rhs, const std::string &what)
    {
        expect(lhs == rhs, what + ": " + to_string(lhs) + " != " + to_string(rhs));
    }
    void equal(const std::vector<Rational> &lhs, const std::vector<Rational> &rhs, const std::string &what)
    {
        expect(lhs == rhs, what + ": " + join(lhs) + " != " + join(rhs));
    }
    [[nodiscard]] bool ok() const
    {
        return failure_.empty();
    }
    [[nodiscard]] const std::string &failure() const
    {
        return failure_;
    }
    [[nodiscard]] long count() const
    {
        return count_;
    }

private:
    static std::string join(const std::vector<Rational> &v)
    {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
            s += (i ? ", " : "") + to_string(v[i]);
        }
        return s + "]";
    }
    std::string failure_;
    long count_ = 0;
};

Rational fact(unsigned n)
{
    return Rational(factorial(n));
}

std::vector<Rational> ints(std::initializer_list<long> v)
{
    std::vector<Rational> out;
    for (long x : v) {
        out.emplace_back(x);
    }
    return out;
}

std::vector<Rational> prefix(const std::vector<Rational> &v, std::size_t n)
{
    return {v.begin(), v.begin() + static_cast<std::ptrdiff_t>(std::min(n, v.size()))};
}

void sum_identity(Check &c, const std::string &src, const std::function<Rational(unsigned)> &closed, unsigned nmax)
{
    const TermSpec t = parse_term(src);
    const auto cert = antidifference(t);
    c.expect(cert.has_value(), src + " not summable");
    if (!cert) {
        return;
    }
    for (unsigned n = 0; n <= nmax; ++n) {
        const Rational expected = closed(n);
        c.equal(definite_sum(t, *cert, n), expected, src + " definite_sum n=" + std::to_string(n));
        c.equal(brute_sum(t, n), expected, src + " brute_sum n=" + std::to_string(n));
    }
}

void criterion1(Check &c)
{
    c.equal(prefix(bell_numbers(4).values, 5), ints({1, 1, 2, 5, 15}), "constants");
    sum_identity(c, "(k-1)/fact(k)", [](unsigned n) -> Rational { return -1 / fact(n); }, 25);
    sum_identity(c, "(k^2-2)/fact(k)", [](unsigned n) -> Rational { return -Rational(n + 2) / fact(n); }, 25);
    sum_identity(
        c, "(k^3-5)/fact(k)", [](unsigned n) -> Rational { return -Rational(n * n + 3 * n + 5) / fact(n); }, 25);
    sum_identity(
        c, "(k^4-15)/fact(k)",
        [](unsigned n) -> Rational { return -Rational(n * n * n + 4 * n * n + 9 * n + 15) / fact(n); }, 25);
}

void criterion2(Check &c)
{
    c.expect(!antidifference(parse_term("1/fact(k)")).has_value(), "1/fact(k) summable");
    const std::vector<BasisFamily> families{
        {Family::bell},
        {Family::f, 1, 2},
        {Family::f, Rational(1, 2), 1},
        {Family::g, 1, Rational(-1, 2)},
        {Family::g, 1, -1},
        {Family::g, Rational(1, 2), -1},
    };
    for (const auto &fam : families) {
        const auto values = recurrence_route(fam, 6).values;
        for (unsigned d = 0; d <= 6; ++d) {
            const Polynomial kd = Polynomial::monomial(1, d);
            const auto exact = fam.term(kd - Polynomial::constant(values[d]));
            c.expect(antidifference(exact).has_value(), pretty_print(exact) + " not summable");
            for (int delta : {1, -1}) {
                const auto t = fam.term(kd - Polynomial::constant(values[d] + delta));
                c.expect(!antidifference(t).has_value(), pretty_print(t) + " summable");
            }
        }
    }
}

void criterion3(Check &c)
{
    const BasisFamily bell{Family::bell};
    const auto rec = recurrence_route(bell, 15).values;
    c.equal(prefix(rec, 5), ints({1, 1, 2, 5, 15}), "b(0..4)");
    c.equal(egf_route(bell, 15).values, rec, "egf route");
    c.equal(basis_reduction(bell, 15).values, rec, "basis route");
}

void criterion4(Check &c)
{
    c.equal(prefix(f_correction(1, 2, 4).values, 5), ints({1, 2, 6, 22, 94}), "f(1,2) constants");
    const auto two = [](unsigned n) -> Rational { return pow(Rational(2), n + 1) / fact(n); };
    sum_identity(c, "(k-2)*pow(2,k)/fact(k)", [&](unsigned n) -> Rational { return -two(n); }, 25);
    sum_identity(c, "(k^2-6)*pow(2,k)/fact(k)", [&](unsigned n) -> Rational { return -Rational(n + 3) * two(n); }, 25);
    sum_identity(
        c, "(k^3-22)*pow(2,k)/fact(k)",
        [&](unsigned n) -> Rational { return -Rational(n * n + 4 * n + 11) * two(n); }, 25);
    sum_identity(
        c, "(k^4-94)*pow(2,k)/fact(k)",
        [&](unsigned n) -> Rational { return -Rational(n * n * n + 5 * n * n + 17 * n + 47) * two(n); }, 25);
}

void criterion5(Check &c)
{
    c.equal(g_correction(1, Rational(-1, 2), 2).values[2], 11, "g(1,-1/2) c(2)");
    sum_identity(
        c, "(k^2-11)*fact(k)/pow(-2,k)",
        [](unsigned n) -> Rational { return (Rational(n) - 3) * fact(n + 1) / pow(Rational(-2), n) - 8; }, 20);
}

void criterion6(Check &c)
{
    constexpr unsigned order = 15;
    const auto bell = bell_series(order);
    for (const Rational a : {Rational(1), Rational(1, 2), Rational(2)}) {
        for (int z : {1, 2, 3}) {
            const auto rhs = TruncatedSeries::exp_linear(1 - a, order) * bell.pow(z);
            const auto lhs = egf_f(a, z, order);
            const std::string label = "f a=" + to_string(a) + " z=" + std::to_string(z);
            c.equal(lhs.coefficients(), rhs.coefficients(), label);
            c.equal(f_correction(a, z, order).values, rhs.egf_coefficients(), label + " constants");
        }
        for (int z : {-1, -2}) {
            const auto rhs = TruncatedSeries::exp_linear(-a, order) * bell.negate_argument().pow(-z);
            const auto lhs = egf_g(a, Rational(1) / z, order);
            const std::string label = "g a=" + to_string(a) + " 1/z=1/" + std::to_string(z);
            c.equal(lhs.coefficients(), rhs.coefficients(), label);
            c.equal(g_correction(a, Rational(1) / z, order).values, rhs.egf_coefficients(), label + " constants");
        }
    }
}

void criterion7(Check &c)
{
    const std::vector<std::vector<Rational>> expected{
        ints({1}), ints({1, 1}), ints({3, 1, 1}), ints({9, 4, 1, 1}), ints({31, 14, 5, 1, 1})};
    c.expect(build_B(5).rows() == expected, "build_B(5) rows");
    for (unsigned n = 1; n <= 20; ++n) {
        c.expect((build_A(n) * build_B(n)).is_identity(), "A*B != I at dmax " + std::to_string(n));
    }
    c.equal(gould_numbers(5), ints({1, 1, 3, 9, 31}), "gould prefix");
}

void criterion8(Check &c)
{
    const auto b = bell_numbers(10).values;
    for (unsigned d = 0; d <= 10; ++d) {
        const Polynomial p = closed_form_power_sum(d);
        for (unsigned n = 0; n <= 25; ++n) {
            Rational lhs = 0;
            for (unsigned k = 0; k < n; ++k) {
                lhs += (pow(Rational(k), d) - b[d]) / fact(k);
            }
            c.equal(lhs, -p(n) / fact(n), "d=" + std::to_string(d) + " n=" + std::to_string(n));
        }
    }
}

void criterion9(Check &c)
{
    for (unsigned d = 0; d <= 8; ++d) {
        for (unsigned n = 1; n <= 10; ++n) {
            c.expect(verify_bell_identity(d, n), "d=" + std::to_string(d) + " n=" + std::to_string(n));
        }
    }
}

void criterion10(Check &c)
{
    using gosum::testing::TermGenerator;
    TermGenerator gen(20261016);
    constexpr unsigned nmax = 30;
    int summable = 0;
    for (int i = 0; i < 200; ++i) {
        const TermSpec t = gen.term();
        const std::string label = pretty_print(t);
        const RationalFunction r = term_ratio(t);
        const NormalForm nf = normal_form(r);
        c.expect(reconstruct(nf) == r, label + ": reconstruction");
        const auto disp = dispersion_set(r.numerator(), r.denominator());
        const long limit = 2 * (disp.empty() ? 0 : disp.back().get_si()) + 5;
        for (long j = 0; j <= limit; ++j) {
            c.expect(gcd(nf.a, nf.b.shift(j)).degree() == 0, label + ": gcd(a, b(k+" + std::to_string(j) + "))");
        }
        const auto cert = antidifference(t);
        if (cert) {
            ++summable;
            c.expect(verify_certificate(r, *cert), label + ": certificate");
            for (unsigned n = 0; n <= nmax; ++n) {
                c.equal(definite_sum(t, *cert, n), brute_sum(t, n), label + ": n=" + std::to_string(n));
            }
        }
    }
    // Random hypergeometric terms are rarely summable, so add terms built to
    // be summable.
    for (int i = 0; i < 200; ++i) {
        const auto s = gen.summable_term();
        if (!s) {
            continue;
        }
        const std::string label = pretty_print(s->term);
        const RationalFunction r = term_ratio(s->term);
        c.expect(reconstruct(normal_form(r)) == r, label + ": reconstruction");
        const auto cert = antidifference(s->term);
        c.expect(cert.has_value(), label + ": not summable");
        if (!cert) {
            continue;
        }
        ++summable;
        c.expect(verify_certificate(r, *cert), label + ": certificate");
        for (unsigned n = 0; n <= nmax; ++n) {
            c.equal(definite_sum(s->term, *cert, n), brute_sum(s->term, n), label + ": n=" + std::to_string(n));
        }
    }
    c.expect(summable >= 100, "only " + std::to_string(summable) + " summable cases");
}

struct Criterion {
    int id;
    const char *title;
    void (*run)(Check &);
};

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "closed forms of sum (k^d - b(d))/k!, d = 1..4, n <= 25", criterion1},
        {2, "non-summability of 1/k! and of c(d) +- 1 variants, d <= 6, all families", criterion2},
        {3, "Bell numbers by recurrence, EGF and basis reduction through d = 15", criterion3},
        {4, "f family a = 1, z = 2: constants and the 2^k closed forms, n <= 25", criterion4},
        {5, "g family a = 1, z = -1/2: c(2) = 11 and the (-2)^k closed form, n <= 20", criterion5},
        {6, "generating function convolutions through order 15", criterion6},
        {7, "inverse change-of-basis table, A B = I through 20, Gould prefix", criterion7},
        {8, "explicit power-sum formula, d <= 10, n <= 25", criterion8},
        {9, "Bell identity, d <= 8, n = 1..10", criterion9},
        {10, "certificates, normal forms and sums on randomized terms", criterion10},
    };
    int failed = 0;
    for (const auto &cr : criteria) {
        Check c;
        const auto start = std::chrono::steady_clock::now();
        try {
            cr.run(c);
        } catch (const std::exception &e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream line;
        line << (c.ok() ? "PASS" : "FAIL") << " criterion " << cr.id << ": " << cr.title << " (" << c.count()
             << " checks, " << ms << " ms)";
        if (!c.ok()) {
            line << "\n     " << c.failure();
            ++failed;
        }
        std::cout << line.str() << std::endl;
    }
    return failed;
}

#ifndef GOSUM_TESTS_RANDOM_TERMS_HPP
#define GOSUM_TESTS_RANDOM_TERMS_HPP

#include <random>

#include <gosum/gosper.hpp>
#include <gosum/term.hpp>

namespace gosum::testing
{

class TermGenerator
{
public:
    explicit TermGenerator(std::uint64_t seed) : rng_(seed) {}

    int integer(int lo, int hi)
    {
        return std::uniform_int_distribution<int>(lo, hi)(rng_);
    }

    Rational rational(int lo, int hi, int max_den = 3)
    {
        Rational r(integer(lo, hi), integer(1, max_den));
        r.canonicalize();
        return r;
    }

    Polynomial polynomial(int max_degree)
    {
        const int deg = integer(0, max_degree);
        std::vector<Rational> c(static_cast<std::size_t>(deg) + 1);
        for (auto &x : c) {
            x = rational(-5, 5, 2);
        }
        while (c.back() == 0) {
            c.back() = rational(-5, 5, 2);
        }
        Polynomial p(std::move(c));
        return p;
    }

    // Random term with no polynomial part. Rising factors with a negative
    // exponent never get a nonpositive integer base.
    TermSpec pure_term()
    {
        TermSpec t;
        do {
            t.geometric_base = rational(-3, 3);
        } while (t.geometric_base == 0);
        const int factors = integer(0, 2);
        for (int i = 0; i < factors; ++i) {
            RisingFactor f;
            do {
                f.exponent = integer(-2, 2);
            } while (f.exponent == 0);
            do {
                f.base = rational(-3, 4);
            } while (f.exponent < 0 && is_nonpositive_integer(f.base));
            t.rising_factors.push_back(f);
        }
        t.factorial_exponent = integer(-2, 1);
        return normalize(t);
    }

    TermSpec term(int max_degree = 3)
    {
        TermSpec t = pure_term();
        t.polynomial_part = polynomial(max_degree);
        return normalize(t);
    }

    // p(k) h(k) with S(k) = x(k) b(k-1) h(k) as an antidifference, where h is
    // a pure term whose shell is 1. Empty when no such h was drawn.
    struct Summable {
        TermSpec term;
        TermSpec pure;
        Polynomial x;
        Polynomial b_shifted;
    };

    std::optional<Summable> summable_term(int max_degree = 3)
    {
        for (int attempt = 0; attempt < 50; ++attempt) {
            const TermSpec h = pure_term();
            const NormalForm nf = normal_form(term_ratio(h));
            if (nf.c != Polynomial{1}) {
                continue;
            }
            const Polynomial x = polynomial(max_degree);
            const Polynomial bs = nf.b.shift(-1);
            const Polynomial p = x.shift(1) * nf.scaled_a() - x * bs;
            if (p.is_zero()) {
                continue;
            }
            TermSpec t = h;
            t.polynomial_part = p;
            return Summable{normalize(t), h, x, bs};
        }
        return std::nullopt;
    }

private:
    std::mt19937_64 rng_;
};

// S(k) = x(k) b(k-1) h(k) for a generated summable term.
inline Rational reference_antidifference(const TermGenerator::Summable &s, unsigned k)
{
    return s.x(k) * s.b_shifted(k) * pure_part_eval(s.pure, k);
}

} // namespace gosum::testing

#endif

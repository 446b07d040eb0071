#include <gosum/catalog.hpp>

#include <future>

#include <gosum/corrections.hpp>
#include <gosum/gosper.hpp>
#include <gosum/series.hpp>
#include <gosum/tables.hpp>
#include <gosum/term.hpp>

namespace gosum
{

namespace
{

// Records the first mismatch, or the last compared pair if all agree.
class Tracker
{
public:
    void compare(const std::string &label, const Rational &lhs, const Rational &rhs)
    {
        if (!pass_) {
            return;
        }
        lhs_ = label + ": " + to_string(lhs);
        rhs_ = label + ": " + to_string(rhs);
        pass_ = lhs == rhs;
    }
    void compare(const std::string &label, const std::vector<Rational> &lhs, const std::vector<Rational> &rhs)
    {
        if (!pass_) {
            return;
        }
        lhs_ = label + ": " + join(lhs);
        rhs_ = label + ": " + join(rhs);
        pass_ = lhs == rhs;
    }
    void require(bool cond, const std::string &lhs, const std::string &rhs)
    {
        if (!pass_) {
            return;
        }
        lhs_ = lhs;
        rhs_ = rhs;
        pass_ = cond;
    }
    [[nodiscard]] bool pass() const
    {
        return pass_;
    }
    IdentityResult result() const
    {
        return {"", "", pass_, lhs_, rhs_};
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

    bool pass_ = true;
    std::string lhs_;
    std::string rhs_;
};

Rational fact(unsigned n)
{
    return Rational(factorial(n));
}

std::vector<Rational> ints(std::initializer_list<long> xs)
{
    std::vector<Rational> out;
    for (long x : xs) {
        out.emplace_back(x);
    }
    return out;
}

std::vector<Rational> slice(const std::vector<Rational> &v, std::size_t from, std::size_t to)
{
    return {v.begin() + static_cast<std::ptrdiff_t>(from), v.begin() + static_cast<std::ptrdiff_t>(to)};
}

const std::vector<Rational> &bell()
{
    static const auto values = bell_numbers(20).values;
    return values;
}

// sum_{k=0}^{n} term == closed(n) for n <= nmax, through both the
// certificate and brute force.
IdentityResult sum_identity(const std::string &src, const std::function<Rational(unsigned)> &closed,
                            unsigned nmax)
{
    Tracker tr;
    const TermSpec t = parse_term(src);
    const auto cert = antidifference(t);
    tr.require(cert.has_value(), src + " summable", "expected summable");
    for (unsigned n = 0; n <= nmax && cert; ++n) {
        const Rational expected = closed(n);
        tr.compare("definite_sum n=" + std::to_string(n), definite_sum(t, *cert, n), expected);
        tr.compare("brute_sum n=" + std::to_string(n), brute_sum(t, n), expected);
    }
    return tr.result();
}

// Summable with the exact constant and not with constant +-1, d in 1..dmax.
IdentityResult iff_check(const BasisFamily &fam, unsigned dmax)
{
    Tracker tr;
    const auto values = recurrence_route(fam, dmax).values;
    for (unsigned d = 1; d <= dmax; ++d) {
        const Polynomial kd = Polynomial::monomial(1, d);
        for (int delta : {0, 1, -1}) {
            const auto t = fam.term(kd - Polynomial::constant(values[d] + delta));
            const bool summable = antidifference(t).has_value();
            tr.require(summable == (delta == 0), pretty_print(t) + (summable ? " summable" : " not summable"),
                       delta == 0 ? "summable" : "not summable");
        }
    }
    return tr.result();
}

Rational neg_pow(unsigned d)
{
    return d % 2 == 0 ? 1 : -1;
}

std::vector<Identity> build_catalog()
{
    std::vector<Identity> c;
    auto add = [&](std::string id, std::string desc, std::function<IdentityResult()> fn) {
        c.push_back({std::move(id), std::move(desc), std::move(fn)});
    };

    add("factorial-sum-d1", "sum_{k=0}^n (k-1)/k! = -1/n!", [] {
        return sum_identity("(k-1)/fact(k)", [](unsigned n) -> Rational { return -1 / fact(n); }, 25);
    });
    add("factorial-sum-d2", "sum_{k=0}^n (k^2-2)/k! = -(n+2)/n!", [] {
        return sum_identity("(k^2-2)/fact(k)", [](unsigned n) -> Rational { return -Rational(n + 2) / fact(n); }, 25);
    });
    add("factorial-sum-d3", "sum_{k=0}^n (k^3-5)/k! = -(n^2+3n+5)/n!", [] {
        return sum_identity(
            "(k^3-5)/fact(k)", [](unsigned n) -> Rational { return -Rational(n * n + 3 * n + 5) / fact(n); }, 25);
    });
    add("factorial-sum-d4", "sum_{k=0}^n (k^4-15)/k! = -(n^3+4n^2+9n+15)/n!", [] {
        return sum_identity(
            "(k^4-15)/fact(k)",
            [](unsigned n) -> Rational { return -Rational(n * n * n + 4 * n * n + 9 * n + 15) / fact(n); }, 25);
    });
    add("gosper-inverse-factorial", "1/k! has normal form (1, k+1, 1) and is not Gosper summable", [] {
        Tracker tr;
        const auto t = parse_term("1/fact(k)");
        const auto nf = normal_form(term_ratio(t));
        tr.require(nf == NormalForm{1, Polynomial{1}, Polynomial{1, 1}, Polynomial{1}},
                   "(" + to_string(nf.a) + ", " + to_string(nf.b) + ", " + to_string(nf.c) + ")",
                   "(1, k + 1, 1)");
        tr.require(!antidifference(t).has_value(), "1/fact(k) not summable", "not summable");
        return tr.result();
    });
    add("gosper-worked-example", "(k-1)/k!: normal form (1, k+1, k-1), x = -1, sum = -k/k!", [] {
        Tracker tr;
        const auto t = parse_term("(k-1)/fact(k)");
        const auto cert = antidifference(t);
        tr.require(cert.has_value(), "not summable", "summable");
        if (cert) {
            const auto &nf = cert->normal_form;
            tr.require(nf == NormalForm{1, Polynomial{1}, Polynomial{1, 1}, Polynomial{-1, 1}},
                       "(" + to_string(nf.a) + ", " + to_string(nf.b) + ", " + to_string(nf.c) + ")",
                       "(1, k + 1, k - 1)");
            tr.require(cert->x == Polynomial{-1}, "x = " + to_string(cert->x), "x = -1");
            const RationalFunction expected(Polynomial{0, -1}, Polynomial{-1, 1});
            tr.require(cert->multiplier == expected, to_string(cert->multiplier), to_string(expected));
        }
        return tr.result();
    });
    add("bell-constants", "b(d) = 1, 1, 2, 5, 15 and recurrence = EGF = basis reduction through d = 15", [] {
        Tracker tr;
        const BasisFamily fam{Family::bell};
        const auto rec = recurrence_route(fam, 15).values;
        tr.compare("b(0..4)", slice(rec, 0, 5), ints({1, 1, 2, 5, 15}));
        tr.compare("egf route", egf_route(fam, 15).values, rec);
        tr.compare("basis route", basis_reduction(fam, 15).values, rec);
        return tr.result();
    });
    add("bell-basis", "x_d(k) = -k^d solves the Gosper equation for p_d(k) = k^(d+1) - (k+1)^d", [] {
        Tracker tr;
        const BasisFamily fam{Family::bell};
        for (unsigned d = 0; d <= 10; ++d) {
            const Polynomial a{1};
            const Polynomial b{1, 1};
            const Polynomial x = Polynomial::monomial(-1, d);
            const Polynomial lhs = x.shift(1) * a - x * b.shift(-1);
            tr.require(lhs == fam.basis(d), to_string(lhs), to_string(fam.basis(d)));
            tr.require(antidifference(fam.term(fam.basis(d))).has_value(),
                       "p_" + std::to_string(d) + "/k! summable", "summable");
        }
        return tr.result();
    });
    add("bell-iff", "(k^d - c)/k! is summable iff c = b(d), d = 1..6",
        [] { return iff_check(BasisFamily{Family::bell}, 6); });
    add("f-iff", "(k^d - c) z^k/rf(a,k) is summable iff c = [x^d/d!] f_{a,z}, d = 1..6", [] {
        auto r = iff_check(BasisFamily{Family::f, 1, 2}, 6);
        if (r.pass) {
            r = iff_check(BasisFamily{Family::f, Rational(1, 2), 1}, 6);
        }
        return r;
    });
    add("g-iff", "(k^d - c) z^k rf(a,k) is summable iff c = [x^d/d!] g_{a,z}, d = 1..6", [] {
        auto r = iff_check(BasisFamily{Family::g, 1, Rational(-1, 2)}, 6);
        if (r.pass) {
            r = iff_check(BasisFamily{Family::g, Rational(3, 2), 2}, 6);
        }
        return r;
    });
    add("routes-agree", "recurrence = EGF = basis reduction for f and g over a parameter grid, d <= 15", [] {
        Tracker tr;
        const std::vector<Rational> as{1, Rational(1, 2), Rational(3, 2), 2, Rational(5, 3)};
        const std::vector<Rational> zs{1, -1, Rational(1, 2), Rational(-1, 2), 2, 3, -2};
        for (auto family : {Family::f, Family::g}) {
            for (const auto &a : as) {
                for (const auto &z : zs) {
                    const BasisFamily fam{family, a, z};
                    const std::string label = to_string(family) + "(a=" + to_string(a) + ", z=" + to_string(z) + ")";
                    const auto rec = recurrence_route(fam, 15).values;
                    tr.compare(label + " egf", egf_route(fam, 15).values, rec);
                    tr.compare(label + " basis", basis_reduction(fam, 15).values, rec);
                }
            }
        }
        return tr.result();
    });
    add("f11-is-bell", "f_{1,1}(x) = B(x)", [] {
        Tracker tr;
        tr.compare("coefficients", egf_f(1, 1, 15).coefficients(), bell_series(15).coefficients());
        return tr.result();
    });
    add("f12-constants", "f_{1,2} = B(x)^2: c(d) = 2, 6, 22, 94 = sum_j C(d,j) b(j) b(d-j)", [] {
        Tracker tr;
        const auto values = f_correction(1, 2, 15).values;
        tr.compare("c(1..4)", slice(values, 1, 5), ints({2, 6, 22, 94}));
        for (unsigned d = 0; d <= 15; ++d) {
            Rational conv = 0;
            for (unsigned j = 0; j <= d; ++j) {
                conv += Rational(binomial(d, j)) * bell()[j] * bell()[d - j];
            }
            tr.compare("d=" + std::to_string(d), values[d], conv);
        }
        tr.compare("B(x)^2", egf_f(1, 2, 15).coefficients(), bell_series(15).pow(2).coefficients());
        return tr.result();
    });
    add("f12-sum-d1", "sum (k-2) 2^k/k! = -2^(n+1)/n!", [] {
        return sum_identity("(k-2)*pow(2,k)/fact(k)",
                            [](unsigned n) -> Rational { return -pow(Rational(2), n + 1) / fact(n); }, 25);
    });
    add("f12-sum-d2", "sum (k^2-6) 2^k/k! = -(n+3) 2^(n+1)/n!", [] {
        return sum_identity("(k^2-6)*pow(2,k)/fact(k)",
                            [](unsigned n) -> Rational { return -Rational(n + 3) * pow(Rational(2), n + 1) / fact(n); }, 25);
    });
    add("f12-sum-d3", "sum (k^3-22) 2^k/k! = -(n^2+4n+11) 2^(n+1)/n!", [] {
        return sum_identity(
            "(k^3-22)*pow(2,k)/fact(k)",
            [](unsigned n) -> Rational { return -Rational(n * n + 4 * n + 11) * pow(Rational(2), n + 1) / fact(n); }, 25);
    });
    add("f12-sum-d4", "sum (k^4-94) 2^k/k! = -(n^3+5n^2+17n+47) 2^(n+1)/n!", [] {
        return sum_identity("(k^4-94)*pow(2,k)/fact(k)",
                            [](unsigned n) -> Rational {
                                return -Rational(n * n * n + 5 * n * n + 17 * n + 47) * pow(Rational(2), n + 1)
                                       / fact(n);
                            },
                            25);
    });
    add("f-half-constants", "f_{1/2,1} = e^(x/2) B(x): c(d) = sum_j C(d,j) b(j)/2^(d-j), summable", [] {
        Tracker tr;
        const auto values = f_correction(Rational(1, 2), 1, 15).values;
        for (unsigned d = 0; d <= 15; ++d) {
            Rational conv = 0;
            for (unsigned j = 0; j <= d; ++j) {
                conv += Rational(binomial(d, j)) * bell()[j] / pow(Rational(2), d - j);
            }
            tr.compare("d=" + std::to_string(d), values[d], conv);
        }
        tr.compare("e^(x/2) B(x)", egf_f(Rational(1, 2), 1, 15).coefficients(),
                   (TruncatedSeries::exp_linear(Rational(1, 2), 15) * bell_series(15)).coefficients());
        const BasisFamily fam{Family::f, Rational(1, 2), 1};
        for (unsigned d = 1; d <= 4; ++d) {
            tr.require(antidifference(summable_term(fam, d)).has_value(),
                       pretty_print(summable_term(fam, d)) + " summable?", "summable");
        }
        return tr.result();
    });
    add("half-rising-rewrite", "1/rf(1/2,k) = 4^k k!/(2k)!", [] {
        Tracker tr;
        const auto t = parse_term("1/rf(1/2,k)");
        for (unsigned k = 0; k <= 20; ++k) {
            tr.compare("k=" + std::to_string(k), term_eval(t, k),
                       pow(Rational(4), k) * fact(k) / fact(2 * k));
        }
        return tr.result();
    });
    add("g1m1-constants", "g_{1,-1} = e^(-x) B(-x) = B'(-x): c(d) = (-1)^d b(d+1)", [] {
        Tracker tr;
        const auto values = g_correction(1, -1, 15).values;
        for (unsigned d = 0; d <= 15; ++d) {
            tr.compare("d=" + std::to_string(d), values[d], neg_pow(d) * bell()[d + 1]);
        }
        const auto g = egf_g(1, -1, 15).coefficients();
        tr.compare("e^(-x) B(-x)", g,
                   (TruncatedSeries::exp_linear(-1, 15) * bell_series(15).negate_argument()).coefficients());
        tr.compare("B'(-x)", g, bell_series(16).derivative().negate_argument().coefficients());
        return tr.result();
    });
    add("g1mhalf-constants", "g_{1,-1/2} = B'(-x) B(-x): c(d) = (-1)^d sum_j C(d,j) b(j+1) b(d-j); c(2) = 11",
        [] {
            Tracker tr;
            const auto values = g_correction(1, Rational(-1, 2), 15).values;
            tr.compare("c(2)", values[2], 11);
            for (unsigned d = 0; d <= 15; ++d) {
                Rational conv = 0;
                for (unsigned j = 0; j <= d; ++j) {
                    conv += Rational(binomial(d, j)) * bell()[j + 1] * bell()[d - j];
                }
                tr.compare("d=" + std::to_string(d), values[d], neg_pow(d) * conv);
            }
            const auto bneg = bell_series(16).negate_argument();
            tr.compare("B'(-x) B(-x)", egf_g(1, Rational(-1, 2), 15).coefficients(),
                       (bell_series(16).derivative().negate_argument() * bneg).coefficients());
            return tr.result();
        });
    add("g1mhalf-sum", "sum (k^2-11) k!/(-2)^k = (n-3)(n+1)!/(-2)^n - 8", [] {
        return sum_identity("(k^2-11)*fact(k)/pow(-2,k)",
                            [](unsigned n) -> Rational {
                                return (Rational(n) - 3) * fact(n + 1) / pow(Rational(-2), n) - 8;
                            },
                            20);
    });
    add("g-half-m1-constants", "g_{1/2,-1} = e^(-x/2) B(-x): c(d) = (-1)^d sum_j C(d,j) b(j)/2^(d-j)", [] {
        Tracker tr;
        const auto values = g_correction(Rational(1, 2), -1, 15).values;
        for (unsigned d = 0; d <= 15; ++d) {
            Rational conv = 0;
            for (unsigned j = 0; j <= d; ++j) {
                conv += Rational(binomial(d, j)) * bell()[j] / pow(Rational(2), d - j);
            }
            tr.compare("d=" + std::to_string(d), values[d], neg_pow(d) * conv);
        }
        tr.compare("e^(-x/2) B(-x)", egf_g(Rational(1, 2), -1, 15).coefficients(),
                   (TruncatedSeries::exp_linear(Rational(-1, 2), 15) * bell_series(15).negate_argument())
                       .coefficients());
        const BasisFamily fam{Family::g, Rational(1, 2), -1};
        for (unsigned d = 1; d <= 4; ++d) {
            tr.require(antidifference(summable_term(fam, d)).has_value(),
                       pretty_print(summable_term(fam, d)) + " summable?", "summable");
        }
        return tr.result();
    });
    add("neg-half-rising-rewrite", "(-1)^k rf(1/2,k) = (-1)^k (2k)!/(4^k k!)", [] {
        Tracker tr;
        const auto t = parse_term("pow(-1,k)*rf(1/2,k)");
        for (unsigned k = 0; k <= 20; ++k) {
            tr.compare("k=" + std::to_string(k), term_eval(t, k),
                       pow(Rational(-1), k) * fact(2 * k) / (pow(Rational(4), k) * fact(k)));
        }
        return tr.result();
    });
    add("f-egf-convolution", "f_{a,z}(x) = e^((1-a)x) B(x)^z for z in {1,2,3}, a in {1,1/2,2}, order 15", [] {
        Tracker tr;
        for (int z : {1, 2, 3}) {
            for (const Rational &a : {Rational(1), Rational(1, 2), Rational(2)}) {
                tr.compare("a=" + to_string(a) + " z=" + std::to_string(z), egf_f(a, z, 15).coefficients(),
                           (TruncatedSeries::exp_linear(1 - a, 15) * bell_series(15).pow(z)).coefficients());
            }
        }
        return tr.result();
    });
    add("g-egf-convolution", "g_{a,1/z}(x) = e^(-ax) B(-x)^(-z) for z in {-1,-2}, a in {1,1/2,2}, order 15", [] {
        Tracker tr;
        for (int z : {-1, -2}) {
            for (const Rational &a : {Rational(1), Rational(1, 2), Rational(2)}) {
                tr.compare("a=" + to_string(a) + " z=" + std::to_string(z),
                           egf_g(a, Rational(1, z), 15).coefficients(),
                           (TruncatedSeries::exp_linear(-a, 15) * bell_series(15).negate_argument().pow(-z))
                               .coefficients());
            }
        }
        return tr.result();
    });
    add("matrix-A", "change-of-basis matrix rows [1], [-1,1], [-2,-1,1], [-3,-3,-1,1]", [] {
        Tracker tr;
        const auto a = build_A(4);
        const std::vector<std::vector<Rational>> expected{
            ints({1}), ints({-1, 1}), ints({-2, -1, 1}), ints({-3, -3, -1, 1})};
        for (unsigned d = 0; d < 4; ++d) {
            tr.compare("row " + std::to_string(d + 1), a.rows()[d], expected[d]);
        }
        return tr.result();
    });
    add("matrix-inverse", "A^-1 rows [1], [1,1], [3,1,1], [9,4,1,1], [31,14,5,1,1]; A B = I to 20", [] {
        Tracker tr;
        const auto b = build_B(5);
        const std::vector<std::vector<Rational>> expected{ints({1}), ints({1, 1}), ints({3, 1, 1}),
                                                          ints({9, 4, 1, 1}), ints({31, 14, 5, 1, 1})};
        for (unsigned d = 0; d < 5; ++d) {
            tr.compare("row " + std::to_string(d + 1), b.rows()[d], expected[d]);
        }
        tr.require((build_A(20) * build_B(20)).is_identity(), "A*B (dmax 20)", "identity");
        return tr.result();
    });
    add("gould-numbers", "first column of A^-1: 1, 1, 3, 9, 31 (A040027)", [] {
        Tracker tr;
        tr.compare("column 1", gould_numbers(5), ints({1, 1, 3, 9, 31}));
        return tr.result();
    });
    add("a121207-diagonals", "B columns are A121207 diagonals: 1,1,3,9,31 and 1,1,4,14", [] {
        Tracker tr;
        const auto t = a121207_table(5);
        tr.compare("diagonal 0", t.column(0), ints({1, 1, 3, 9, 31}));
        tr.compare("diagonal 1", t.column(1), ints({1, 1, 4, 14}));
        return tr.result();
    });
    add("basis-change", "p_{d-1}(k) = sum_j A(d,j) (k^j - b(j)) for d <= 12", [] {
        Tracker tr;
        const auto a = build_A(12);
        const BasisFamily fam{Family::bell};
        for (unsigned d = 1; d <= 12; ++d) {
            Polynomial combo;
            for (unsigned j = 1; j <= d; ++j) {
                combo += (Polynomial::monomial(1, j) - Polynomial::constant(bell()[j])) * a.at(d, j);
            }
            tr.require(combo == fam.basis(d - 1), to_string(combo), to_string(fam.basis(d - 1)));
        }
        return tr.result();
    });
    add("explicit-formula", "sum_{k<n} (k^d - b(d))/k! = -P_d(n)/n! for d <= 10, n <= 25", [] {
        Tracker tr;
        for (unsigned d = 1; d <= 10; ++d) {
            const Polynomial pd = closed_form_power_sum(d);
            for (unsigned n = 0; n <= 25; ++n) {
                Rational lhs = 0;
                for (unsigned k = 0; k < n; ++k) {
                    lhs += (pow(Rational(k), d) - bell()[d]) / fact(k);
                }
                tr.compare("d=" + std::to_string(d) + " n=" + std::to_string(n), lhs, -pd(n) / fact(n));
            }
        }
        return tr.result();
    });
    add("bell-identity", "b(d) sum_{k<n} n!/k! = sum_{k<n} k^d n!/k! + sum_j B(d,j) n^j, d <= 8, n = 1..10",
        [] {
            Tracker tr;
            for (unsigned d = 0; d <= 8; ++d) {
                for (unsigned n = 1; n <= 10; ++n) {
                    tr.require(verify_bell_identity(d, n),
                               "d=" + std::to_string(d) + " n=" + std::to_string(n) + " fails", "holds");
                }
            }
            return tr.result();
        });
    return c;
}

} // namespace

const std::vector<Identity> &identity_catalog()
{
    static const std::vector<Identity> catalog = build_catalog();
    return catalog;
}

std::vector<IdentityResult> run_catalog()
{
    const auto &catalog = identity_catalog();
    // Warm shared statics before fanning out.
    (void)bell();
    std::vector<std::future<IdentityResult>> pending;
    pending.reserve(catalog.size());
    for (const auto &entry : catalog) {
        pending.push_back(std::async(std::launch::async, [&entry] {
            IdentityResult r;
            try {
                r = entry.check();
            } catch (const std::exception &e) {
                r.pass = false;
                r.lhs = std::string("exception: ") + e.what();
            }
            r.id = entry.id;
            r.description = entry.description;
            return r;
        }));
    }
    std::vector<IdentityResult> results;
    results.reserve(pending.size());
    for (auto &f : pending) {
        results.push_back(f.get());
    }
    return results;
}

} // namespace gosum

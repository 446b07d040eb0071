#ifndef GOSUM_CORRECTIONS_HPP
#define GOSUM_CORRECTIONS_HPP

#include <string>
#include <string_view>
#include <vector>

#include <gosum/polynomial.hpp>
#include <gosum/series.hpp>
#include <gosum/term.hpp>

namespace gosum
{

// Pure hypergeometric terms with a one-constant correction:
//   bell:  1/k!
//   f:     z^k / rf(a, k)
//   g:     z^k * rf(a, k)
// For each d there is exactly one constant c(d) for which (k^d - c(d)) times
// the pure term is Gosper summable.
enum class Family { bell, f, g };

std::string to_string(Family family);
// Accepts "bell", "f", "g". Throws std::invalid_argument otherwise.
Family parse_family(std::string_view name);

// values[d] = c(d) with the sign under which k^d - c(d) is the summable
// polynomial; values[0] = 1 for every family.
struct CorrectionSequence {
    Family family = Family::bell;
    Rational a = 1;
    Rational z = 1;
    std::vector<Rational> values;
};

// A family together with its parameters. bell ignores a and z (it is the
// f family at a = z = 1).
struct BasisFamily {
    Family family = Family::bell;
    Rational a = 1;
    Rational z = 1;

    // Throws std::invalid_argument for z = 0 or a in {0, -1, -2, ...}.
    void validate() const;

    // p_d(k): the Gosper-summable multiplier obtained from x(k) = -k^d
    // (bell, f) or x(k) = k^d (g). deg p_d = d + 1.
    [[nodiscard]] Polynomial basis(unsigned d) const;

    // The pure term (polynomial part 1).
    [[nodiscard]] TermSpec pure_term() const;

    // p(k) times the pure term.
    [[nodiscard]] TermSpec term(const Polynomial &p) const;
};

// b(0..dmax) from b(d+1) = sum_j C(d, j) b(j).
CorrectionSequence bell_numbers(unsigned dmax);

// From c(d+1) = (1 - a) c(d) + z sum_j C(d, j) c(j), c(0) = -1, negated.
CorrectionSequence f_correction(const Rational &a, const Rational &z, unsigned dmax);

// From z c(d+1) = c(d) - z sum_j (a C(d, j) + C(d, j-1)) c(j), c(0) = -1,
// negated.
CorrectionSequence g_correction(const Rational &a, const Rational &z, unsigned dmax);

// Dispatches on fam.family.
CorrectionSequence recurrence_route(const BasisFamily &fam, unsigned dmax);

// exp(u) with u = (1 - a) x + z (e^x - 1).
TruncatedSeries egf_f(const Rational &a, const Rational &z, unsigned order);

// exp(u) with u = -a x + (1 - e^(-x)) / z.
TruncatedSeries egf_g(const Rational &a, const Rational &z, unsigned order);

// d! [x^d] of the family's generating function.
CorrectionSequence egf_route(const BasisFamily &fam, unsigned dmax);

// Triangular elimination of the p_d against the already reduced elements
// k^j + c(j); reads c(d+1) off the constant term.
CorrectionSequence basis_reduction(const BasisFamily &fam, unsigned dmax);

// (k^d - c(d)) times the pure term.
TermSpec summable_term(const BasisFamily &fam, unsigned d);

} // namespace gosum

#endif

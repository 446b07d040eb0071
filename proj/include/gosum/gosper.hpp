#ifndef GOSUM_GOSPER_HPP
#define GOSUM_GOSPER_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include <gosum/polynomial.hpp>
#include <gosum/rational_function.hpp>
#include <gosum/term.hpp>

namespace gosum
{

// Polynomial normal form of a term ratio:
//
//     r(k) = z * a(k)/b(k) * c(k+1)/c(k),   gcd(a(k), b(k+i)) = 1 for i >= 0,
//
// with a, b, c monic. a/b is the kernel and c the shell.
struct NormalForm {
    Rational z;
    Polynomial a;
    Polynomial b;
    Polynomial c;

    // z * a, the numerator that enters the Gosper equation.
    [[nodiscard]] Polynomial scaled_a() const
    {
        return a * z;
    }

    friend bool operator==(const NormalForm &, const NormalForm &) = default;
};

// A polynomial solution x of x(k+1) z a(k) - x(k) b(k-1) = c(k), and the
// multiplier R(k) = x(k) b(k-1)/c(k) for which S(k) = R(k) f(k) satisfies
// S(k+1) - S(k) = f(k).
struct Certificate {
    Polynomial x;
    RationalFunction multiplier;
    NormalForm normal_form;
};

class NotSummable : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Nonnegative integers j with gcd(p(k), q(k+j)) != 1, ascending: the
// nonnegative integer roots of Res_k(p(k), q(k+j)) as a polynomial in j.
std::vector<Integer> dispersion_set(const Polynomial &p, const Polynomial &q);

// Throws std::domain_error for r = 0.
NormalForm normal_form(const RationalFunction &r);

// z * (a/b) * c(k+1)/c(k).
RationalFunction reconstruct(const NormalForm &nf);

// Upper bound on deg x for a polynomial solution of
// x(k+1) a(k) - x(k) b(k-1) = c(k), where a already carries the constant z.
// Empty when no polynomial solution can exist.
std::optional<unsigned> degree_bound(const Polynomial &a, const Polynomial &b, const Polynomial &c);
std::optional<unsigned> degree_bound(const NormalForm &nf);

// Solves the Gosper equation by an ansatz of the bounded degree and exact
// Gaussian elimination. Empty iff no polynomial solution exists.
std::optional<Polynomial> solve_gosper(const Polynomial &a, const Polynomial &b, const Polynomial &c);
std::optional<Polynomial> solve_gosper(const NormalForm &nf);

// R(k+1) r(k) - R(k) == 1 as a rational-function identity.
bool verify_certificate(const RationalFunction &r, const Certificate &cert);

// Decides Gosper summability. Empty means "not Gosper summable". The zero
// term gets x = 0 and a zero multiplier. Certificates are verified before
// they are returned; a failed verification throws std::logic_error.
std::optional<Certificate> antidifference(const TermSpec &t);

// S(k) = R(k) f(k) at k0, evaluated as x(k0) b(k0-1) (p/c)(k0) times the pure
// part so that the shell is never divided out numerically. Where (p/c) has a
// pole at k0 the value is carried over from the nearest pole-free point by
// telescoping.
Rational antidifference_at(const TermSpec &t, const Certificate &cert, unsigned k0);

// sum_{k=0}^{n} f(k) as S(n+1) - S(0). Throws NotSummable.
Rational definite_sum(const TermSpec &t, unsigned n);
Rational definite_sum(const TermSpec &t, const Certificate &cert, unsigned n);

// sum_{k=0}^{n} f(k) by adding term values.
Rational brute_sum(const TermSpec &t, unsigned n);

} // namespace gosum

#endif

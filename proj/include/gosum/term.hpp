#ifndef GOSUM_TERM_HPP
#define GOSUM_TERM_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gosum/polynomial.hpp>
#include <gosum/rational_function.hpp>

namespace gosum
{

// base^(rising k) raised to exponent, i.e. (base (base+1) ... (base+k-1))^exponent.
struct RisingFactor {
    Rational base;
    int exponent = 0;

    friend bool operator==(const RisingFactor &, const RisingFactor &) = default;
};

// A hypergeometric term
//
//     f(k) = p(k) * z^k * prod_i rf(base_i, k)^(e_i) * (k!)^e
//
// with p the polynomial part and everything after it the pure part.
//
// Normalized form: rising factors sorted by base with distinct bases, nonzero
// exponents and no base equal to 1 (rf(1, k) = k! is folded into the
// factorial exponent); a zero polynomial part carries no pure part.
struct TermSpec {
    Polynomial polynomial_part = Polynomial::constant(1);
    Rational geometric_base = 1;
    std::vector<RisingFactor> rising_factors;
    int factorial_exponent = 0;

    [[nodiscard]] bool is_zero() const noexcept
    {
        return polynomial_part.is_zero();
    }

    friend bool operator==(const TermSpec &, const TermSpec &) = default;
};

// Raised by parse_term. offset() is the byte offset into the source text.
class TermError : public std::runtime_error
{
public:
    enum class Kind { syntax, semantic };

    TermError(Kind kind, std::size_t offset, const std::string &message);

    [[nodiscard]] Kind kind() const noexcept
    {
        return kind_;
    }
    [[nodiscard]] std::size_t offset() const noexcept
    {
        return offset_;
    }

private:
    Kind kind_;
    std::size_t offset_;
};

// Grammar (see docs/term-grammar.md):
//
//   expr    := product (("+" | "-") product)*
//   product := unary (("*" | "/") unary)*
//   unary   := "-" unary | power
//   power   := atom ("^" ["-"] integer)?
//   atom    := integer | "k" | "(" expr ")" | "fact" "(" "k" ")"
//            | "rf" "(" expr "," "k" ")" | "pow" "(" expr "," "k" ")"
//
// The expression must reduce to one polynomial times pure factors. Sums are
// accepted only between terms with identical pure parts.
TermSpec parse_term(std::string_view src);

// Brings a hand-built TermSpec to normalized form and validates it. Throws
// std::invalid_argument for a zero geometric base or a nonpositive integer
// rising base with a negative exponent.
TermSpec normalize(TermSpec t);

// Canonical text; parse_term(pretty_print(t)) == t for normalized t.
std::string pretty_print(const TermSpec &t);

// f(k+1)/f(k) in lowest terms. Throws std::domain_error for the zero term.
RationalFunction term_ratio(const TermSpec &t);

// f(k0) by direct products of the defining factors.
Rational term_eval(const TermSpec &t, unsigned k0);

// f(k0) with the polynomial part replaced by 1.
Rational pure_part_eval(const TermSpec &t, unsigned k0);

} // namespace gosum

#endif

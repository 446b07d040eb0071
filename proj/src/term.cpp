#include <gosum/term.hpp>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <optional>

namespace gosum
{

TermError::TermError(Kind kind, std::size_t offset, const std::string &message)
    : std::runtime_error((kind == Kind::syntax ? "syntax error at offset " : "semantic error at offset ")
                         + std::to_string(offset) + ": " + message),
      kind_(kind), offset_(offset)
{
}

namespace
{

// Intermediate value while parsing: a rational function of k times pure
// hypergeometric factors.
struct Value {
    RationalFunction rational = RationalFunction(Polynomial::constant(1));
    Rational geometric = 1;
    std::map<Rational, int> rising;
    int factorial = 0;
    // Where each rising base first appeared, for diagnostics.
    std::map<Rational, std::size_t> rising_offsets;

    [[nodiscard]] bool has_pure_part() const
    {
        return geometric != 1 || !rising.empty() || factorial != 0;
    }
    [[nodiscard]] bool same_pure_part(const Value &o) const
    {
        return geometric == o.geometric && rising == o.rising && factorial == o.factorial;
    }
    [[nodiscard]] std::optional<Rational> as_constant() const
    {
        if (has_pure_part() || !rational.numerator().is_constant()
            || !rational.denominator().is_constant()) {
            return std::nullopt;
        }
        return rational.numerator().coefficient(0);
    }
    void clear_pure_part()
    {
        geometric = 1;
        rising.clear();
        factorial = 0;
    }
};

void add_rising(Value &v, const Rational &base, int exponent)
{
    if (base == 1) {
        v.factorial += exponent;
        return;
    }
    auto &e = v.rising[base];
    e += exponent;
    if (e == 0) {
        v.rising.erase(base);
    }
}

class Parser
{
public:
    explicit Parser(std::string_view src) : src_(src) {}

    Value parse()
    {
        Value v = expr();
        skip_ws();
        if (pos_ != src_.size()) {
            syntax("unexpected '" + std::string(1, src_[pos_]) + "'");
        }
        return v;
    }

private:
    [[noreturn]] void syntax(const std::string &msg, std::optional<std::size_t> at = {}) const
    {
        throw TermError(TermError::Kind::syntax, at.value_or(pos_), msg);
    }
    [[noreturn]] void semantic(const std::string &msg, std::size_t at) const
    {
        throw TermError(TermError::Kind::semantic, at, msg);
    }

    void skip_ws()
    {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
            ++pos_;
        }
    }

    bool accept(char ch)
    {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == ch) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char ch)
    {
        if (!accept(ch)) {
            syntax(std::string("expected '") + ch + "'");
        }
    }

    std::string identifier()
    {
        skip_ws();
        const auto start = pos_;
        while (pos_ < src_.size()
               && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
            ++pos_;
        }
        return std::string(src_.substr(start, pos_ - start));
    }

    Integer integer_literal()
    {
        skip_ws();
        const auto start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            syntax("expected an integer");
        }
        return Integer(std::string(src_.substr(start, pos_ - start)), 10);
    }

    bool peek_is(char ch)
    {
        skip_ws();
        return pos_ < src_.size() && src_[pos_] == ch;
    }

    bool peek_alpha()
    {
        skip_ws();
        return pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]));
    }

    Value expr()
    {
        Value lhs = product();
        while (true) {
            skip_ws();
            const auto at = pos_;
            if (accept('+')) {
                lhs = sum(std::move(lhs), product(), false, at);
            } else if (accept('-')) {
                lhs = sum(std::move(lhs), product(), true, at);
            } else {
                return lhs;
            }
        }
    }

    Value sum(Value lhs, Value rhs, bool subtract, std::size_t at)
    {
        if (subtract) {
            rhs.rational *= RationalFunction(Polynomial::constant(-1));
        }
        if (rhs.rational.is_zero()) {
            return lhs;
        }
        if (lhs.rational.is_zero()) {
            return rhs;
        }
        if (!lhs.same_pure_part(rhs)) {
            semantic("sum of hypergeometric terms with different pure parts", at);
        }
        lhs.rational += rhs.rational;
        if (lhs.rational.is_zero()) {
            lhs.clear_pure_part();
        }
        return lhs;
    }

    Value product()
    {
        Value lhs = unary();
        while (true) {
            skip_ws();
            const auto at = pos_;
            if (accept('*')) {
                multiply(lhs, unary(), 1, at);
            } else if (accept('/')) {
                multiply(lhs, unary(), -1, at);
            } else {
                return lhs;
            }
        }
    }

    void multiply(Value &lhs, const Value &rhs, int sign, std::size_t at)
    {
        if (sign < 0) {
            if (rhs.rational.is_zero()) {
                semantic("division by zero", at);
            }
            lhs.rational /= rhs.rational;
            lhs.geometric /= rhs.geometric;
        } else {
            lhs.rational *= rhs.rational;
            lhs.geometric *= rhs.geometric;
        }
        for (const auto &[base, e] : rhs.rising) {
            add_rising(lhs, base, sign * e);
            lhs.rising_offsets.emplace(base, rhs.rising_offsets.at(base));
        }
        lhs.factorial += sign * rhs.factorial;
        if (lhs.rational.is_zero()) {
            lhs.clear_pure_part();
        }
    }

    Value unary()
    {
        if (accept('-')) {
            Value v = unary();
            v.rational *= RationalFunction(Polynomial::constant(-1));
            return v;
        }
        return power();
    }

    Value power()
    {
        Value base = atom();
        skip_ws();
        const auto at = pos_;
        if (!accept('^')) {
            return base;
        }
        const bool negative = accept('-');
        if (peek_alpha() || peek_is('(')) {
            semantic("exponent must be an integer literal; write pow(z, k) for z^k", pos_);
        }
        const Integer e = integer_literal();
        if (!e.fits_sint_p() || e > 4096) {
            semantic("exponent too large", at);
        }
        const long n = e.get_si();
        if (negative && base.rational.is_zero()) {
            semantic("division by zero", at);
        }
        Value out;
        for (long i = 0; i < n; ++i) {
            multiply(out, base, negative ? -1 : 1, at);
        }
        return out;
    }

    Rational constant_argument(std::size_t at, const char *fn)
    {
        Value arg = expr();
        auto c = arg.as_constant();
        if (!c) {
            semantic(std::string(fn) + ": first argument must be a rational constant", at);
        }
        return *c;
    }

    void expect_k_argument(const char *fn)
    {
        skip_ws();
        const auto at = pos_;
        if (pos_ >= src_.size() || src_[pos_] == ')') {
            syntax(std::string(fn) + ": expected the summation variable k");
        }
        if (!peek_alpha() || identifier() != "k" || !peek_is(')')) {
            semantic(std::string(fn) + ": argument must be exactly the summation variable k", at);
        }
    }

    Value atom()
    {
        skip_ws();
        const auto at = pos_;
        if (pos_ >= src_.size()) {
            syntax("unexpected end of input");
        }
        if (accept('(')) {
            Value v = expr();
            expect(')');
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            Value v;
            v.rational = RationalFunction(Polynomial::constant(Rational(integer_literal())));
            return v;
        }
        if (!peek_alpha()) {
            syntax("unexpected '" + std::string(1, src_[pos_]) + "'");
        }
        const std::string name = identifier();
        Value v;
        if (name == "k") {
            v.rational = RationalFunction(Polynomial::variable());
            return v;
        }
        if (name == "fact") {
            expect('(');
            expect_k_argument("fact");
            expect(')');
            v.factorial = 1;
            return v;
        }
        if (name == "rf" || name == "pow") {
            expect('(');
            const Rational c = constant_argument(at, name.c_str());
            expect(',');
            expect_k_argument(name.c_str());
            expect(')');
            if (name == "pow") {
                if (c == 0) {
                    semantic("pow: zero base", at);
                }
                v.geometric = c;
            } else {
                add_rising(v, c, 1);
                v.rising_offsets.emplace(c, at);
            }
            return v;
        }
        syntax("unknown identifier '" + name + "'", at);
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

void validate(const TermSpec &t)
{
    if (t.geometric_base == 0) {
        throw std::invalid_argument("geometric base must be nonzero");
    }
    for (const auto &f : t.rising_factors) {
        if (f.exponent < 0 && is_nonpositive_integer(f.base)) {
            throw std::invalid_argument("rising factorial with nonpositive integer base "
                                        + to_string(f.base) + " in a denominator");
        }
    }
}

Rational pure_value(const TermSpec &t, unsigned k0)
{
    Rational v = pow(t.geometric_base, k0);
    for (const auto &f : t.rising_factors) {
        v *= pow(rising_factorial(f.base, k0), f.exponent);
    }
    if (t.factorial_exponent != 0) {
        v *= pow(Rational(factorial(k0)), t.factorial_exponent);
    }
    return v;
}

std::string power_text(const std::string &factor, int e)
{
    return e == 1 ? factor : factor + "^" + std::to_string(e);
}

} // namespace

TermSpec parse_term(std::string_view src)
{
    Parser parser(src);
    Value v = parser.parse();
    if (!v.rational.denominator().is_constant()) {
        throw TermError(TermError::Kind::semantic, 0,
                        "term has a non-polynomial rational factor 1/(" + to_string(v.rational.denominator())
                            + "); only polynomial times pure factors is supported");
    }
    TermSpec t;
    t.polynomial_part = v.rational.numerator();
    t.geometric_base = v.geometric;
    t.factorial_exponent = v.factorial;
    for (const auto &[base, e] : v.rising) {
        if (e < 0 && is_nonpositive_integer(base)) {
            throw TermError(TermError::Kind::semantic, v.rising_offsets.at(base),
                            "rf: nonpositive integer base " + to_string(base)
                                + " in a denominator vanishes for some k >= 0");
        }
        t.rising_factors.push_back({base, e});
    }
    return normalize(std::move(t));
}

TermSpec normalize(TermSpec t)
{
    if (t.polynomial_part.is_zero()) {
        return TermSpec{Polynomial(), 1, {}, 0};
    }
    std::map<Rational, int> merged;
    for (const auto &f : t.rising_factors) {
        if (f.base == 1) {
            t.factorial_exponent += f.exponent;
        } else {
            merged[f.base] += f.exponent;
        }
    }
    t.rising_factors.clear();
    for (const auto &[base, e] : merged) {
        if (e != 0) {
            t.rising_factors.push_back({base, e});
        }
    }
    validate(t);
    return t;
}

std::string pretty_print(const TermSpec &t)
{
    if (t.is_zero()) {
        return "0";
    }
    std::vector<std::string> num;
    std::vector<std::string> den;
    const auto &p = t.polynomial_part;
    if (!p.is_constant()) {
        num.push_back(p.coefficients().size() == 2 && p.coefficient(0) == 0 && p.coefficient(1) == 1
                          ? std::string("k")
                          : "(" + to_string(p) + ")");
    } else if (p.coefficient(0) != 1) {
        num.push_back(to_string(p.coefficient(0)));
    }
    if (t.geometric_base != 1) {
        num.push_back("pow(" + to_string(t.geometric_base) + ",k)");
    }
    for (const auto &f : t.rising_factors) {
        auto &side = f.exponent > 0 ? num : den;
        side.push_back(power_text("rf(" + to_string(f.base) + ",k)", std::abs(f.exponent)));
    }
    if (t.factorial_exponent != 0) {
        auto &side = t.factorial_exponent > 0 ? num : den;
        side.push_back(power_text("fact(k)", std::abs(t.factorial_exponent)));
    }
    auto join = [](const std::vector<std::string> &parts) {
        std::string out;
        for (const auto &s : parts) {
            out += out.empty() ? s : "*" + s;
        }
        return out;
    };
    if (!p.is_constant() && num.size() == 1 && den.empty()) {
        return to_string(p);
    }
    std::string out = num.empty() ? std::string("1") : join(num);
    if (den.size() == 1) {
        out += "/" + den.front();
    } else if (den.size() > 1) {
        out += "/(" + join(den) + ")";
    }
    return out;
}

RationalFunction term_ratio(const TermSpec &t)
{
    if (t.is_zero()) {
        throw std::domain_error("term ratio of the zero term is undefined");
    }
    Polynomial num = t.polynomial_part.shift(1) * t.geometric_base;
    Polynomial den = t.polynomial_part;
    const auto k_plus = [](const Rational &c) { return Polynomial({c, Rational(1)}); };
    for (const auto &f : t.rising_factors) {
        auto &side = f.exponent > 0 ? num : den;
        for (int i = 0; i < std::abs(f.exponent); ++i) {
            side *= k_plus(f.base);
        }
    }
    auto &side = t.factorial_exponent > 0 ? num : den;
    for (int i = 0; i < std::abs(t.factorial_exponent); ++i) {
        side *= k_plus(1);
    }
    return RationalFunction(std::move(num), std::move(den));
}

Rational term_eval(const TermSpec &t, unsigned k0)
{
    if (t.is_zero()) {
        return 0;
    }
    return t.polynomial_part(k0) * pure_value(t, k0);
}

Rational pure_part_eval(const TermSpec &t, unsigned k0)
{
    return pure_value(t, k0);
}

} // namespace gosum

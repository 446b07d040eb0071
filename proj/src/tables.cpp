#include <gosum/tables.hpp>

#include <stdexcept>

#include <gosum/corrections.hpp>

namespace gosum
{

LowerTriangularTable::LowerTriangularTable(unsigned origin, std::vector<std::vector<Rational>> rows)
    : origin_(origin), rows_(std::move(rows))
{
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].size() != i + 1) {
            throw std::invalid_argument("row " + std::to_string(i) + " has the wrong length");
        }
    }
}

Rational LowerTriangularTable::at(unsigned d, unsigned j) const
{
    if (d < origin_ || j < origin_ || j > d || d - origin_ >= rows_.size()) {
        return 0;
    }
    return rows_[d - origin_][j - origin_];
}

std::vector<Rational> LowerTriangularTable::column(unsigned j) const
{
    std::vector<Rational> out;
    for (unsigned d = j; d < origin_ + size(); ++d) {
        out.push_back(at(d, j));
    }
    return out;
}

bool LowerTriangularTable::all_integers() const
{
    for (const auto &row : rows_) {
        for (const auto &x : row) {
            if (!is_integer(x)) {
                return false;
            }
        }
    }
    return true;
}

bool LowerTriangularTable::is_identity() const
{
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            if (rows_[i][j] != (i == j ? 1 : 0)) {
                return false;
            }
        }
    }
    return true;
}

LowerTriangularTable operator*(const LowerTriangularTable &lhs, const LowerTriangularTable &rhs)
{
    if (lhs.origin() != rhs.origin() || lhs.size() != rhs.size()) {
        throw std::invalid_argument("table product: shape mismatch");
    }
    const unsigned o = lhs.origin();
    std::vector<std::vector<Rational>> rows;
    for (unsigned d = o; d < o + lhs.size(); ++d) {
        std::vector<Rational> row;
        for (unsigned j = o; j <= d; ++j) {
            Rational acc = 0;
            for (unsigned i = j; i <= d; ++i) {
                acc += lhs.at(d, i) * rhs.at(i, j);
            }
            row.push_back(acc);
        }
        rows.push_back(std::move(row));
    }
    return LowerTriangularTable(o, std::move(rows));
}

LowerTriangularTable build_A(unsigned dmax)
{
    std::vector<std::vector<Rational>> rows;
    for (unsigned d = 1; d <= dmax; ++d) {
        std::vector<Rational> row;
        for (unsigned j = 1; j <= d; ++j) {
            row.push_back(d == j ? Rational(1) : Rational(-binomial(d - 1, j)));
        }
        rows.push_back(std::move(row));
    }
    return LowerTriangularTable(1, std::move(rows));
}

LowerTriangularTable build_B(unsigned dmax)
{
    // entries[d][j], 1-based.
    std::vector<std::vector<Rational>> entries(dmax + 1, std::vector<Rational>(dmax + 1));
    for (unsigned j = 1; j <= dmax; ++j) {
        entries[j][j] = 1;
        for (unsigned d = j; d + 1 <= dmax; ++d) {
            Rational acc = 0;
            for (unsigned i = j; i <= d; ++i) {
                acc += Rational(binomial(d, i)) * entries[i][j];
            }
            entries[d + 1][j] = acc;
        }
    }
    std::vector<std::vector<Rational>> rows;
    for (unsigned d = 1; d <= dmax; ++d) {
        rows.emplace_back(entries[d].begin() + 1, entries[d].begin() + d + 1);
    }
    LowerTriangularTable b(1, std::move(rows));
    if (dmax > 0 && !(build_A(dmax) * b).is_identity()) {
        throw std::logic_error("B is not the inverse of A");
    }
    return b;
}

std::vector<Rational> gould_numbers(unsigned dmax)
{
    return build_B(dmax).column(1);
}

LowerTriangularTable a121207_table(unsigned dmax)
{
    const auto b = build_B(dmax);
    LowerTriangularTable t(0, b.rows());
    for (unsigned d = 0; d < dmax; ++d) {
        for (unsigned j = 0; j <= d; ++j) {
            if (t.at(d, j) != b.at(d + 1, j + 1)) {
                throw std::logic_error("A121207 view disagrees with B");
            }
        }
    }
    return t;
}

Polynomial closed_form_power_sum(unsigned d)
{
    if (d == 0) {
        return {};
    }
    const auto b = build_B(d);
    std::vector<Rational> coeffs(d + 1);
    for (unsigned j = 1; j <= d; ++j) {
        coeffs[j] = b.at(d, j);
    }
    return Polynomial(std::move(coeffs));
}

bool verify_bell_identity(unsigned d, unsigned n)
{
    if (n == 0) {
        throw std::invalid_argument("bell identity requires n >= 1");
    }
    const Rational bell = bell_numbers(d).values[d];
    Rational weights = 0;
    Rational moments = 0;
    for (unsigned k = 0; k < n; ++k) {
        // n^(falling n-k) = n!/k!
        const Rational w = falling_factorial(n, n - k);
        weights += w;
        moments += pow(Rational(k), static_cast<std::int64_t>(d)) * w;
    }
    return bell * weights == moments + closed_form_power_sum(d)(n);
}

} // namespace gosum

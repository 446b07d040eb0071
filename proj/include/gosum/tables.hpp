#ifndef GOSUM_TABLES_HPP
#define GOSUM_TABLES_HPP

#include <vector>

#include <gosum/polynomial.hpp>

namespace gosum
{

// Lower-triangular matrix. Row d holds columns origin..d; rows run
// origin..origin+size()-1. Entries outside the triangle read as zero.
class LowerTriangularTable
{
public:
    LowerTriangularTable(unsigned origin, std::vector<std::vector<Rational>> rows);

    [[nodiscard]] unsigned origin() const noexcept
    {
        return origin_;
    }
    [[nodiscard]] unsigned size() const noexcept
    {
        return static_cast<unsigned>(rows_.size());
    }
    [[nodiscard]] const std::vector<std::vector<Rational>> &rows() const noexcept
    {
        return rows_;
    }
    [[nodiscard]] Rational at(unsigned d, unsigned j) const;
    // Entries (d, j) for d = j, j+1, ... within the table.
    [[nodiscard]] std::vector<Rational> column(unsigned j) const;
    [[nodiscard]] bool all_integers() const;
    [[nodiscard]] bool is_identity() const;

    friend bool operator==(const LowerTriangularTable &, const LowerTriangularTable &) = default;

private:
    unsigned origin_;
    std::vector<std::vector<Rational>> rows_;
};

// Product of two tables with the same origin and size.
LowerTriangularTable operator*(const LowerTriangularTable &lhs, const LowerTriangularTable &rhs);

// A(d, j) = [d = j] - C(d-1, j) [d != j], rows 1..dmax: row d + 1 expresses
// p_d(k) = k^(d+1) - (k+1)^d in the basis k^j - b(j).
LowerTriangularTable build_A(unsigned dmax);

// B(j, j) = 1, B(d+1, j) = sum_{j <= i <= d} C(d, i) B(i, j); rows 1..dmax.
// Throws std::logic_error if A * B is not the identity.
LowerTriangularTable build_B(unsigned dmax);

// Column 1 of B: 1, 1, 3, 9, 31, ... (OEIS A040027).
std::vector<Rational> gould_numbers(unsigned dmax);

// B shifted to start at index 0: T(d, j) = B(d+1, j+1). Column j of T is the
// j-th diagonal of OEIS A121207.
LowerTriangularTable a121207_table(unsigned dmax);

// P_d(n) = sum_{j>=1} B(d, j) n^j, with
// sum_{k=0}^{n-1} (k^d - b(d))/k! = -P_d(n)/n!. P_0 = 0.
Polynomial closed_form_power_sum(unsigned d);

// b(d) sum_{k<n} n!/k! == sum_{k<n} k^d n!/k! + sum_j B(d, j) n^j,
// evaluated exactly. Requires n >= 1.
bool verify_bell_identity(unsigned d, unsigned n);

} // namespace gosum

#endif

#pragma once

#include <gerst/rational.hpp>

#include <optional>
#include <vector>

namespace gerst {

/// Dense exact rational matrix, row-major.
class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Rational> multiply(const std::vector<Rational>& x) const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> data_;
};

/// Solves A x = b by Gauss-Jordan elimination to reduced row echelon form.
/// Returns the particular solution with every free variable set to zero, or
/// nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> solve_particular(RationalMatrix a, std::vector<Rational> b);

/// Rank of A (exact).
std::size_t rank(RationalMatrix a);

} // namespace gerst

#include <gerst/errors.hpp>
#include <gerst/exact_solve.hpp>

#include <utility>

namespace gerst {

namespace {

// Reduces [a | b] in place to reduced row echelon form; returns the pivot
// column of each pivot row.
std::vector<std::size_t> reduce(RationalMatrix& a, std::vector<Rational>* b) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < a.rows() && a(pivot, col) == 0) ++pivot;
        if (pivot == a.rows()) continue;
        if (pivot != row) {
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(row, j), a(pivot, j));
            if (b) std::swap((*b)[row], (*b)[pivot]);
        }
        const Rational inv = 1 / a(row, col);
        for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
        if (b) (*b)[row] *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, col) == 0) continue;
            const Rational factor = a(r, col);
            for (std::size_t j = col; j < a.cols(); ++j) a(r, j) -= factor * a(row, j);
            if (b) (*b)[r] -= factor * (*b)[row];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

std::vector<Rational> RationalMatrix::multiply(const std::vector<Rational>& x) const {
    if (x.size() != cols_) throw DimensionError("matrix-vector size mismatch");
    std::vector<Rational> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if ((*this)(r, c) != 0) out[r] += (*this)(r, c) * x[c];
        }
    }
    return out;
}

std::optional<std::vector<Rational>> solve_particular(RationalMatrix a, std::vector<Rational> b) {
    if (b.size() != a.rows()) throw DimensionError("right-hand side size mismatch");
    const auto pivots = reduce(a, &b);
    for (std::size_t r = pivots.size(); r < a.rows(); ++r) {
        if (b[r] != 0) return std::nullopt;
    }
    std::vector<Rational> x(a.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = b[r];
    return x;
}

std::size_t rank(RationalMatrix a) { return reduce(a, nullptr).size(); }

} // namespace gerst

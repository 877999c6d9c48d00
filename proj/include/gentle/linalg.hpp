#pragma once

#include "gentle/rational.hpp"

#include <cstddef>
#include <vector>

namespace gentle {

// Dense exact matrix. Complexes at desk scale produce blocks of at most a few
// hundred rows, so a dense layout keeps elimination simple.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    bool is_zero() const;

    Matrix operator*(const Matrix& rhs) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

// Rank over Q. Rows are scaled to integers and then reduced by fraction-free
// (Bareiss) elimination, so every intermediate value stays an exact integer.
std::size_t exact_rank(const Matrix& m);

}  // namespace gentle

#include "gentle/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace gentle {

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q == 0; });
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix shapes do not match");
    Matrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                if (rhs.at(k, j) != 0) out.at(i, j) += a * rhs.at(k, j);
        }
    return out;
}

std::size_t exact_rank(const Matrix& m) {
    // Clear denominators row by row.
    std::vector<std::vector<BigInt>> a;
    a.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        BigInt l = 1;
        bool nonzero = false;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const Rational& q = m.at(r, c);
            if (q == 0) continue;
            nonzero = true;
            l = boost::multiprecision::lcm(l, denominator(q));
        }
        if (!nonzero) continue;
        std::vector<BigInt> row(m.cols());
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const Rational& q = m.at(r, c);
            if (q != 0) row[c] = numerator(q) * (l / denominator(q));
        }
        a.push_back(std::move(row));
    }

    // Bareiss: after step k every entry is divisible by the previous pivot.
    const std::size_t rows = a.size();
    const std::size_t cols = m.cols();
    std::size_t rank = 0;
    BigInt prev = 1;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        const BigInt& p = a[rank][c];
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const BigInt f = a[r][c];
            for (std::size_t k = c + 1; k < cols; ++k) {
                if (f == 0 && a[r][k] == 0) continue;
                a[r][k] = (p * a[r][k] - f * a[rank][k]) / prev;
            }
            a[r][c] = 0;
        }
        prev = p;
        ++rank;
    }
    return rank;
}

}  // namespace gentle

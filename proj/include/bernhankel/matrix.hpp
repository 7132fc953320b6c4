#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace bernhankel {

/// Dense row-major square matrix.
template <typename T>
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
    SquareMatrix(std::size_t dim, const T& fill) : dim_(dim), data_(dim * dim, fill) {}

    static SquareMatrix from_rows(const std::vector<std::vector<T>>& rows) {
        SquareMatrix m(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != rows.size()) throw std::invalid_argument("SquareMatrix: ragged rows");
            for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    static SquareMatrix identity(std::size_t dim) {
        SquareMatrix m(dim, T(0));
        for (std::size_t i = 0; i < dim; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t dim() const { return dim_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

    SquareMatrix transpose() const {
        SquareMatrix t(dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
        if (a.dim_ != b.dim_) throw std::invalid_argument("SquareMatrix: dimension mismatch");
        SquareMatrix c(a.dim_, T(0));
        for (std::size_t i = 0; i < a.dim_; ++i)
            for (std::size_t k = 0; k < a.dim_; ++k)
                for (std::size_t j = 0; j < a.dim_; ++j) c(i, j) = c(i, j) + a(i, k) * b(k, j);
        return c;
    }

    /// The matrix with one row and one column removed.
    SquareMatrix minor(std::size_t drop_row, std::size_t drop_col) const {
        if (drop_row >= dim_ || drop_col >= dim_) throw std::out_of_range("SquareMatrix::minor: index out of range");
        SquareMatrix m(dim_ - 1);
        for (std::size_t i = 0, mi = 0; i < dim_; ++i) {
            if (i == drop_row) continue;
            for (std::size_t j = 0, mj = 0; j < dim_; ++j) {
                if (j == drop_col) continue;
                m(mi, mj++) = (*this)(i, j);
            }
            ++mi;
        }
        return m;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < dim_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    bool is_symmetric() const {
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i + 1; j < dim_; ++j)
                if (!((*this)(i, j) == (*this)(j, i))) return false;
        return true;
    }

    /// Constant along antidiagonals.
    bool is_hankel() const {
        for (std::size_t i = 0; i + 1 < dim_; ++i)
            for (std::size_t j = 1; j < dim_; ++j)
                if (!((*this)(i, j) == (*this)(i + 1, j - 1))) return false;
        return true;
    }

    friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
        return a.dim_ == b.dim_ && a.data_ == b.data_;
    }

private:
    std::size_t dim_ = 0;
    std::vector<T> data_;
};

}  // namespace bernhankel

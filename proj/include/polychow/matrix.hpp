#ifndef POLYCHOW_MATRIX_HPP
#define POLYCHOW_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "polychow/rat.hpp"

namespace polychow {

// Dense row-major matrix over an exact scalar.  Rows are the primary
// citizens: lattice bases and relation blocks are stored as row lists.
template <class T>
class Matrix {
  public:
    Matrix() = default;

    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    Matrix(std::initializer_list<std::initializer_list<long>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
            for (long x : row) data_.emplace_back(x);
        }
    }

    static Matrix identity(size_t n) {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<T>>& rows, size_t cols) {
        Matrix m(rows.size(), cols);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw std::invalid_argument("ragged row list");
            for (size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    T& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> row(size_t i) const {
        return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }

    void set_row(size_t i, const std::vector<T>& r) {
        if (r.size() != cols_) throw std::invalid_argument("row length mismatch");
        for (size_t j = 0; j < cols_; ++j) (*this)(i, j) = r[j];
    }

    void append_row(const std::vector<T>& r) {
        if (rows_ == 0 && cols_ == 0) cols_ = r.size();
        if (r.size() != cols_) throw std::invalid_argument("row length mismatch");
        data_.insert(data_.end(), r.begin(), r.end());
        ++rows_;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix operator*(const Matrix& other) const {
        if (cols_ != other.rows_) throw std::invalid_argument("matrix product shape mismatch");
        Matrix p(rows_, other.cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == 0) continue;
                for (size_t j = 0; j < other.cols_; ++j) p(i, j) += a * other(k, j);
            }
        return p;
    }

    // m acting on a column vector.
    std::vector<T> apply(const std::vector<T>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("apply: length mismatch");
        std::vector<T> out(rows_, T(0));
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    bool operator==(const Matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }
    bool operator!=(const Matrix& other) const { return !(*this == other); }

    std::string str() const {
        std::ostringstream os;
        os << "[";
        for (size_t i = 0; i < rows_; ++i) {
            if (i) os << "; ";
            for (size_t j = 0; j < cols_; ++j) {
                if (j) os << " ";
                os << to_string((*this)(i, j));
            }
        }
        os << "]";
        return os.str();
    }

  private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

using ZMat = Matrix<Int>;
using QMat = Matrix<Rat>;

QMat to_qmat(const ZMat& m);

// Entry-wise exact conversion; throws if any entry is non-integral.
ZMat to_zmat(const QMat& m);

}  // namespace polychow

#endif

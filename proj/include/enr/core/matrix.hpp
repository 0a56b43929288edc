#pragma once

#include "enr/core/rational.hpp"

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace enr {

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix over a ring T. Vectors are row vectors and
/// matrices act from the right: x -> x * M.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols, T zero = T{}) : r_(rows), c_(cols), zero_(zero), a_(rows * cols, zero) {}
    Matrix(const std::vector<std::vector<T>>& rows, T zero = T{}) : zero_(zero) {
        r_ = rows.size();
        c_ = r_ ? rows[0].size() : 0;
        a_.reserve(r_ * c_);
        for (const auto& row : rows) {
            if (row.size() != c_) throw DimensionError("ragged matrix rows");
            a_.insert(a_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(size_t n, T zero = T{}, T one = T(1)) {
        Matrix m(n, n, zero);
        for (size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }
    bool is_square() const { return r_ == c_; }
    const T& zero() const { return zero_; }

    T& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
    const T& operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }

    std::vector<T> row(size_t i) const { return std::vector<T>(a_.begin() + i * c_, a_.begin() + (i + 1) * c_); }
    std::vector<T> col(size_t j) const {
        std::vector<T> v;
        v.reserve(r_);
        for (size_t i = 0; i < r_; ++i) v.push_back((*this)(i, j));
        return v;
    }
    void set_row(size_t i, const std::vector<T>& v) {
        if (v.size() != c_) throw DimensionError("row length mismatch");
        for (size_t j = 0; j < c_; ++j) (*this)(i, j) = v[j];
    }
    void swap_rows(size_t i, size_t k) {
        if (i == k) return;
        for (size_t j = 0; j < c_; ++j) std::swap((*this)(i, j), (*this)(k, j));
    }
    void swap_cols(size_t j, size_t k) {
        if (j == k) return;
        for (size_t i = 0; i < r_; ++i) std::swap((*this)(i, j), (*this)(i, k));
    }
    static Matrix from_rows(const std::vector<std::vector<T>>& rows, size_t cols, T zero = T{}) {
        Matrix m(rows.size(), cols, zero);
        for (size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
        return m;
    }

    Matrix transpose() const {
        Matrix t(c_, r_, zero_);
        for (size_t i = 0; i < r_; ++i)
            for (size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_symmetric() const {
        if (!is_square()) return false;
        for (size_t i = 0; i < r_; ++i)
            for (size_t j = i + 1; j < c_; ++j)
                if (!((*this)(i, j) == (*this)(j, i))) return false;
        return true;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.c_ != b.r_) throw DimensionError("matrix product dimension mismatch");
        Matrix m(a.r_, b.c_, a.zero_);
        for (size_t i = 0; i < a.r_; ++i)
            for (size_t k = 0; k < a.c_; ++k) {
                const T& x = a(i, k);
                if (x == a.zero_) continue;
                for (size_t j = 0; j < b.c_; ++j) m(i, j) += x * b(k, j);
            }
        return m;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) {
        check_same(a, b);
        for (size_t i = 0; i < a.a_.size(); ++i) a.a_[i] += b.a_[i];
        return a;
    }
    friend Matrix operator-(Matrix a, const Matrix& b) {
        check_same(a, b);
        for (size_t i = 0; i < a.a_.size(); ++i) a.a_[i] -= b.a_[i];
        return a;
    }
    Matrix operator-() const {
        Matrix m = *this;
        for (auto& x : m.a_) x = -x;
        return m;
    }
    friend Matrix operator*(const T& s, Matrix m) {
        for (auto& x : m.a_) x = s * x;
        return m;
    }
    friend Matrix operator*(Matrix m, const T& s) {
        for (auto& x : m.a_) x = x * s;
        return m;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_; }

    /// Row vector times matrix.
    friend std::vector<T> operator*(const std::vector<T>& v, const Matrix& m) {
        if (v.size() != m.r_) throw DimensionError("vector-matrix dimension mismatch");
        std::vector<T> out(m.c_, m.zero_);
        for (size_t i = 0; i < m.r_; ++i) {
            if (v[i] == m.zero_) continue;
            for (size_t j = 0; j < m.c_; ++j) out[j] += v[i] * m(i, j);
        }
        return out;
    }

    Matrix pow(unsigned e, const T& one) const {
        Matrix r = identity(r_, zero_, one), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    /// Rows [r0, r1) and columns [c0, c1).
    Matrix block(size_t r0, size_t r1, size_t c0, size_t c1) const {
        Matrix m(r1 - r0, c1 - c0, zero_);
        for (size_t i = r0; i < r1; ++i)
            for (size_t j = c0; j < c1; ++j) m(i - r0, j - c0) = (*this)(i, j);
        return m;
    }

    template <class U, class Fn>
    Matrix<U> map(Fn fn, U zero = U{}) const {
        Matrix<U> m(r_, c_, zero);
        for (size_t i = 0; i < r_; ++i)
            for (size_t j = 0; j < c_; ++j) m(i, j) = fn((*this)(i, j));
        return m;
    }

    std::string str() const {
        std::ostringstream os;
        for (size_t i = 0; i < r_; ++i) {
            os << "[";
            for (size_t j = 0; j < c_; ++j) os << (j ? " " : "") << (*this)(i, j);
            os << "]\n";
        }
        return os.str();
    }

private:
    static void check_same(const Matrix& a, const Matrix& b) {
        if (a.r_ != b.r_ || a.c_ != b.c_) throw DimensionError("matrix shape mismatch");
    }

    size_t r_ = 0, c_ = 0;
    T zero_{};
    std::vector<T> a_;
};

using IntMatrix = Matrix<Integer>;
using QMatrix = Matrix<Rational>;
using QVector = std::vector<Rational>;
using ZVector = std::vector<Integer>;

template <class T>
T dot(const std::vector<T>& a, const std::vector<T>& b) {
    if (a.size() != b.size()) throw DimensionError("dot product length mismatch");
    T s{};
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

/// Bilinear form x G y^T.
inline Rational bilinear(const QVector& x, const QMatrix& g, const QVector& y) { return dot(x * g, y); }

QMatrix to_rational(const IntMatrix& m);
/// Throws if an entry is not integral.
IntMatrix to_integer(const QMatrix& m);
QVector to_rational(const ZVector& v);
ZVector to_integer(const QVector& v);
/// Least common denominator of all entries.
Integer common_denominator(const QMatrix& m);
Integer common_denominator(const QVector& v);
bool is_integral(const QMatrix& m);

}  // namespace enr

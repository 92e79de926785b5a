#pragma once

#include <corona/polynomial.hpp>
#include <corona/rational.hpp>
#include <corona/rational_function.hpp>

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace corona {

/// Dense row-major matrix over a commutative ring T. T{} must be the ring
/// zero and T(1) the ring one (true for Rational, Polynomial and
/// RationalFunction).
template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T{}) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_) throw std::invalid_argument("Matrix: data size mismatch");
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }
    static Matrix ones(std::size_t rows, std::size_t cols) {
        Matrix m(rows, cols);
        for (auto& x : m.data_) x = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const Matrix&) const = default;

    Matrix operator-() const {
        Matrix out(*this);
        for (auto& x : out.data_) x = -x;
        return out;
    }

    Matrix& operator+=(const Matrix& rhs) {
        check_same_shape(rhs);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& rhs) {
        check_same_shape(rhs);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix multiply: shape mismatch");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T{}) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
            }
        return out;
    }

    friend Matrix operator*(const T& s, const Matrix& m) {
        Matrix out(m);
        for (auto& x : out.data_) x = s * x;
        return out;
    }
    friend Matrix operator*(const Matrix& m, const T& s) { return s * m; }

    Matrix transpose() const {
        Matrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    template <typename F>
    auto map(F&& fn) const {
        using U = decltype(fn(std::declval<const T&>()));
        Matrix<U> out(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(i, j) = fn((*this)(i, j));
        return out;
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> data_;
    void check_same_shape(const Matrix& rhs) const {
        if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
            throw std::invalid_argument("Matrix: shape mismatch");
    }
};

using ExactMatrix = Matrix<Rational>;
using PolyMatrix = Matrix<Polynomial>;
using RatFuncMatrix = Matrix<RationalFunction>;

template <typename T>
Matrix<T> kronecker(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j) == T{}) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return out;
}

template <typename T>
T trace(const Matrix<T>& m) {
    if (!m.is_square()) throw std::invalid_argument("trace: matrix not square");
    T acc{};
    for (std::size_t i = 0; i < m.rows(); ++i) acc += m(i, i);
    return acc;
}

template <typename T>
T sum_entries(const Matrix<T>& m) {
    T acc{};
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j);
    return acc;
}

inline PolyMatrix to_poly_matrix(const ExactMatrix& m) {
    return m.map([](const Rational& x) { return Polynomial(x); });
}

inline RatFuncMatrix to_ratfunc_matrix(const ExactMatrix& m) {
    return m.map([](const Rational& x) { return RationalFunction(x); });
}

inline RatFuncMatrix to_ratfunc_matrix(const PolyMatrix& m) {
    return m.map([](const Polynomial& p) { return RationalFunction(p); });
}

/// λI − M as a polynomial matrix.
inline PolyMatrix lambda_identity_minus(const ExactMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("lambda_identity_minus: matrix not square");
    PolyMatrix out = m.map([](const Rational& x) { return Polynomial(-x); });
    for (std::size_t i = 0; i < m.rows(); ++i) out(i, i) += Polynomial::variable();
    return out;
}

/// Determinant by Gaussian elimination; T must be a field type
/// (Rational or RationalFunction).
template <typename T>
T det(Matrix<T> m) {
    if (!m.is_square()) throw std::invalid_argument("det: matrix not square");
    const std::size_t n = m.rows();
    T result(1);
    bool negate = false;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m(pivot, k) == T{}) ++pivot;
        if (pivot == n) return T{};
        if (pivot != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(pivot, j));
            negate = !negate;
        }
        result = result * m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m(i, k) == T{}) continue;
            T factor = m(i, k) / m(k, k);
            for (std::size_t j = k; j < n; ++j) m(i, j) -= factor * m(k, j);
        }
    }
    if (negate) result = -result;
    return result;
}

/// Inverse by Gauss-Jordan; throws std::domain_error when singular.
template <typename T>
Matrix<T> inverse(Matrix<T> m) {
    if (!m.is_square()) throw std::invalid_argument("inverse: matrix not square");
    const std::size_t n = m.rows();
    Matrix<T> inv = Matrix<T>::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m(pivot, k) == T{}) ++pivot;
        if (pivot == n) throw std::domain_error("inverse: singular matrix");
        if (pivot != k)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(k, j), m(pivot, j));
                std::swap(inv(k, j), inv(pivot, j));
            }
        T diag = m(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            m(k, j) /= diag;
            inv(k, j) /= diag;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || m(i, k) == T{}) continue;
            T factor = m(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) -= factor * m(k, j);
                inv(i, j) -= factor * inv(k, j);
            }
        }
    }
    return inv;
}

/// Fraction-free determinant (Bareiss) over the polynomial ring; every
/// division performed is exact.
Polynomial det_bareiss(PolyMatrix m);

}  // namespace corona

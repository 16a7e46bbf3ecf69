#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace wreath {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Complex = std::complex<double>;

/// Raised when an operation is requested beyond its documented size ceiling.
struct size_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when a search would exceed the configured enumeration budget.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when no separating set exists even with every column selected.
struct not_separable_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised on malformed textual input (s-expressions, signal files, JSON).
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline BigInt big_pow2(unsigned e) {
    return BigInt(1) << e;
}

/// |W_n| = 2^(2^n - 1). Capped where the number itself stays manageable.
inline BigInt group_order(int n) {
    if (n < 1 || n > 20)
        throw std::invalid_argument("group_order: height must be in [1, 20]");
    return big_pow2((1u << static_cast<unsigned>(n)) - 1);
}

inline BigInt binomial(const BigInt& n, unsigned k) {
    if (n < k)
        return 0;
    BigInt r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;  // exact: product of i+1 consecutive integers
    }
    return r;
}

/// Exact quotient; throws if the division leaves a remainder.
inline BigInt exact_div(const BigInt& num, const BigInt& den, const char* what) {
    BigInt q = num / den;
    if (q * den != num)
        throw std::logic_error(std::string("inexact division in ") + what);
    return q;
}

/// Minimal dense row-major matrix. Enough for the small exact matrices
/// used here (irrep matrices, class sums); not a linear algebra library.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, T fill = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = T{1};
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_)
            throw std::invalid_argument("Matrix multiply: shape mismatch");
        Matrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T a = (*this)(i, k);
                if (a == T{})
                    continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r(i, j) += a * o(k, j);
            }
        return r;
    }

    Matrix transposed() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                r(j, i) = (*this)(i, j);
        return r;
    }

    /// Kronecker product, block layout (a_ij * B).
    Matrix kron(const Matrix& o) const {
        Matrix r(rows_ * o.rows_, cols_ * o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) {
                const T a = (*this)(i, j);
                if (a == T{})
                    continue;
                for (std::size_t p = 0; p < o.rows_; ++p)
                    for (std::size_t q = 0; q < o.cols_; ++q)
                        r(i * o.rows_ + p, j * o.cols_ + q) = a * o(p, q);
            }
        return r;
    }

    T trace() const {
        T t{};
        for (std::size_t i = 0; i < rows_ && i < cols_; ++i)
            t += (*this)(i, i);
        return t;
    }

    const std::vector<T>& data() const { return data_; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<std::int64_t>;

}  // namespace wreath

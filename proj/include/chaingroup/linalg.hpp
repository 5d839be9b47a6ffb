#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "chaingroup/error.hpp"

namespace chaingroup {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using IntVector = std::vector<BigInt>;

// Dense row-major integer matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    static Matrix from_rows(const std::vector<std::vector<long long>>& rows) {
        Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
        for (std::size_t i = 0; i < m.r_; ++i) {
            if (rows[i].size() != m.c_) throw Error("shape-mismatch", "ragged rows");
            for (std::size_t j = 0; j < m.c_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    BigInt& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const BigInt& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    IntVector column(std::size_t j) const {
        IntVector v(r_);
        for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
        return v;
    }
    IntVector row(std::size_t i) const { return IntVector(a_.begin() + i * c_, a_.begin() + (i + 1) * c_); }

    bool is_identity() const {
        if (r_ != c_) return false;
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j)
                if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
        return true;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.c_ != y.r_) throw Error("shape-mismatch", "matrix product");
        Matrix z(x.r_, y.c_);
        for (std::size_t i = 0; i < x.r_; ++i)
            for (std::size_t k = 0; k < x.c_; ++k) {
                const BigInt& v = x(i, k);
                if (v == 0) continue;
                for (std::size_t j = 0; j < y.c_; ++j) z(i, j) += v * y(k, j);
            }
        return z;
    }
    friend IntVector operator*(const Matrix& x, const IntVector& v) {
        if (x.c_ != v.size()) throw Error("shape-mismatch", "matrix-vector product");
        IntVector out(x.r_);
        for (std::size_t i = 0; i < x.r_; ++i)
            for (std::size_t j = 0; j < x.c_; ++j) out[i] += x(i, j) * v[j];
        return out;
    }
    friend Matrix operator+(Matrix x, const Matrix& y) {
        if (x.r_ != y.r_ || x.c_ != y.c_) throw Error("shape-mismatch", "matrix sum");
        for (std::size_t k = 0; k < x.a_.size(); ++k) x.a_[k] += y.a_[k];
        return x;
    }
    friend Matrix operator-(Matrix x, const Matrix& y) {
        if (x.r_ != y.r_ || x.c_ != y.c_) throw Error("shape-mismatch", "matrix difference");
        for (std::size_t k = 0; k < x.a_.size(); ++k) x.a_[k] -= y.a_[k];
        return x;
    }
    Matrix operator-() const {
        Matrix m = *this;
        for (auto& v : m.a_) v = -v;
        return m;
    }
    Matrix transpose() const {
        Matrix t(c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<BigInt> a_;
};

inline Matrix mat_power(const Matrix& m, long e) {
    if (e < 0) throw Error("invalid-argument", "negative matrix power");
    Matrix r = Matrix::identity(m.rows()), b = m;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

inline BigInt dot(const IntVector& a, const IntVector& b) {
    BigInt s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline BigInt content(const IntVector& v) {
    BigInt g = 0;
    for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
    return g;
}

inline bool is_zero(const IntVector& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

// Divide out the content and make the first nonzero entry positive.
inline IntVector primitive_normalized(IntVector v) {
    BigInt g = content(v);
    if (g == 0) return v;
    for (auto& x : v) x /= g;
    for (const auto& x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : v) y = -y;
        break;
    }
    return v;
}

namespace detail {

using RMatrix = std::vector<std::vector<Rational>>;

inline RMatrix to_rational(const Matrix& m) {
    RMatrix r(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r[i][j] = Rational(m(i, j));
    return r;
}

// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref(RMatrix& a, std::size_t cols) {
    std::vector<std::size_t> piv;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
        std::size_t p = row;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[row]);
        Rational inv = 1 / a[row][c];
        for (auto& x : a[row]) x *= inv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == row || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] -= f * a[row][j];
        }
        piv.push_back(c);
        ++row;
    }
    return piv;
}

inline IntVector clear_denominators(const std::vector<Rational>& v) {
    BigInt l = 1;
    for (const auto& x : v) {
        BigInt d = boost::multiprecision::denominator(x);
        l = l / boost::multiprecision::gcd(l, d) * d;
    }
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = boost::multiprecision::numerator(v[i]) * (l / boost::multiprecision::denominator(v[i]));
    return out;
}

} // namespace detail

inline std::size_t rank(const Matrix& m) {
    auto a = detail::to_rational(m);
    return detail::rref(a, m.cols()).size();
}

// Primitive integer basis of the rational kernel {x : m x = 0}.
inline std::vector<IntVector> nullspace(const Matrix& m) {
    auto a = detail::to_rational(m);
    auto piv = detail::rref(a, m.cols());
    std::vector<bool> is_piv(m.cols(), false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<IntVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_piv[f]) continue;
        std::vector<Rational> v(m.cols());
        v[f] = 1;
        for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -a[k][f];
        basis.push_back(primitive_normalized(detail::clear_denominators(v)));
    }
    return basis;
}

// Linearly independent columns of m that span its column space over Q.
inline Matrix column_basis(const Matrix& m) {
    auto a = detail::to_rational(m);
    auto piv = detail::rref(a, m.cols());
    Matrix b(m.rows(), piv.size());
    for (std::size_t k = 0; k < piv.size(); ++k)
        for (std::size_t i = 0; i < m.rows(); ++i) b(i, k) = m(i, piv[k]);
    return b;
}

// Inverse of a matrix that is invertible over the integers.
inline Matrix inverse_unimodular(const Matrix& m) {
    if (m.rows() != m.cols()) throw Error("shape-mismatch", "inverse of non-square matrix");
    const std::size_t n = m.rows();
    detail::RMatrix a(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m(i, j));
        a[i][n + i] = 1;
    }
    auto piv = detail::rref(a, n);
    if (piv.size() != n) throw Error("not-invertible", "singular matrix");
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& x = a[i][n + j];
            if (boost::multiprecision::denominator(x) != 1)
                throw Error("not-invertible", "inverse is not integral");
            inv(i, j) = boost::multiprecision::numerator(x);
        }
    return inv;
}

inline std::string to_string(const IntVector& v) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
    return out.str();
}

// "rank=<int>" then one line per row.
inline std::string to_string(const Matrix& m) {
    std::ostringstream out;
    out << "rank=" << m.rows() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) out << to_string(m.row(i)) << '\n';
    return out.str();
}

} // namespace chaingroup

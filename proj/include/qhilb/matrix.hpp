#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qhilb/field.hpp"

namespace qhilb {

template <class F>
class Matrix {
public:
    using Field = F;
    using E = typename F::Element;

    Matrix() = default;
    Matrix(const F& f, std::size_t r, std::size_t c) : f_(f), r_(r), c_(c), a_(r * c, f.zero()) {}

    static Matrix identity(const F& f, std::size_t n)
    {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
        return m;
    }

    static Matrix from_ints(const F& f, const std::vector<std::vector<long long>>& rows)
    {
        std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
        Matrix m(f, r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
            for (std::size_t j = 0; j < c; ++j) m(i, j) = f.from_int(rows[i][j]);
        }
        return m;
    }

    template <class Rng>
    static Matrix random(const F& f, std::size_t r, std::size_t c, Rng& rng)
    {
        Matrix m(f, r, c);
        for (auto& e : m.a_) e = f.random(rng);
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    const F& field() const { return f_; }

    E& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const E& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    Matrix operator+(const Matrix& o) const
    {
        same_shape(o, "+");
        Matrix m(*this);
        for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] += o.a_[k];
        return m;
    }
    Matrix operator-(const Matrix& o) const
    {
        same_shape(o, "-");
        Matrix m(*this);
        for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] -= o.a_[k];
        return m;
    }
    Matrix operator-() const
    {
        Matrix m(*this);
        for (auto& e : m.a_) e = -e;
        return m;
    }
    Matrix operator*(const Matrix& o) const
    {
        if (c_ != o.r_)
            throw std::invalid_argument("matrix product shape mismatch: " + shape() + " * " + o.shape());
        Matrix m(f_, r_, o.c_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t k = 0; k < c_; ++k) {
                const E& x = (*this)(i, k);
                if (f_.is_zero(x)) continue;
                for (std::size_t j = 0; j < o.c_; ++j) m(i, j) += x * o(k, j);
            }
        return m;
    }
    Matrix scaled(const E& s) const
    {
        Matrix m(*this);
        for (auto& e : m.a_) e *= s;
        return m;
    }

    Matrix transpose() const
    {
        Matrix m(f_, c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
    {
        if (r0 + nr > r_ || c0 + nc > c_) throw std::invalid_argument("block out of range");
        Matrix m(f_, nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
        return m;
    }
    void set_block(std::size_t r0, std::size_t c0, const Matrix& b)
    {
        if (r0 + b.r_ > r_ || c0 + b.c_ > c_) throw std::invalid_argument("set_block out of range");
        for (std::size_t i = 0; i < b.r_; ++i)
            for (std::size_t j = 0; j < b.c_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
    }

    static Matrix hstack(const Matrix& a, const Matrix& b)
    {
        if (a.r_ != b.r_) throw std::invalid_argument("hstack row mismatch");
        Matrix m(a.f_, a.r_, a.c_ + b.c_);
        m.set_block(0, 0, a);
        m.set_block(0, a.c_, b);
        return m;
    }
    static Matrix vstack(const Matrix& a, const Matrix& b)
    {
        if (a.c_ != b.c_) throw std::invalid_argument("vstack column mismatch");
        Matrix m(a.f_, a.r_ + b.r_, a.c_);
        m.set_block(0, 0, a);
        m.set_block(a.r_, 0, b);
        return m;
    }

    bool is_zero() const
    {
        for (const auto& e : a_)
            if (!f_.is_zero(e)) return false;
        return true;
    }
    friend bool operator==(const Matrix& x, const Matrix& y)
    {
        return x.r_ == y.r_ && x.c_ == y.c_ && x.a_ == y.a_;
    }
    friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

    std::string shape() const { return std::to_string(r_) + "x" + std::to_string(c_); }

private:
    void same_shape(const Matrix& o, const char* op) const
    {
        if (r_ != o.r_ || c_ != o.c_)
            throw std::invalid_argument(std::string("matrix shape mismatch in ") + op + ": " + shape() + " vs " + o.shape());
    }

    F f_{};
    std::size_t r_ = 0, c_ = 0;
    std::vector<E> a_;
};

template <class F>
struct RowEchelon {
    Matrix<F> r;                      // reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

template <class F>
RowEchelon<F> rref(Matrix<F> m)
{
    using E = typename F::Element;
    const F& f = m.field();
    std::vector<std::size_t> piv;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && f.is_zero(m(sel, col))) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
        E inv = f.one() / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || f.is_zero(m(i, col))) continue;
            E factor = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= factor * m(row, j);
        }
        piv.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(piv)};
}

template <class F>
std::size_t rank(const Matrix<F>& m)
{
    return rref(m).pivots.size();
}

// Columns form a basis of the right kernel {v : m v = 0}.
template <class F>
Matrix<F> kernel(const Matrix<F>& m)
{
    const F& f = m.field();
    auto e = rref(m);
    std::vector<bool> is_piv(m.cols(), false);
    for (auto p : e.pivots) is_piv[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (!is_piv[j]) free_cols.push_back(j);
    Matrix<F> k(f, m.cols(), free_cols.size());
    for (std::size_t t = 0; t < free_cols.size(); ++t) {
        std::size_t fc = free_cols[t];
        k(fc, t) = f.one();
        for (std::size_t i = 0; i < e.pivots.size(); ++i) k(e.pivots[i], t) = -e.r(i, fc);
    }
    return k;
}

template <class F>
struct AffineSolution {
    Matrix<F> particular;  // n x 1
    Matrix<F> directions;  // n x d, basis of the homogeneous solutions
};

// Solves a x = b for a column b; nothing if inconsistent.
template <class F>
std::optional<AffineSolution<F>> solve(const Matrix<F>& a, const Matrix<F>& b)
{
    if (b.rows() != a.rows() || b.cols() != 1) throw std::invalid_argument("solve: right-hand side shape");
    const F& f = a.field();
    auto e = rref(Matrix<F>::hstack(a, b));
    if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
    Matrix<F> x(f, a.cols(), 1);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) x(e.pivots[i], 0) = e.r(i, a.cols());
    return AffineSolution<F>{std::move(x), kernel(a)};
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m)
{
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    std::size_t n = m.rows();
    auto e = rref(Matrix<F>::hstack(m, Matrix<F>::identity(m.field(), n)));
    if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] >= n)) return std::nullopt;
    return e.r.block(0, n, n, n);
}

template <class F>
typename F::Element determinant(Matrix<F> m)
{
    using E = typename F::Element;
    const F& f = m.field();
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    std::size_t n = m.rows();
    E det = f.one();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = c;
        while (sel < n && f.is_zero(m(sel, c))) ++sel;
        if (sel == n) return f.zero();
        if (sel != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(sel, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        E inv = f.one() / m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (f.is_zero(m(i, c))) continue;
            E factor = m(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) m(i, j) -= factor * m(c, j);
        }
    }
    return det;
}

// Projection onto the cokernel of m : F^cols -> F^rows.  The quotient basis
// is given by the coordinates that are not pivots of the row-reduced image,
// which makes the choice canonical.
template <class F>
struct Cokernel {
    Matrix<F> projection;
    std::vector<std::size_t> kept;  // coordinates that survive as the quotient basis
};

template <class F>
Cokernel<F> cokernel(const Matrix<F>& m)
{
    const F& f = m.field();
    std::size_t n = m.rows();
    auto e = rref(m.transpose());
    std::vector<bool> is_piv(n, false);
    for (auto p : e.pivots) is_piv[p] = true;
    std::vector<std::size_t> rest;
    for (std::size_t j = 0; j < n; ++j)
        if (!is_piv[j]) rest.push_back(j);
    Matrix<F> pi(f, rest.size(), n);
    for (std::size_t t = 0; t < rest.size(); ++t) {
        pi(t, rest[t]) = f.one();
        for (std::size_t i = 0; i < e.pivots.size(); ++i) pi(t, e.pivots[i]) = -e.r(i, rest[t]);
    }
    return {std::move(pi), std::move(rest)};
}

template <class F>
Matrix<F> cokernel_projection(const Matrix<F>& m)
{
    return cokernel(m).projection;
}

} // namespace qhilb

#pragma once

#include <stdexcept>
#include <vector>

#include "phicoord/bivariate.hpp"

namespace phicoord {

/// Dense row-major matrix over a coefficient type.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, const T& fill = T{})
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows * cols), fill)
    {
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    T& operator()(int i, int j) { return a_[index(i, j)]; }
    const T& operator()(int i, int j) const { return a_[index(i, j)]; }

    template <typename F>
    auto map(F&& f) const
    {
        using U = decltype(f(a_.front()));
        Matrix<U> out(rows_, cols_);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) {
                out(i, j) = f((*this)(i, j));
            }
        }
        return out;
    }

    Matrix transposed() const
    {
        Matrix out(cols_, rows_);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) {
                out(j, i) = (*this)(i, j);
            }
        }
        return out;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t index(int i, int j) const
    {
        if (i < 0 || j < 0 || i >= rows_ || j >= cols_) {
            throw std::out_of_range("matrix index");
        }
        return static_cast<std::size_t>(i * cols_ + j);
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<T> a_;
};

using Vec = std::vector<Rat>;
using RatMatrix = Matrix<Rat>;
using LaurentMatrix = Matrix<Laurent>;
using BivariateMatrix = Matrix<Bivariate>;

/// Product with an explicit zero for the accumulator.
template <typename A, typename B, typename C>
Matrix<C> multiply(const Matrix<A>& a, const Matrix<B>& b, const C& zero)
{
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("matrix shapes do not match");
    }
    Matrix<C> out(a.rows(), b.cols(), zero);
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            for (int j = 0; j < b.cols(); ++j) {
                out(i, j) += a(i, k) * b(k, j);
            }
        }
    }
    return out;
}

inline RatMatrix identity_matrix(int n)
{
    RatMatrix m(n, n, Rat(0));
    for (int i = 0; i < n; ++i) {
        m(i, i) = Rat(1);
    }
    return m;
}

inline Vec column(const RatMatrix& m, int j)
{
    Vec v(static_cast<std::size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i) {
        v[static_cast<std::size_t>(i)] = m(i, j);
    }
    return v;
}

inline Vec apply(const RatMatrix& m, const Vec& v)
{
    Vec out(static_cast<std::size_t>(m.rows()), Rat(0));
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            out[static_cast<std::size_t>(i)] += m(i, j) * v[static_cast<std::size_t>(j)];
        }
    }
    return out;
}

inline Vec basis_vector(int n, int i)
{
    Vec v(static_cast<std::size_t>(n), Rat(0));
    v[static_cast<std::size_t>(i)] = Rat(1);
    return v;
}

} // namespace phicoord

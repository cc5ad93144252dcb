#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace symhecke {

using Int = long long;
using Rat = boost::rational<Int>;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, T fill = T(0)) : r_(rows), c_(cols), d_(std::size_t(rows) * cols, fill) {}

    static Matrix identity(int n)
    {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }
    static Matrix from_rows(const std::vector<std::vector<T>>& rows)
    {
        int r = int(rows.size());
        int c = r ? int(rows[0].size()) : 0;
        Matrix m(r, c);
        for (int i = 0; i < r; ++i) {
            if (int(rows[i].size()) != c) throw std::invalid_argument("ragged matrix");
            for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }
    T& operator()(int i, int j) { return d_[std::size_t(i) * c_ + j]; }
    const T& operator()(int i, int j) const { return d_[std::size_t(i) * c_ + j]; }
    const std::vector<T>& data() const { return d_; }

    std::vector<T> row(int i) const { return std::vector<T>(d_.begin() + std::size_t(i) * c_, d_.begin() + std::size_t(i + 1) * c_); }
    std::vector<T> col(int j) const
    {
        std::vector<T> v(r_);
        for (int i = 0; i < r_; ++i) v[i] = (*this)(i, j);
        return v;
    }
    std::vector<std::vector<T>> to_rows() const
    {
        std::vector<std::vector<T>> out;
        for (int i = 0; i < r_; ++i) out.push_back(row(i));
        return out;
    }

    Matrix transpose() const
    {
        Matrix t(c_, r_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix operator*(const Matrix& o) const
    {
        if (c_ != o.r_) throw std::invalid_argument("matrix shape mismatch");
        Matrix p(r_, o.c_);
        for (int i = 0; i < r_; ++i)
            for (int k = 0; k < c_; ++k) {
                const T a = (*this)(i, k);
                if (a == T(0)) continue;
                for (int j = 0; j < o.c_; ++j) p(i, j) += a * o(k, j);
            }
        return p;
    }
    std::vector<T> operator*(const std::vector<T>& v) const
    {
        if (int(v.size()) != c_) throw std::invalid_argument("vector shape mismatch");
        std::vector<T> out(r_, T(0));
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) out[i] += (*this)(i, j) * v[j];
        return out;
    }
    Matrix operator+(const Matrix& o) const
    {
        Matrix s = *this;
        for (std::size_t k = 0; k < d_.size(); ++k) s.d_[k] += o.d_[k];
        return s;
    }
    Matrix operator-(const Matrix& o) const
    {
        Matrix s = *this;
        for (std::size_t k = 0; k < d_.size(); ++k) s.d_[k] -= o.d_[k];
        return s;
    }

    bool operator==(const Matrix& o) const { return r_ == o.r_ && c_ == o.c_ && d_ == o.d_; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    bool operator<(const Matrix& o) const
    {
        if (r_ != o.r_) return r_ < o.r_;
        if (c_ != o.c_) return c_ < o.c_;
        return d_ < o.d_;
    }

private:
    int r_ = 0, c_ = 0;
    std::vector<T> d_;
};

using IntMat = Matrix<Int>;
using RatMat = Matrix<Rat>;

Int dot(const IntVec& a, const IntVec& b);
Rat dot(const RatVec& a, const RatVec& b);
Int gcd_of(const IntVec& v);
IntVec primitive(const IntVec& v);
bool is_zero(const IntVec& v);

RatMat to_rat(const IntMat& m);
RatVec to_rat(const IntVec& v);
// Throws if some entry is not an integer.
IntMat to_int(const RatMat& m);
IntVec to_int(const RatVec& v);

// U * A * V = D with U, V unimodular and D diagonal, d_i | d_{i+1}.
struct Smith {
    IntMat U, D, V;
    int rank = 0;
};
Smith smith_normal_form(const IntMat& A);

// Basis of {x in Z^n : A x = 0}, returned as rows in reduced Hermite form.
IntMat integer_kernel(const IntMat& A);
// Row Hermite normal form of the row lattice (zero rows dropped).
IntMat hermite_rows(const IntMat& A);

int rank(RatMat A);
RatMat inverse(const RatMat& A);
// Solution c of B c = x when one exists (B of full column rank); nullopt-like via bool.
bool solve(const RatMat& B, const RatVec& x, RatVec& c);
// Basis of the right kernel of A over Q.
std::vector<RatVec> rational_kernel(RatMat A);

// Rank over F_p of a sparse system given as rows of (column, value) entries.
int rank_mod_p(std::vector<std::vector<std::pair<int, Int>>> rows, int ncols, Int p,
               std::vector<Int>* kernel_vector = nullptr);

}  // namespace symhecke

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "isurf/errors.hpp"

namespace isurf {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// Dense row-major matrix over Int or Rat.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols, T(0)) {}
    Matrix(std::initializer_list<std::initializer_list<long>> init) {
        r_ = init.size();
        c_ = r_ ? init.begin()->size() : 0;
        a_.reserve(r_ * c_);
        for (const auto& row : init) {
            if (row.size() != c_) throw InputError("ragged matrix literal");
            for (long v : row) a_.emplace_back(v);
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols = 0) {
        std::size_t c = rows.empty() ? cols : rows.front().size();
        Matrix m(rows.size(), c);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != c) throw InputError("ragged matrix rows");
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }
    static Matrix diagonal(const std::vector<T>& d) {
        Matrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    bool square() const { return r_ == c_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(a_.begin() + i * c_, a_.begin() + (i + 1) * c_);
    }
    std::vector<T> col(std::size_t j) const {
        std::vector<T> v(r_);
        for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
        return v;
    }
    std::vector<std::vector<T>> to_rows() const {
        std::vector<std::vector<T>> out;
        for (std::size_t i = 0; i < r_; ++i) out.push_back(row(i));
        return out;
    }
    void set_row(std::size_t i, const std::vector<T>& v) {
        for (std::size_t j = 0; j < c_; ++j) (*this)(i, j) = v[j];
    }

    void swap_rows(std::size_t i, std::size_t k) {
        if (i == k) return;
        for (std::size_t j = 0; j < c_; ++j) std::swap((*this)(i, j), (*this)(k, j));
    }
    void swap_cols(std::size_t j, std::size_t k) {
        if (j == k) return;
        for (std::size_t i = 0; i < r_; ++i) std::swap((*this)(i, j), (*this)(i, k));
    }
    // row_i += f * row_k
    void add_row(std::size_t i, std::size_t k, const T& f) {
        if (f == 0) return;
        for (std::size_t j = 0; j < c_; ++j) (*this)(i, j) += f * (*this)(k, j);
    }
    void add_col(std::size_t j, std::size_t k, const T& f) {
        if (f == 0) return;
        for (std::size_t i = 0; i < r_; ++i) (*this)(i, j) += f * (*this)(i, k);
    }
    void negate_row(std::size_t i) {
        for (std::size_t j = 0; j < c_; ++j) (*this)(i, j) = -(*this)(i, j);
    }
    void negate_col(std::size_t j) {
        for (std::size_t i = 0; i < r_; ++i) (*this)(i, j) = -(*this)(i, j);
    }

    Matrix transpose() const {
        Matrix t(c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }
    bool is_zero() const {
        for (const auto& x : a_)
            if (x != 0) return false;
        return true;
    }
    bool is_symmetric() const {
        if (!square()) return false;
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = i + 1; j < c_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    Matrix operator*(const Matrix& o) const {
        if (c_ != o.r_) throw PreconditionError("matrix shape mismatch in product");
        Matrix p(r_, o.c_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t k = 0; k < c_; ++k) {
                const T& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.c_; ++j) p(i, j) += a * o(k, j);
            }
        return p;
    }
    Matrix operator+(const Matrix& o) const {
        check_same(o);
        Matrix s = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] += o.a_[i];
        return s;
    }
    Matrix operator-(const Matrix& o) const {
        check_same(o);
        Matrix s = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] -= o.a_[i];
        return s;
    }
    Matrix scaled(const T& f) const {
        Matrix s = *this;
        for (auto& x : s.a_) x *= f;
        return s;
    }
    std::vector<T> apply(const std::vector<T>& v) const {
        if (v.size() != c_) throw PreconditionError("vector length mismatch");
        std::vector<T> out(r_, T(0));
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) out[i] += (*this)(i, j) * v[j];
        return out;
    }
    bool operator==(const Matrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    // Submatrix of selected rows, all columns.
    Matrix rows_subset(const std::vector<std::size_t>& idx) const {
        Matrix m(idx.size(), c_);
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < c_; ++j) m(i, j) = (*this)(idx[i], j);
        return m;
    }
    Matrix cols_subset(const std::vector<std::size_t>& idx) const {
        Matrix m(r_, idx.size());
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < idx.size(); ++j) m(i, j) = (*this)(i, idx[j]);
        return m;
    }

private:
    void check_same(const Matrix& o) const {
        if (r_ != o.r_ || c_ != o.c_) throw PreconditionError("matrix shape mismatch");
    }
    std::size_t r_ = 0, c_ = 0;
    std::vector<T> a_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

RatMatrix to_rat(const IntMatrix& m);
RatVec to_rat(const IntVec& v);
// Throws PreconditionError when some entry is not an integer.
IntMatrix to_int(const RatMatrix& m);
IntVec to_int(const RatVec& v);
bool is_integral(const RatVec& v);

IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks);

Int dot(const IntVec& a, const IntVec& b);
Rat dot(const RatVec& a, const RatVec& b);
// x^T G y
Int bilinear(const IntMatrix& g, const IntVec& x, const IntVec& y);
Rat bilinear(const RatMatrix& g, const RatVec& x, const RatVec& y);

IntVec add(const IntVec& a, const IntVec& b);
IntVec sub(const IntVec& a, const IntVec& b);
RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
IntVec scale(const IntVec& a, const Int& f);
IntVec neg(const IntVec& a);
bool is_zero(const IntVec& v);
IntVec unit_vector(std::size_t n, std::size_t i);

// v^T M: the row vector obtained by combining the rows of M.
IntVec combine_rows(const IntVec& coeffs, const IntMatrix& m);
RatVec combine_rows(const RatVec& coeffs, const RatMatrix& m);

Int determinant(const IntMatrix& m);
Rat determinant(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);
inline std::size_t rank(const IntMatrix& m) { return rank(to_rat(m)); }
// Inverse of a nonsingular square rational matrix.
RatMatrix inverse(const RatMatrix& m);
// Solves x^T M = b^T (x in the row space coordinates); nullopt-style failure throws.
RatVec solve_row_combination(const RatMatrix& m, const RatVec& b);

Int gcd_of(const IntVec& v);
Int lcm_of_denominators(const RatVec& v);
Int isqrt_floor(const Int& n);
Int floor_div(const Int& a, const Int& b);
Int floor_rat(const Rat& q);
Int ceil_rat(const Rat& q);
// Nearest integer, halves rounded toward +infinity.
Int round_rat(const Rat& q);
// Representative in [0, 1).
Rat frac(const Rat& q);

std::string to_string(const Rat& q);
Rat parse_rational(const std::string& s);

}  // namespace isurf

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "vpf/errors.hpp"

namespace vpf {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Dense row-major matrix over an exact ring.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<long>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
            for (long v : r) data_.emplace_back(v);
        }
    }

    static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
        Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
        for (std::size_t i = 0; i < m.rows_; ++i) {
            if (rows[i].size() != m.cols_) throw Error(ErrorKind::DimensionMismatch, "ragged rows");
            for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    static Matrix from_columns(const std::vector<std::vector<T>>& cols, std::size_t rows) {
        Matrix m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows) throw Error(ErrorKind::DimensionMismatch, "ragged columns");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<T> row(std::size_t r) const {
        return std::vector<T>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
    }
    std::vector<T> column(std::size_t c) const {
        std::vector<T> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, c);
        return out;
    }
    std::vector<std::vector<T>> columns() const {
        std::vector<std::vector<T>> out;
        out.reserve(cols_);
        for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
        return out;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix select_columns(const std::vector<std::size_t>& idx) const {
        Matrix m(rows_, idx.size());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < idx.size(); ++j) m(i, j) = (*this)(i, idx[j]);
        return m;
    }

    Matrix select_rows(const std::vector<std::size_t>& idx) const {
        Matrix m(idx.size(), cols_);
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(idx[i], j);
        return m;
    }

    const std::vector<T>& entries() const { return data_; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v) {
        if (a.cols_ != v.size()) throw Error(ErrorKind::DimensionMismatch, "matrix-vector shape mismatch");
        std::vector<T> out(a.rows_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
        return out;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

RatMatrix to_rational(const IntMatrix& m);
RatVector to_rational(const IntVector& v);
IntVector to_integer(const RatVector& v);  // throws InvalidArgument on a non-integral entry

Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const RatVector& a, const RatVector& b);
Rational dot(const IntVector& a, const RatVector& b);

/// gcd of the entries (0 for the zero vector).
Integer content(const IntVector& v);

/// Smallest integer vector on the same ray (gcd 1); the zero vector maps to itself.
IntVector primitive(const IntVector& v);
IntVector primitive(const RatVector& v);

/// Scales so the first nonzero entry is positive, then makes primitive.
IntVector canonical_line(const IntVector& v);

// Fraction-free (Bareiss) elimination.
Integer det(const IntMatrix& m);
Rational det(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);
std::size_t rank(const IntMatrix& m);

/// Reduced row echelon form; pivot columns appended to `pivots` when given.
RatMatrix rref(RatMatrix m, std::vector<std::size_t>* pivots = nullptr);

RatMatrix inverse(const RatMatrix& m);
IntMatrix adjugate(const IntMatrix& m);

/// Some solution of m x = rhs, or nullopt.
std::optional<RatVector> solve(const RatMatrix& m, const RatVector& rhs);

/// Basis of the right nullspace over Q.
std::vector<RatVector> nullspace(const RatMatrix& m);

struct HermiteForm {
    IntMatrix H;  // column Hermite normal form, trailing zero columns included
    IntMatrix U;  // unimodular, H = M * U
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_rows;
};

/// Column HNF: pivot rows strictly increase, pivots positive, entries left of a pivot in [0, pivot).
HermiteForm hnf(const IntMatrix& m);

/// Z-basis of {y in Z^n : m y = 0}.
std::vector<IntVector> integer_kernel(const IntMatrix& m);

/// Sublattice of Z^d generated by a finite set of integer vectors.
class Lattice {
public:
    Lattice() = default;
    explicit Lattice(const IntMatrix& generators);

    const IntMatrix& basis() const { return basis_; }
    std::size_t rank() const { return basis_.cols(); }
    std::size_t ambient_dim() const { return ambient_dim_; }

    bool contains(const IntVector& v) const;
    /// Integer coordinates with respect to basis(), if v is in the lattice.
    std::optional<IntVector> coordinates(const IntVector& v) const;

    friend bool operator==(const Lattice& a, const Lattice& b) {
        return a.ambient_dim_ == b.ambient_dim_ && a.basis_ == b.basis_;
    }

private:
    IntMatrix basis_;
    std::vector<std::size_t> pivot_rows_;
    std::size_t ambient_dim_ = 0;
};

bool lattice_member(const Lattice& lattice, const IntVector& v);

/// C(a, k) with the counting convention C(a, k) = 0 for a < k or a < 0.
Integer binomial(const Integer& a, unsigned long k);

std::string to_string(const IntVector& v);
std::string to_string(const RatVector& v);

}  // namespace vpf

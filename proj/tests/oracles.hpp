#pragma once
// Independent reference implementations used only by tests.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "vpf/exactmath.hpp"

namespace oracle {

using vpf::Integer;
using vpf::IntMatrix;
using vpf::IntVector;

// Laplace expansion along the first row.
inline Integer cofactor_det(const IntMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Integer total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m(0, c) == 0) continue;
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t k = 0, kk = 0; k < n; ++k) {
                if (k == c) continue;
                minor(r - 1, kk++) = m(r, k);
            }
        Integer t = m(0, c) * cofactor_det(minor);
        total += (c % 2 == 0) ? t : Integer(-t);
    }
    return total;
}

// Searches integer combinations of the columns with coefficients in [-bound, bound].
inline bool small_combination_exists(const IntMatrix& gens, const IntVector& v, long bound) {
    const std::size_t n = gens.cols();
    std::vector<long> coef(n, -bound);
    while (true) {
        bool ok = true;
        for (std::size_t i = 0; i < gens.rows() && ok; ++i) {
            Integer s = 0;
            for (std::size_t j = 0; j < n; ++j) s += gens(i, j) * coef[j];
            ok = (s == v[i]);
        }
        if (ok) return true;
        std::size_t k = 0;
        while (k < n && coef[k] == bound) coef[k++] = -bound;
        if (k == n) return false;
        ++coef[k];
    }
}

// Counts x in N^n with A x = b by exhaustive search in the box 0 <= x_j <= cap.
inline long long box_count(const IntMatrix& A, const IntVector& b, long cap) {
    const std::size_t n = A.cols(), d = A.rows();
    std::vector<long> x(n, 0);
    std::vector<long long> bb(d);
    std::vector<std::vector<long long>> a(d, std::vector<long long>(n));
    for (std::size_t i = 0; i < d; ++i) {
        bb[i] = b[i].get_si();
        for (std::size_t j = 0; j < n; ++j) a[i][j] = A(i, j).get_si();
    }
    long long count = 0;
    std::vector<long long> s(d, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t j) {
        if (j == n) {
            if (s == bb) ++count;
            return;
        }
        for (long v = 0; v <= cap; ++v) {
            rec(j + 1);
            for (std::size_t i = 0; i < d; ++i) s[i] += a[i][j];
        }
        for (std::size_t i = 0; i < d; ++i) s[i] -= a[i][j] * (cap + 1);
    };
    rec(0);
    return count;
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
    return m;
}

// Product of random elementary integer operations; determinant +-1.
inline IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps = 12) {
    IntMatrix m = IntMatrix::identity(n);
    if (n < 2) return m;
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<long> mult(-2, 2);
    for (int s = 0; s < steps; ++s) {
        std::size_t a = pick(rng), b = pick(rng);
        if (a == b) continue;
        long k = mult(rng);
        for (std::size_t c = 0; c < n; ++c) m(a, c) += k * m(b, c);
        if (s % 5 == 4)
            for (std::size_t c = 0; c < n; ++c) std::swap(m(a, c), m(b, c));
    }
    return m;
}

}  // namespace oracle

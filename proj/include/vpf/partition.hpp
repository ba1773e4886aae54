#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "vpf/chambers.hpp"
#include "vpf/quasi_polynomial.hpp"

namespace vpf {

/// Strictly positive integer functional on every column, from the LP max-min problem over the unit box.
IntVector positive_functional(const IntMatrix& A);

/// Reusable brute-force evaluator of p_A(b) = #{x in N^n : A x = b}.
/// Columns are assigned in order; the last d form an invertible basis solved for directly.
/// Each nonbasic x_j is bounded by w·rem / w·a_j, and counts of partial states are memoized,
/// so repeated queries on nearby points share work. Not safe for concurrent use.
class BruteCounter {
public:
    explicit BruteCounter(const VpfInstance& inst);

    /// Throws Overflow if intermediate values would leave 64-bit range.
    Integer operator()(const IntVector& b) const;

    const IntVector& functional() const { return w_; }
    const std::vector<std::size_t>& column_order() const { return order_; }

private:
    using State = std::vector<std::int64_t>;
    struct StateHash {
        std::size_t operator()(const State& s) const;
    };

    unsigned __int128 count(std::size_t depth, const State& rem) const;
    bool hopeless(std::size_t depth, const State& rem) const;

    std::size_t d_ = 0, free_ = 0;                  // free_ = n - d nonbasic columns
    IntVector w_;
    std::vector<std::size_t> order_;                // nonbasic columns, then the basis
    std::vector<std::vector<std::int64_t>> col_;    // columns in `order_`
    std::vector<std::int64_t> weight_;              // w·a_j in `order_`
    std::int64_t det_ = 1;                          // |det| of the basis
    std::vector<std::vector<std::int64_t>> adj_;    // sign(det)·adjugate of the basis
    std::vector<std::vector<std::int64_t>> step_;   // adj_·a_j for each nonbasic column
    std::vector<std::vector<bool>> rest_nonneg_;    // [depth][i]: step_[j][i] >= 0 for all j >= depth
    Integer bound_;                                 // largest safe |b_i| and w·b
    mutable std::vector<std::unordered_map<State, unsigned __int128, StateHash>> memo_;
};

Integer eval_brute(const VpfInstance& inst, const IntVector& b);

/// Coin-exchange counts p_B(t) for t = 0..t_max, B a single row of positive entries.
std::vector<Integer> coin_counts(const IntVector& entries, std::size_t t_max);

/// Denumerant of a 1×k matrix. All-negative rows are negated; mixed signs throw MixedSigns.
QuasiPolynomial denumerant(const IntMatrix& B);

struct CoinPolynomiality {
    bool polynomial = false;
    Integer beta;     // the common entry, when polynomial
    Polynomial poly;  // C(t/beta + k-1, k-1), valid on beta·Z
};

CoinPolynomiality coin_polynomiality(const IntMatrix& B);

/// [p_A(t v) for t = 0..t_max]. Throws OutsideCone.
std::vector<Integer> ehrhart_ray(const VpfInstance& inst, const IntVector& v, std::size_t t_max);

}  // namespace vpf

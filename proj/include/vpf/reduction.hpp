#pragma once

#include <string>
#include <vector>

#include "vpf/chambers.hpp"

namespace vpf {

/// Dimension reduction along the external columns of a chamber.
///
/// Row order of M: rows dual to the removed columns come first, in column-index order;
/// the remaining rows follow sorted lexicographically by normal. B keeps the surviving
/// columns in their original order.
struct ReductionResult {
    std::size_t ell = 0;             // number of removed columns
    ColumnSet removed_columns;       // external columns of the chamber
    ColumnSet kept_columns;          // columns of B, in order
    Cone sigma;                      // simplicial cone supplying M
    ColumnSet sigma_columns;         // columns spanning sigma when it is not the chamber itself
    std::vector<IntVector> rays;     // rays of sigma in row order
    IntMatrix M;                     // M·rays[i] = k[i] e_i
    IntVector k;
    IntMatrix B;                     // (d-ell)×(n-ell)
    IntMatrix variable_map;          // rows ell.. of M: b -> (Mb)_{ell+1..d}
    RatVector target_witness;        // variable_map applied to the chamber's interior witness
    std::string note;

    IntVector map(const IntVector& b) const { return variable_map * b; }
};

/// Throws NotSaturated (witness: a lattice point outside the removed columns' group) or DependentColumns.
ReductionResult reduce(const VpfInstance& inst, const Chamber& chamber);

}  // namespace vpf

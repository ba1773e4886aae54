#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "vpf/cone.hpp"
#include "vpf/exactmath.hpp"

namespace vpf {

using ColumnSet = std::vector<std::size_t>;  // sorted 0-based column indices

/// A validated matrix: rank d, and ker(A) meets the nonnegative orthant only at 0.
struct VpfInstance {
    IntMatrix A;
    Lattice lattice;
    Cone positive_hull;
    bool full_rank = false;
    bool pointed_kernel = false;

    std::size_t d() const { return A.rows(); }
    std::size_t n() const { return A.cols(); }
    IntVector column(std::size_t j) const { return A.column(j); }
};

/// Throws RankDeficient or NotPointed (witness: a primitive nonnegative kernel vector).
VpfInstance validate(const IntMatrix& A);

struct SimplicialCone {
    ColumnSet columns;
    IntMatrix normals;  // row i: primitive inner normal of the facet opposite columns[i]

    bool contains(const RatVector& b) const;
    bool interior_contains(const RatVector& b) const;
};

/// All column subsets s with |s| = rank(A_s) = d, in lex order.
std::vector<ColumnSet> simplicial_cones(const VpfInstance& inst);
std::vector<SimplicialCone> simplicial_cone_data(const VpfInstance& inst);

struct Chamber {
    Cone cone;
    std::size_t id = 0;  // 1-based position in the complex; 0 when built standalone
    std::string hash;    // canonical ray-set hash
    std::vector<ColumnSet> containing_simplicial;
    RatVector interior_witness;
};

/// FNV-1a over the canonical ray list, 16 hex digits.
std::string chamber_hash(const Cone& c);

/// Throws OutsideCone when b is not in pos(A), OnWall when b is not interior to a chamber.
Chamber chamber_of_point(const VpfInstance& inst, const RatVector& b);
Chamber chamber_of_point(const VpfInstance& inst, const IntVector& b);

struct ChamberComplex {
    VpfInstance instance;
    std::vector<Chamber> chambers;  // sorted by ray set, ids 1..
    std::vector<IntVector> walls;   // canonical hyperplane normals, sorted

    /// Chamber of the complex equal to c, or nullptr.
    const Chamber* find(const Cone& c) const;
    const Chamber& by_id(std::size_t id) const;
    /// The complex's chamber with b in its interior.
    const Chamber& locate(const RatVector& b) const;
};

/// VPF_WALL_CAP from the environment, default 512.
std::size_t default_wall_cap();

/// Deduplicated facet hyperplanes of all simplicial cones.
std::vector<IntVector> wall_normals(const VpfInstance& inst);

ChamberComplex chamber_complex(const VpfInstance& inst, std::size_t wall_cap = default_wall_cap());

}  // namespace vpf

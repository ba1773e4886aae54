#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "vpf/exactmath.hpp"

namespace vpf {

struct Facet {
    IntVector normal;                         // primitive inner normal, lies in the linear span of the cone
    std::vector<std::size_t> incident_rays;  // indices into Cone::rays()
};

/// Pointed rational polyhedral cone. Immutable; rays, facets and span equations are computed on construction.
class Cone {
public:
    Cone() = default;

    /// pos(generators). Throws NotPointed (with a nonneg kernel witness) if the cone contains a line.
    Cone(std::size_t ambient_dim, const std::vector<IntVector>& generators);

    /// {x : n·x >= 0 for all n}. Throws NotPointed if the system has rank < ambient_dim.
    static Cone from_inequalities(std::size_t ambient_dim, const std::vector<IntVector>& normals);

    /// Columns of m as generators.
    static Cone from_columns(const IntMatrix& m);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t dim() const { return dim_; }
    bool full_dimensional() const { return dim_ == ambient_dim_; }
    bool is_simplicial() const { return rays_.size() == dim_; }

    const std::vector<IntVector>& generators() const { return generators_; }
    /// Sorted primitive generators of the extreme rays.
    const std::vector<IntVector>& rays() const { return rays_; }
    const std::vector<Facet>& facets() const { return facets_; }
    /// Primitive integer basis of the orthogonal complement of the linear span.
    const std::vector<IntVector>& equations() const { return equations_; }
    /// Facet normals followed by each equation and its negation.
    std::vector<IntVector> inequalities() const;

    bool contains(const RatVector& x) const;
    bool contains(const IntVector& x) const;
    /// Strictly positive on every facet and on the span.
    bool relative_interior_contains(const RatVector& x) const;
    IntVector ray_sum() const;
    std::optional<std::size_t> ray_index(const IntVector& ray) const;

    friend bool operator==(const Cone& a, const Cone& b) {
        return a.ambient_dim_ == b.ambient_dim_ && a.rays_ == b.rays_;
    }
    friend bool operator<(const Cone& a, const Cone& b) { return a.rays_ < b.rays_; }

private:
    struct Trusted {};
    Cone(Trusted, std::size_t ambient_dim, std::vector<IntVector> rays);
    void finish();

    std::size_t ambient_dim_ = 0;
    std::size_t dim_ = 0;
    std::vector<IntVector> generators_;
    std::vector<IntVector> rays_;
    std::vector<Facet> facets_;
    std::vector<IntVector> equations_;
};

/// Nonzero lambda >= 0 with sum 1 and M lambda = 0, if one exists.
std::optional<RatVector> nonnegative_kernel_vector(const IntMatrix& m);

/// LP membership of b in pos(generators of c).
bool cone_member(const Cone& c, const RatVector& b);
bool cone_member(const Cone& c, const IntVector& b);

std::vector<IntVector> minimal_ray_generators(const Cone& c);
std::vector<Facet> facets(const Cone& c);

/// Extreme rays of {x in C : h·x >= 0}, where C = {x : c·x >= 0 for c in constraints} has extreme rays `rays`.
/// The constraint system must have full rank.
std::vector<IntVector> halfspace_cut(std::size_t ambient_dim, const std::vector<IntVector>& constraints,
                                     const std::vector<IntVector>& rays, const IntVector& h);

/// Extreme rays of {x : n·x >= 0} by incremental double description.
std::vector<IntVector> rays_from_inequalities(std::size_t ambient_dim, const std::vector<IntVector>& normals);

struct DualRayMatrix {
    IntMatrix matrix;             // row i: primitive inner normal of the facet not containing rays[i]
    std::vector<IntVector> rays;  // v_1..v_d in row order
    IntVector k;                  // matrix * rays[i] = k[i] e_i
};

/// Rows aligned with `ray_order` (a permutation of c.rays()), or with c.rays() when empty.
DualRayMatrix dual_ray_matrix(const Cone& c, const std::vector<IntVector>& ray_order = {});

Cone intersect(const Cone& a, const Cone& b);

/// dim(c ∩ {x : normal·x = 0}).
std::size_t face_dim_on_hyperplane(const Cone& c, const IntVector& normal);

}  // namespace vpf

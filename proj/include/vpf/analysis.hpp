#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "vpf/chambers.hpp"

namespace vpf {

struct ExternalColumns {
    ColumnSet columns;
    bool degenerate = false;  // every column external and n == d: a single chamber
};

/// {j : a_j not in pos(A without column j)}, by LP membership.
ExternalColumns external_columns(const VpfInstance& inst);

struct ExternalFacet {
    IntVector normal;   // primitive inner normal of the facet of pos(A)
    ColumnSet columns;  // the d-1 columns lying on it
};

/// True iff pos(A) is the only chamber (every simplicial cone contains every column).
bool single_chamber(const VpfInstance& inst);

/// Facets of pos(A) containing exactly d-1 columns. Throws DegenerateComplex for a single chamber.
std::vector<ExternalFacet> external_facets(const VpfInstance& inst);
std::vector<ExternalFacet> external_facets(const VpfInstance& inst, const ChamberComplex& complex);

/// Facet of pos(A) with the given inner normal, if its columns make it external. Throws NotExternalFacet otherwise.
ExternalFacet external_facet_with_normal(const VpfInstance& inst, const IntVector& normal);

/// Intersection of pos(F, a_k) over the off-facet columns a_k.
Chamber external_chamber_of_facet(const VpfInstance& inst, const ExternalFacet& facet);

struct ExternalChamberInfo {
    std::size_t chamber_id = 0;
    ColumnSet external_rays;  // columns generating the external rays
    IntVector internal_ray;
};

/// Classifies a chamber: d-1 rays generated by external columns plus one internal ray.
std::optional<ExternalChamberInfo> external_chamber_info(const VpfInstance& inst, const Chamber& chamber,
                                                         const ColumnSet& external);

struct SemiExternalInfo {
    std::size_t chamber_id = 0;
    std::vector<std::size_t> facets;  // indices into pos(A).facets()
};

std::vector<SemiExternalInfo> semi_external_chambers(const VpfInstance& inst, const ChamberComplex& complex);

struct ExternalReport {
    ExternalColumns external;
    std::vector<ExternalFacet> facets;  // empty for a single chamber
    std::vector<ExternalChamberInfo> chambers;
    std::vector<SemiExternalInfo> semi_external;
};

ExternalReport external_report(const VpfInstance& inst, const ChamberComplex& complex);

/// Columns of `cols` that generate rays of the chamber and are external in A.
ColumnSet external_columns_of(const VpfInstance& inst, const Cone& chamber, const ColumnSet& external);

/// A point of L(A) ∩ span(cols) outside Z-span(cols), or nullopt when saturated. Throws DependentColumns.
std::optional<IntVector> saturation_witness(const VpfInstance& inst, const ColumnSet& cols);
bool saturation_check(const VpfInstance& inst, const ColumnSet& cols);

bool is_unimodular(const IntMatrix& A);

struct VertexCheck {
    bool all_integral = true;
    RatVector vertex;  // length n, when not all integral
    ColumnSet basis;
};

/// Scans basic feasible solutions of {x >= 0 : A x = b} over invertible d-subsets in lex order.
/// Throws LatticeMismatch when b is not in L(A).
VertexCheck vertex_integrality(const VpfInstance& inst, const IntVector& b);

struct DotProductCheck {
    bool verified = true;
    std::vector<Integer> products;               // iota·a_j for every column
    std::optional<std::size_t> counterexample;  // column violating the 0/1 rule
};

/// For unimodular A: iota·a_j is 0 on the facet and 1 off it. Throws NotUnimodular.
DotProductCheck unimodular_dot_products(const VpfInstance& inst, const IntVector& facet_normal);

struct BinomialCertificate {
    IntVector iota;
    Integer beta;
    std::size_t k = 0;  // n - d
};

/// Present iff iota·a_j takes a single value beta on every off-facet column.
std::optional<BinomialCertificate> binomial_certificate(const VpfInstance& inst, const ExternalFacet& facet);

}  // namespace vpf

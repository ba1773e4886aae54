#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vpf/analysis.hpp"
#include "vpf/quasi_polynomial.hpp"
#include "vpf/reduction.hpp"

namespace vpf {

/// p_A(b) = inner(scale · (linear_form · b)) on domain ∩ L(A).
///
/// For an external chamber, linear_form · b is the determinant ratio
/// det(v_1..v_{d-1}, b) / det(v_1..v_d) and scale = k_d, so the inner argument is the
/// integer (Mb)_d even where the ratio itself is fractional.
struct ClosedForm {
    enum class Kind { Reduction, Binomial };

    Kind kind = Kind::Reduction;
    RatVector linear_form;
    Integer scale = 1;
    QuasiPolynomial inner;
    Cone domain;
    std::size_t chamber_id = 0;  // 0 when the chamber was built without the full complex
    std::string chamber_hash;
    Lattice lattice;
    std::string lattice_constraint;
    IntVector internal_ray;

    /// t -> p_A(t v) along the internal ray.
    QuasiPolynomial ehrhart() const;
};

/// Throws NotExternal or NotSaturated.
ClosedForm external_chamber_formula(const VpfInstance& inst, const Chamber& chamber);

struct BinomialResult {
    bool polynomial = false;
    ExternalFacet facet;
    std::vector<Integer> dot_products;      // iota·a_j for every column
    std::vector<Integer> off_facet_values;  // sorted iota·a_j over the columns off the facet
    Integer beta;
    std::optional<ClosedForm> form;         // C(iota·b / beta + n-d, n-d)
    std::size_t determinant_column = 0;     // first off-facet column
    RatVector determinant_form;             // b -> det(F, b) / det(F, a_c)
};

/// Throws NotSaturated when the facet's columns do not generate a saturated semigroup.
BinomialResult binomial_formula(const VpfInstance& inst, const ExternalFacet& facet);

struct Evaluation {
    Integer value;
    bool off_lattice = false;
};

/// Throws OutsideDomain when b is not in the closed domain chamber.
Evaluation evaluate_closed_form(const ClosedForm& cf, const IntVector& b);

}  // namespace vpf

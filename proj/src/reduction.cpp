#include "vpf/reduction.hpp"

#include <algorithm>
#include <numeric>

#include "vpf/analysis.hpp"

namespace vpf {

ReductionResult reduce(const VpfInstance& inst, const Chamber& chamber) {
    const std::size_t d = inst.d(), n = inst.n();
    ReductionResult out;
    out.removed_columns = external_columns_of(inst, chamber.cone, external_columns(inst).columns);
    out.ell = out.removed_columns.size();

    if (out.ell == 0) {
        out.M = IntMatrix::identity(d);
        out.k.assign(d, 1);
        out.B = inst.A;
        out.variable_map = IntMatrix::identity(d);
        out.kept_columns.resize(n);
        std::iota(out.kept_columns.begin(), out.kept_columns.end(), 0);
        out.sigma = chamber.cone;
        out.rays = chamber.cone.rays();
        out.target_witness = chamber.interior_witness;
        out.note = "chamber has no external columns; identity reduction";
        return out;
    }

    if (auto w = saturation_witness(inst, out.removed_columns))
        throw Error(ErrorKind::NotSaturated,
                    "external columns of the chamber do not generate a saturated semigroup; " + to_string(*w) +
                        " is in the lattice but not in their integer span",
                    to_rational(*w));

    if (chamber.cone.is_simplicial()) {
        out.sigma = chamber.cone;
    } else {
        if (chamber.containing_simplicial.empty()) throw std::logic_error("chamber carries no containing simplicial cones");
        out.sigma_columns = *std::min_element(chamber.containing_simplicial.begin(), chamber.containing_simplicial.end());
        out.sigma = Cone::from_columns(inst.A.select_columns(out.sigma_columns));
    }

    DualRayMatrix drm = dual_ray_matrix(out.sigma);
    std::vector<std::size_t> order;
    for (auto j : out.removed_columns) {
        auto it = std::find(drm.rays.begin(), drm.rays.end(), primitive(inst.column(j)));
        if (it == drm.rays.end()) throw std::logic_error("external column is not a ray of the simplicial cone");
        order.push_back(static_cast<std::size_t>(it - drm.rays.begin()));
    }
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < d; ++i)
        if (std::find(order.begin(), order.end(), i) == order.end()) rest.push_back(i);
    std::sort(rest.begin(), rest.end(), [&](std::size_t a, std::size_t b) { return drm.matrix.row(a) < drm.matrix.row(b); });
    order.insert(order.end(), rest.begin(), rest.end());

    out.M = IntMatrix(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        out.rays.push_back(drm.rays[order[i]]);
        out.k.push_back(drm.k[order[i]]);
        for (std::size_t c = 0; c < d; ++c) out.M(i, c) = drm.matrix(order[i], c);
    }

    for (std::size_t j = 0; j < n; ++j)
        if (!std::binary_search(out.removed_columns.begin(), out.removed_columns.end(), j)) out.kept_columns.push_back(j);
    IntMatrix MA = out.M * inst.A;
    std::vector<std::size_t> lower(d - out.ell);
    std::iota(lower.begin(), lower.end(), out.ell);
    out.B = MA.select_rows(lower).select_columns(out.kept_columns);
    out.variable_map = out.M.select_rows(lower);

    out.target_witness.assign(d - out.ell, 0);
    for (std::size_t i = 0; i < d - out.ell; ++i)
        for (std::size_t c = 0; c < d; ++c) out.target_witness[i] += out.variable_map(i, c) * chamber.interior_witness[c];
    if (chamber.cone.is_simplicial()) out.note = "chamber is simplicial; target chamber is the nonnegative orthant";
    return out;
}

}  // namespace vpf

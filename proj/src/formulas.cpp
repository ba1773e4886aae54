#include "vpf/formulas.hpp"

#include <algorithm>

#include "vpf/partition.hpp"

namespace vpf {

namespace {

Rational ratio(const Integer& num, const Integer& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string describe_lattice(const Lattice& L) {
    std::string s = "b in L(A) = Z-span{";
    for (std::size_t j = 0; j < L.rank(); ++j) {
        if (j) s += ", ";
        s += to_string(L.basis().column(j));
    }
    return s + "}";
}

void check_saturated(const VpfInstance& inst, const ColumnSet& cols) {
    if (auto w = saturation_witness(inst, cols))
        throw Error(ErrorKind::NotSaturated,
                    "columns do not generate a saturated semigroup; " + to_string(*w) +
                        " is in the lattice but not in their integer span",
                    to_rational(*w));
}

}  // namespace

QuasiPolynomial ClosedForm::ehrhart() const {
    Rational step = scale * dot(linear_form, to_rational(internal_ray));
    if (step.get_den() != 1 || step <= 0) throw std::logic_error("internal ray does not map to a positive integer");
    return inner.compose_scale(step.get_num());
}

ClosedForm external_chamber_formula(const VpfInstance& inst, const Chamber& chamber) {
    auto info = external_chamber_info(inst, chamber, external_columns(inst).columns);
    if (!info || single_chamber(inst))
        throw Error(ErrorKind::NotExternal, "chamber not external: it needs d-1 rays on external columns and one internal ray");
    check_saturated(inst, info->external_rays);

    ReductionResult red = reduce(inst, chamber);
    const std::size_t d = inst.d();
    ClosedForm cf;
    cf.kind = ClosedForm::Kind::Reduction;
    cf.inner = denumerant(red.B);
    cf.scale = red.k[d - 1];
    for (std::size_t c = 0; c < d; ++c) cf.linear_form.push_back(ratio(red.M(d - 1, c), cf.scale));
    cf.domain = chamber.cone;
    cf.chamber_id = chamber.id;
    cf.chamber_hash = chamber.hash.empty() ? chamber_hash(chamber.cone) : chamber.hash;
    cf.lattice = inst.lattice;
    cf.lattice_constraint = describe_lattice(inst.lattice);
    cf.internal_ray = info->internal_ray;
    return cf;
}

BinomialResult binomial_formula(const VpfInstance& inst, const ExternalFacet& facet) {
    const std::size_t d = inst.d(), n = inst.n();
    check_saturated(inst, facet.columns);
    BinomialResult out;
    out.facet = facet;
    bool have_column = false;
    for (std::size_t j = 0; j < n; ++j) {
        Integer v = dot(facet.normal, inst.column(j));
        out.dot_products.push_back(v);
        if (v == 0) continue;
        out.off_facet_values.push_back(v);
        if (!have_column) {
            out.determinant_column = j;
            have_column = true;
        }
    }
    std::sort(out.off_facet_values.begin(), out.off_facet_values.end());
    if (!have_column) throw Error(ErrorKind::NotExternalFacet, "every column lies on the facet");

    // det(F, b) is linear in b; its coefficients are the cofactors of the last column.
    IntMatrix F = inst.A.select_columns(facet.columns);
    auto det_with = [&](const IntVector& last) {
        std::vector<IntVector> cols = F.columns();
        cols.push_back(last);
        return det(IntMatrix::from_columns(cols, d));
    };
    Integer denom = det_with(inst.column(out.determinant_column));
    for (std::size_t i = 0; i < d; ++i) {
        IntVector e(d);
        e[i] = 1;
        out.determinant_form.push_back(ratio(det_with(e), denom));
    }

    out.polynomial = out.off_facet_values.front() == out.off_facet_values.back();
    if (!out.polynomial) return out;
    out.beta = out.off_facet_values.front();

    ClosedForm cf;
    cf.kind = ClosedForm::Kind::Binomial;
    for (const auto& x : facet.normal) cf.linear_form.push_back(ratio(x, out.beta));
    cf.inner = QuasiPolynomial::polynomial(binomial_polynomial(1, n - d));
    Chamber ch = external_chamber_of_facet(inst, facet);
    cf.domain = ch.cone;
    cf.chamber_hash = ch.hash;
    cf.lattice = inst.lattice;
    cf.lattice_constraint = describe_lattice(inst.lattice);
    for (const auto& r : ch.cone.rays())
        if (dot(facet.normal, r) != 0) cf.internal_ray = r;
    out.form = std::move(cf);
    return out;
}

Evaluation evaluate_closed_form(const ClosedForm& cf, const IntVector& b) {
    if (b.size() != cf.domain.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "point dimension mismatch");
    if (!cf.domain.contains(b))
        throw Error(ErrorKind::OutsideDomain, to_string(b) + " is outside the formula's chamber", to_rational(b));
    if (!cf.lattice.contains(b)) return {0, true};
    Rational t = cf.scale * dot(cf.linear_form, to_rational(b));
    if (t.get_den() != 1) throw std::logic_error("closed form argument is not integral on the lattice");
    Rational v = cf.inner(t.get_num());
    if (v.get_den() != 1 || v < 0) throw std::logic_error("closed form value is not a nonnegative integer");
    return {v.get_num(), false};
}

}  // namespace vpf

#include "vpf/analysis.hpp"

#include <algorithm>
#include <set>

#include "vpf/lp.hpp"

namespace vpf {

namespace {

std::optional<std::size_t> column_on_ray(const VpfInstance& inst, const IntVector& ray, const ColumnSet& among) {
    for (auto j : among)
        if (primitive(inst.column(j)) == ray) return j;
    return std::nullopt;
}

}  // namespace

ExternalColumns external_columns(const VpfInstance& inst) {
    ExternalColumns out;
    const std::size_t n = inst.n();
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::size_t> others;
        for (std::size_t k = 0; k < n; ++k)
            if (k != j) others.push_back(k);
        bool inside = !others.empty() &&
                      lp_feasible(to_rational(inst.A.select_columns(others)), to_rational(inst.column(j))).feasible();
        if (!inside) out.columns.push_back(j);
    }
    if (single_chamber(inst)) {
        bool all = true;
        for (const auto& r : inst.positive_hull.rays()) all = all && column_on_ray(inst, r, out.columns).has_value();
        out.degenerate = all;
    }
    return out;
}

bool single_chamber(const VpfInstance& inst) {
    for (const auto& sc : simplicial_cone_data(inst))
        for (std::size_t j = 0; j < inst.n(); ++j)
            if (!sc.contains(to_rational(inst.column(j)))) return false;
    return true;
}

namespace {

std::vector<ExternalFacet> scan_facets(const VpfInstance& inst) {
    std::vector<ExternalFacet> out;
    for (const auto& f : inst.positive_hull.facets()) {
        ColumnSet on;
        for (std::size_t j = 0; j < inst.n(); ++j)
            if (dot(f.normal, inst.column(j)) == 0) on.push_back(j);
        if (on.size() + 1 == inst.d()) out.push_back({f.normal, on});
    }
    return out;
}

}  // namespace

std::vector<ExternalFacet> external_facets(const VpfInstance& inst) {
    if (single_chamber(inst)) throw Error(ErrorKind::DegenerateComplex, "the chamber complex has a single chamber");
    return scan_facets(inst);
}

std::vector<ExternalFacet> external_facets(const VpfInstance& inst, const ChamberComplex& complex) {
    if (complex.chambers.size() < 2) throw Error(ErrorKind::DegenerateComplex, "the chamber complex has a single chamber");
    return scan_facets(inst);
}

ExternalFacet external_facet_with_normal(const VpfInstance& inst, const IntVector& normal) {
    if (normal.size() != inst.d()) throw Error(ErrorKind::DimensionMismatch, "facet normal dimension mismatch");
    IntVector p = primitive(normal);
    bool is_facet = false;
    for (const auto& f : inst.positive_hull.facets()) is_facet = is_facet || f.normal == p;
    if (!is_facet) throw Error(ErrorKind::NotExternalFacet, to_string(normal) + " is not an inner facet normal of pos(A)");
    ColumnSet on;
    for (std::size_t j = 0; j < inst.n(); ++j)
        if (dot(p, inst.column(j)) == 0) on.push_back(j);
    if (on.size() + 1 != inst.d())
        throw Error(ErrorKind::NotExternalFacet, "facet " + to_string(p) + " contains " + std::to_string(on.size()) +
                                                     " columns, not d-1");
    return {p, on};
}

Chamber external_chamber_of_facet(const VpfInstance& inst, const ExternalFacet& facet) {
    if (single_chamber(inst)) throw Error(ErrorKind::DegenerateComplex, "the chamber complex has a single chamber");
    const std::size_t d = inst.d();
    std::vector<IntVector> ineq;
    for (std::size_t k = 0; k < inst.n(); ++k) {
        if (std::binary_search(facet.columns.begin(), facet.columns.end(), k)) continue;
        ColumnSet s = facet.columns;
        s.insert(std::lower_bound(s.begin(), s.end(), k), k);
        RatMatrix inv = inverse(to_rational(inst.A.select_columns(s)));
        for (std::size_t i = 0; i < d; ++i) ineq.push_back(primitive(inv.row(i)));
    }
    Chamber ch;
    ch.cone = Cone::from_inequalities(d, ineq);
    ch.hash = chamber_hash(ch.cone);
    ch.interior_witness = to_rational(ch.cone.ray_sum());
    for (const auto& sc : simplicial_cone_data(inst))
        if (sc.contains(ch.interior_witness)) ch.containing_simplicial.push_back(sc.columns);
    return ch;
}

std::optional<ExternalChamberInfo> external_chamber_info(const VpfInstance& inst, const Chamber& chamber,
                                                         const ColumnSet& external) {
    const auto& rays = chamber.cone.rays();
    if (rays.size() != inst.d()) return std::nullopt;
    ExternalChamberInfo info;
    info.chamber_id = chamber.id;
    std::size_t internal = 0;
    for (const auto& r : rays) {
        if (auto j = column_on_ray(inst, r, external)) {
            info.external_rays.push_back(*j);
        } else {
            info.internal_ray = r;
            ++internal;
        }
    }
    if (internal != 1) return std::nullopt;
    std::sort(info.external_rays.begin(), info.external_rays.end());
    return info;
}

std::vector<SemiExternalInfo> semi_external_chambers(const VpfInstance& inst, const ChamberComplex& complex) {
    std::vector<SemiExternalInfo> out;
    const auto& facets = inst.positive_hull.facets();
    for (const auto& ch : complex.chambers) {
        SemiExternalInfo info{ch.id, {}};
        for (std::size_t f = 0; f < facets.size(); ++f)
            if (face_dim_on_hyperplane(ch.cone, facets[f].normal) + 1 == inst.d()) info.facets.push_back(f);
        if (!info.facets.empty()) out.push_back(std::move(info));
    }
    return out;
}

ExternalReport external_report(const VpfInstance& inst, const ChamberComplex& complex) {
    ExternalReport r;
    r.external = external_columns(inst);
    if (complex.chambers.size() >= 2) r.facets = external_facets(inst, complex);
    for (const auto& ch : complex.chambers)
        if (auto info = external_chamber_info(inst, ch, r.external.columns)) r.chambers.push_back(*info);
    if (complex.chambers.size() < 2) r.chambers.clear();
    r.semi_external = semi_external_chambers(inst, complex);
    return r;
}

ColumnSet external_columns_of(const VpfInstance& inst, const Cone& chamber, const ColumnSet& external) {
    ColumnSet out;
    for (auto j : external)
        if (chamber.ray_index(inst.column(j))) out.push_back(j);
    return out;
}

std::optional<IntVector> saturation_witness(const VpfInstance& inst, const ColumnSet& cols) {
    const std::size_t d = inst.d();
    if (cols.empty()) return std::nullopt;
    IntMatrix C = inst.A.select_columns(cols);
    if (rank(C) < cols.size()) throw Error(ErrorKind::DependentColumns, "saturation check needs independent columns");
    // Rows of N span the orthogonal complement of span(C).
    std::vector<IntVector> normals;
    for (const auto& y : nullspace(to_rational(C.transpose()))) normals.push_back(primitive(y));
    const IntMatrix& H = inst.lattice.basis();
    IntMatrix NH(normals.size(), H.cols());
    for (std::size_t i = 0; i < normals.size(); ++i)
        for (std::size_t j = 0; j < H.cols(); ++j)
            for (std::size_t k = 0; k < d; ++k) NH(i, j) += normals[i][k] * H(k, j);
    for (const auto& y : integer_kernel(NH)) {
        IntVector g = H * y;
        auto x = solve(to_rational(C), to_rational(g));
        if (!x) throw std::logic_error("lattice generator outside span of the columns");
        for (const auto& q : *x)
            if (q.get_den() != 1) return g;
    }
    return std::nullopt;
}

bool saturation_check(const VpfInstance& inst, const ColumnSet& cols) { return !saturation_witness(inst, cols); }

bool is_unimodular(const IntMatrix& A) {
    const std::size_t d = A.rows(), n = A.cols();
    if (d > n) return false;
    std::vector<std::size_t> idx(d);
    for (std::size_t i = 0; i < d; ++i) idx[i] = i;
    while (true) {
        Integer m = det(A.select_columns(idx));
        if (m > 1 || m < -1) return false;
        std::size_t i = d;
        while (i > 0 && idx[i - 1] == n - d + i - 1) --i;
        if (i == 0) return true;
        ++idx[i - 1];
        for (std::size_t j = i; j < d; ++j) idx[j] = idx[j - 1] + 1;
    }
}

VertexCheck vertex_integrality(const VpfInstance& inst, const IntVector& b) {
    if (b.size() != inst.d()) throw Error(ErrorKind::DimensionMismatch, "point dimension mismatch");
    if (!inst.lattice.contains(b)) throw Error(ErrorKind::LatticeMismatch, to_string(b) + " is not in the lattice of A");
    VertexCheck out;
    RatVector rb = to_rational(b);
    for (const auto& s : simplicial_cones(inst)) {
        auto x = solve(to_rational(inst.A.select_columns(s)), rb);
        if (!x) continue;
        bool nonneg = std::all_of(x->begin(), x->end(), [](const Rational& q) { return q >= 0; });
        if (!nonneg) continue;
        bool integral = std::all_of(x->begin(), x->end(), [](const Rational& q) { return q.get_den() == 1; });
        if (integral) continue;
        out.all_integral = false;
        out.vertex.assign(inst.n(), 0);
        for (std::size_t i = 0; i < s.size(); ++i) out.vertex[s[i]] = (*x)[i];
        out.basis = s;
        return out;
    }
    return out;
}

DotProductCheck unimodular_dot_products(const VpfInstance& inst, const IntVector& facet_normal) {
    if (!is_unimodular(inst.A)) throw Error(ErrorKind::NotUnimodular, "matrix is not unimodular");
    IntVector iota = primitive(facet_normal);
    bool is_facet = false;
    for (const auto& f : inst.positive_hull.facets()) is_facet = is_facet || f.normal == iota;
    if (!is_facet) throw Error(ErrorKind::InvalidArgument, to_string(facet_normal) + " is not a facet normal of pos(A)");
    DotProductCheck out;
    for (std::size_t j = 0; j < inst.n(); ++j) {
        Integer v = dot(iota, inst.column(j));
        out.products.push_back(v);
        if (v != 0 && v != 1 && !out.counterexample) {
            out.verified = false;
            out.counterexample = j;
        }
    }
    return out;
}

std::optional<BinomialCertificate> binomial_certificate(const VpfInstance& inst, const ExternalFacet& facet) {
    std::optional<Integer> beta;
    for (std::size_t j = 0; j < inst.n(); ++j) {
        Integer v = dot(facet.normal, inst.column(j));
        if (v == 0) continue;
        if (beta && *beta != v) return std::nullopt;
        beta = v;
    }
    if (!beta) return std::nullopt;
    return BinomialCertificate{facet.normal, *beta, inst.n() - inst.d()};
}

}  // namespace vpf

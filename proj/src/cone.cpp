#include "vpf/cone.hpp"

#include <algorithm>
#include <utility>

#include "vpf/lp.hpp"

namespace vpf {

namespace {

IntMatrix columns_matrix(const std::vector<IntVector>& cols, std::size_t rows) {
    return IntMatrix::from_columns(cols, rows);
}

std::size_t rank_of_rows(const std::vector<const IntVector*>& rows, std::size_t width) {
    if (rows.empty()) return 0;
    RatMatrix m(rows.size(), width);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < width; ++j) m(i, j) = (*rows[i])[j];
    return rank(m);
}

// Calls f(indices) for every k-subset of {0..n-1} in lex order; stops when f returns false.
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        if (!f(idx)) return;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::vector<IntVector> unique_primitive(const std::vector<IntVector>& vs) {
    std::vector<IntVector> out;
    for (const auto& v : vs) {
        IntVector p = primitive(v);
        if (std::all_of(p.begin(), p.end(), [](const Integer& x) { return x == 0; })) continue;
        out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

std::optional<RatVector> nonnegative_kernel_vector(const IntMatrix& m) {
    LinearProgram lp(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) lp.add_constraint(m.row(i), Relation::Equal, Integer(0));
    lp.add_constraint(IntVector(m.cols(), 1), Relation::Equal, Integer(1));
    LpResult r = lp.feasible();
    if (!r.feasible()) return std::nullopt;
    return r.x;
}

Cone::Cone(std::size_t ambient_dim, const std::vector<IntVector>& generators)
    : ambient_dim_(ambient_dim), generators_(generators) {
    for (const auto& g : generators)
        if (g.size() != ambient_dim) throw Error(ErrorKind::DimensionMismatch, "generator dimension mismatch");
    std::vector<IntVector> uniq = unique_primitive(generators);
    if (!uniq.empty()) {
        IntMatrix g = columns_matrix(uniq, ambient_dim);
        if (rank(g) == uniq.size()) {
            rays_ = uniq;
        } else {
            if (auto w = nonnegative_kernel_vector(g))
                throw Error(ErrorKind::NotPointed, "cone contains a line", *w);
            for (std::size_t i = 0; i < uniq.size(); ++i) {
                std::vector<IntVector> others;
                for (std::size_t j = 0; j < uniq.size(); ++j)
                    if (j != i) others.push_back(uniq[j]);
                if (others.empty() ||
                    !lp_feasible(to_rational(columns_matrix(others, ambient_dim)), to_rational(uniq[i])).feasible())
                    rays_.push_back(uniq[i]);
            }
        }
    }
    finish();
}

Cone::Cone(Trusted, std::size_t ambient_dim, std::vector<IntVector> rays) : ambient_dim_(ambient_dim) {
    rays_ = unique_primitive(rays);
    generators_ = rays_;
    finish();
}

Cone Cone::from_inequalities(std::size_t ambient_dim, const std::vector<IntVector>& normals) {
    return Cone(Trusted{}, ambient_dim, rays_from_inequalities(ambient_dim, normals));
}

Cone Cone::from_columns(const IntMatrix& m) { return Cone(m.rows(), m.columns()); }

void Cone::finish() {
    const std::size_t d = ambient_dim_;
    if (rays_.empty()) {
        dim_ = 0;
        for (std::size_t i = 0; i < d; ++i) {
            IntVector e(d);
            e[i] = 1;
            equations_.push_back(e);
        }
        return;
    }
    IntMatrix R = columns_matrix(rays_, d);
    dim_ = rank(R);
    for (const auto& y : nullspace(to_rational(R.transpose()))) equations_.push_back(primitive(y));

    // Coordinates in a basis of the span: the identity if full-dimensional, else independent rays.
    const std::size_t k = dim_;
    IntMatrix B;
    if (k == d) {
        B = IntMatrix::identity(d);
    } else {
        std::vector<IntVector> chosen;
        for (const auto& r : rays_) {
            chosen.push_back(r);
            if (rank(columns_matrix(chosen, d)) < chosen.size()) chosen.pop_back();
            if (chosen.size() == k) break;
        }
        B = columns_matrix(chosen, d);
    }
    IntMatrix Bt = B.transpose();
    std::vector<IntVector> coords;
    for (const auto& r : rays_) coords.push_back(Bt * r);

    for_each_subset(rays_.size(), k - 1, [&](const std::vector<std::size_t>& subset) {
        for (const auto& f : facets_) {
            bool covered = std::includes(f.incident_rays.begin(), f.incident_rays.end(), subset.begin(), subset.end());
            if (covered) return true;
        }
        RatMatrix rows(subset.size(), k);
        for (std::size_t i = 0; i < subset.size(); ++i)
            for (std::size_t j = 0; j < k; ++j) rows(i, j) = coords[subset[i]][j];
        if (rank(rows) != k - 1) return true;
        RatVector z = nullspace(rows).front();
        IntVector normal = primitive(to_rational(B) * z);
        bool pos = false, neg = false;
        for (const auto& r : rays_) {
            Integer v = dot(normal, r);
            pos |= v > 0;
            neg |= v < 0;
        }
        if (pos && neg) return true;
        if (neg)
            for (auto& x : normal) x = -x;
        Facet f{normal, {}};
        for (std::size_t j = 0; j < rays_.size(); ++j)
            if (dot(normal, rays_[j]) == 0) f.incident_rays.push_back(j);
        facets_.push_back(std::move(f));
        return true;
    });
    std::sort(facets_.begin(), facets_.end(), [](const Facet& a, const Facet& b) { return a.normal < b.normal; });
}

std::vector<IntVector> Cone::inequalities() const {
    std::vector<IntVector> out;
    for (const auto& f : facets_) out.push_back(f.normal);
    for (const auto& e : equations_) {
        out.push_back(e);
        IntVector neg = e;
        for (auto& x : neg) x = -x;
        out.push_back(std::move(neg));
    }
    return out;
}

bool Cone::contains(const RatVector& x) const {
    if (x.size() != ambient_dim_) throw Error(ErrorKind::DimensionMismatch, "point dimension mismatch");
    for (const auto& e : equations_)
        if (dot(e, x) != 0) return false;
    for (const auto& f : facets_)
        if (dot(f.normal, x) < 0) return false;
    return true;
}

bool Cone::contains(const IntVector& x) const { return contains(to_rational(x)); }

bool Cone::relative_interior_contains(const RatVector& x) const {
    if (x.size() != ambient_dim_) throw Error(ErrorKind::DimensionMismatch, "point dimension mismatch");
    if (dim_ == 0) return false;
    for (const auto& e : equations_)
        if (dot(e, x) != 0) return false;
    for (const auto& f : facets_)
        if (dot(f.normal, x) <= 0) return false;
    return true;
}

IntVector Cone::ray_sum() const {
    IntVector s(ambient_dim_);
    for (const auto& r : rays_)
        for (std::size_t i = 0; i < ambient_dim_; ++i) s[i] += r[i];
    return s;
}

std::optional<std::size_t> Cone::ray_index(const IntVector& ray) const {
    IntVector p = primitive(ray);
    auto it = std::lower_bound(rays_.begin(), rays_.end(), p);
    if (it == rays_.end() || *it != p) return std::nullopt;
    return static_cast<std::size_t>(it - rays_.begin());
}

bool cone_member(const Cone& c, const RatVector& b) {
    if (b.size() != c.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "point dimension mismatch");
    if (c.rays().empty()) return std::all_of(b.begin(), b.end(), [](const Rational& x) { return x == 0; });
    return lp_feasible(to_rational(columns_matrix(c.rays(), c.ambient_dim())), b).feasible();
}

bool cone_member(const Cone& c, const IntVector& b) { return cone_member(c, to_rational(b)); }

std::vector<IntVector> minimal_ray_generators(const Cone& c) { return c.rays(); }

std::vector<Facet> facets(const Cone& c) { return c.facets(); }

std::vector<IntVector> halfspace_cut(std::size_t d, const std::vector<IntVector>& constraints,
                                     const std::vector<IntVector>& rays, const IntVector& h) {
    std::vector<Integer> val(rays.size());
    bool any_neg = false;
    for (std::size_t i = 0; i < rays.size(); ++i) {
        val[i] = dot(h, rays[i]);
        any_neg |= val[i] < 0;
    }
    if (!any_neg) return rays;
    std::vector<IntVector> out;
    for (std::size_t i = 0; i < rays.size(); ++i)
        if (val[i] >= 0) out.push_back(rays[i]);
    if (d >= 2) {
        std::vector<std::vector<bool>> tight(rays.size(), std::vector<bool>(constraints.size()));
        for (std::size_t i = 0; i < rays.size(); ++i)
            for (std::size_t c = 0; c < constraints.size(); ++c) tight[i][c] = dot(constraints[c], rays[i]) == 0;
        for (std::size_t p = 0; p < rays.size(); ++p) {
            if (val[p] <= 0) continue;
            for (std::size_t q = 0; q < rays.size(); ++q) {
                if (val[q] >= 0) continue;
                std::vector<const IntVector*> common;
                for (std::size_t c = 0; c < constraints.size(); ++c)
                    if (tight[p][c] && tight[q][c]) common.push_back(&constraints[c]);
                if (common.size() < d - 2 || rank_of_rows(common, d) != d - 2) continue;
                IntVector w(d);
                for (std::size_t i = 0; i < d; ++i) w[i] = val[p] * rays[q][i] - val[q] * rays[p][i];
                out.push_back(primitive(w));
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<IntVector> rays_from_inequalities(std::size_t d, const std::vector<IntVector>& normals) {
    if (d == 0) return {};
    for (const auto& n : normals)
        if (n.size() != d) throw Error(ErrorKind::DimensionMismatch, "inequality dimension mismatch");
    std::vector<IntVector> rows = unique_primitive(normals);

    // Start from d independent rows; their cone is simplicial.
    std::vector<IntVector> processed, pending;
    for (const auto& r : rows) {
        if (processed.size() < d) {
            processed.push_back(r);
            if (rank(IntMatrix::from_rows(processed)) < processed.size()) {
                processed.pop_back();
                pending.push_back(r);
            }
        } else {
            pending.push_back(r);
        }
    }
    if (processed.size() < d) throw Error(ErrorKind::NotPointed, "inequality system does not define a pointed cone");

    std::vector<IntVector> rays;
    RatMatrix inv = inverse(to_rational(IntMatrix::from_rows(processed)));
    for (std::size_t i = 0; i < d; ++i) rays.push_back(primitive(inv.column(i)));
    std::sort(rays.begin(), rays.end());
    for (const auto& h : pending) {
        rays = halfspace_cut(d, processed, rays, h);
        processed.push_back(h);
    }
    return rays;
}

DualRayMatrix dual_ray_matrix(const Cone& c, const std::vector<IntVector>& ray_order) {
    if (!c.full_dimensional()) throw Error(ErrorKind::NotFullDimensional, "dual ray matrix needs a full-dimensional cone");
    if (!c.is_simplicial()) throw Error(ErrorKind::NonSimplicial, "dual ray matrix needs a simplicial cone");
    const std::size_t d = c.ambient_dim();
    DualRayMatrix out;
    if (ray_order.empty()) {
        out.rays = c.rays();
    } else {
        for (const auto& r : ray_order) out.rays.push_back(primitive(r));
        std::vector<IntVector> sorted = out.rays;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != c.rays()) throw Error(ErrorKind::InvalidArgument, "ray order is not a permutation of the cone's rays");
    }
    RatMatrix inv = inverse(to_rational(IntMatrix::from_columns(out.rays, d)));
    out.matrix = IntMatrix(d, d);
    out.k.resize(d);
    for (std::size_t i = 0; i < d; ++i) {
        IntVector row = primitive(inv.row(i));
        for (std::size_t j = 0; j < d; ++j) out.matrix(i, j) = row[j];
        out.k[i] = dot(row, out.rays[i]);
    }
    return out;
}

Cone intersect(const Cone& a, const Cone& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "cone dimension mismatch");
    std::vector<IntVector> ineq = a.inequalities();
    for (auto& n : b.inequalities()) ineq.push_back(std::move(n));
    return Cone::from_inequalities(a.ambient_dim(), ineq);
}

std::size_t face_dim_on_hyperplane(const Cone& c, const IntVector& normal) {
    if (normal.size() != c.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "normal dimension mismatch");
    bool pos = false, neg = false;
    std::vector<IntVector> on;
    for (const auto& r : c.rays()) {
        Integer v = dot(normal, r);
        pos |= v > 0;
        neg |= v < 0;
        if (v == 0) on.push_back(r);
    }
    if (!(pos && neg)) return on.empty() ? 0 : rank(IntMatrix::from_columns(on, c.ambient_dim()));
    std::vector<IntVector> ineq = c.inequalities();
    IntVector neg_normal = normal;
    for (auto& x : neg_normal) x = -x;
    ineq.push_back(normal);
    ineq.push_back(neg_normal);
    return Cone::from_inequalities(c.ambient_dim(), ineq).dim();
}

}  // namespace vpf

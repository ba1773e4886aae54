#include "vpf/exactmath.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace vpf {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::NonSquare: return "NonSquare";
        case ErrorKind::Singular: return "Singular";
        case ErrorKind::RankDeficient: return "RankDeficient";
        case ErrorKind::NotPointed: return "NotPointed";
        case ErrorKind::NonSimplicial: return "NonSimplicial";
        case ErrorKind::NotFullDimensional: return "NotFullDimensional";
        case ErrorKind::OutsideCone: return "OutsideCone";
        case ErrorKind::OnWall: return "OnWall";
        case ErrorKind::WallCapExceeded: return "WallCapExceeded";
        case ErrorKind::DegenerateComplex: return "DegenerateComplex";
        case ErrorKind::DependentColumns: return "DependentColumns";
        case ErrorKind::NotUnimodular: return "NotUnimodular";
        case ErrorKind::LatticeMismatch: return "LatticeMismatch";
        case ErrorKind::NotSaturated: return "NotSaturated";
        case ErrorKind::NotExternal: return "NotExternal";
        case ErrorKind::NotExternalFacet: return "NotExternalFacet";
        case ErrorKind::MixedSigns: return "MixedSigns";
        case ErrorKind::OutsideDomain: return "OutsideDomain";
        case ErrorKind::ConditionNotMet: return "ConditionNotMet";
        case ErrorKind::OddDegreeSum: return "OddDegreeSum";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::Overflow: return "Overflow";
        case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
    return r;
}

RatVector to_rational(const IntVector& v) { return RatVector(v.begin(), v.end()); }

IntVector to_integer(const RatVector& v) {
    IntVector out;
    out.reserve(v.size());
    for (const auto& q : v) {
        if (q.get_den() != 1) throw Error(ErrorKind::InvalidArgument, "non-integral entry " + q.get_str());
        out.push_back(q.get_num());
    }
    return out;
}

Integer dot(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "dot product length mismatch");
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rational dot(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "dot product length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rational dot(const IntVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "dot product length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Integer content(const IntVector& v) {
    Integer g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

IntVector primitive(const IntVector& v) {
    Integer g = content(v);
    if (g == 0 || g == 1) return v;
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) mpz_divexact(out[i].get_mpz_t(), v[i].get_mpz_t(), g.get_mpz_t());
    return out;
}

IntVector primitive(const RatVector& v) {
    Integer l = 1;
    for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].get_num() * (l / v[i].get_den());
    return primitive(out);
}

IntVector canonical_line(const IntVector& v) {
    IntVector p = primitive(v);
    for (const auto& x : p) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : p) y = -y;
        break;
    }
    return p;
}

Integer det(const IntMatrix& input) {
    if (!input.square()) throw Error(ErrorKind::NonSquare, "determinant of a non-square matrix");
    const std::size_t n = input.rows();
    if (n == 0) return 1;
    IntMatrix m = input;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

Rational det(const RatMatrix& m) {
    if (!m.square()) throw Error(ErrorKind::NonSquare, "determinant of a non-square matrix");
    const std::size_t n = m.rows();
    IntMatrix scaled(n, n);
    Rational factor = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < n; ++j) scaled(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
        factor /= l;
    }
    Rational result = Rational(det(scaled)) * factor;
    result.canonicalize();
    return result;
}

RatMatrix rref(RatMatrix m, std::vector<std::size_t>* pivots) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Rational inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (m(r, j) != 0) m(i, j) -= f * m(r, j);
        }
        if (pivots) pivots->push_back(c);
        ++r;
    }
    return m;
}

std::size_t rank(const RatMatrix& m) {
    std::vector<std::size_t> piv;
    rref(m, &piv);
    return piv.size();
}

std::size_t rank(const IntMatrix& m) { return rank(to_rational(m)); }

RatMatrix inverse(const RatMatrix& m) {
    if (!m.square()) throw Error(ErrorKind::NonSquare, "inverse of a non-square matrix");
    const std::size_t n = m.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    std::vector<std::size_t> piv;
    aug = rref(std::move(aug), &piv);
    if (piv.size() < n || piv[n - 1] != n - 1) throw Error(ErrorKind::Singular, "matrix is singular");
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

IntMatrix adjugate(const IntMatrix& m) {
    if (!m.square()) throw Error(ErrorKind::NonSquare, "adjugate of a non-square matrix");
    const std::size_t n = m.rows();
    IntMatrix adj(n, n);
    if (n == 1) {
        adj(0, 0) = 1;
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            IntMatrix minor(n - 1, n - 1);
            for (std::size_t r = 0, rr = 0; r < n; ++r) {
                if (r == j) continue;
                for (std::size_t c = 0, cc = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor(rr, cc++) = m(r, c);
                }
                ++rr;
            }
            Integer d = det(minor);
            adj(i, j) = ((i + j) % 2 == 0) ? d : Integer(-d);
        }
    return adj;
}

std::optional<RatVector> solve(const RatMatrix& m, const RatVector& rhs) {
    if (rhs.size() != m.rows()) throw Error(ErrorKind::DimensionMismatch, "right-hand side length mismatch");
    RatMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = rhs[i];
    }
    std::vector<std::size_t> piv;
    aug = rref(std::move(aug), &piv);
    if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
    RatVector x(m.cols());
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(r, m.cols());
    return x;
}

std::vector<RatVector> nullspace(const RatMatrix& m) {
    std::vector<std::size_t> piv;
    RatMatrix r = rref(m, &piv);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : piv) is_pivot[p] = true;
    std::vector<RatVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        RatVector v(m.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace {

void column_axpy(IntMatrix& m, std::size_t dst, const Integer& q, std::size_t src) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (m(i, src) != 0) m(i, dst) -= q * m(i, src);
}

void column_swap(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

void column_negate(IntMatrix& m, std::size_t c) {
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, c) = -m(i, c);
}

}  // namespace

HermiteForm hnf(const IntMatrix& input) {
    HermiteForm out;
    out.H = input;
    out.U = IntMatrix::identity(input.cols());
    IntMatrix& H = out.H;
    IntMatrix& U = out.U;
    const std::size_t n = H.cols();
    std::size_t k = 0;
    for (std::size_t r = 0; r < H.rows() && k < n; ++r) {
        while (true) {
            std::size_t best = n;
            for (std::size_t j = k; j < n; ++j) {
                if (H(r, j) == 0) continue;
                if (best == n || abs(H(r, j)) < abs(H(r, best))) best = j;
            }
            if (best == n) break;
            bool reduced = true;
            for (std::size_t j = k; j < n; ++j) {
                if (j == best || H(r, j) == 0) continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), H(r, j).get_mpz_t(), H(r, best).get_mpz_t());
                column_axpy(H, j, q, best);
                column_axpy(U, j, q, best);
                if (H(r, j) != 0) reduced = false;
            }
            if (reduced) {
                column_swap(H, k, best);
                column_swap(U, k, best);
                break;
            }
        }
        if (k >= n || H(r, k) == 0) continue;
        if (H(r, k) < 0) {
            column_negate(H, k);
            column_negate(U, k);
        }
        for (std::size_t j = 0; j < k; ++j) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), H(r, j).get_mpz_t(), H(r, k).get_mpz_t());
            if (q == 0) continue;
            column_axpy(H, j, q, k);
            column_axpy(U, j, q, k);
        }
        out.pivot_rows.push_back(r);
        ++k;
    }
    out.rank = k;
    return out;
}

std::vector<IntVector> integer_kernel(const IntMatrix& m) {
    HermiteForm h = hnf(m);
    std::vector<IntVector> basis;
    for (std::size_t j = h.rank; j < m.cols(); ++j) basis.push_back(h.U.column(j));
    return basis;
}

Lattice::Lattice(const IntMatrix& generators) : ambient_dim_(generators.rows()) {
    HermiteForm h = hnf(generators);
    std::vector<std::size_t> keep(h.rank);
    for (std::size_t j = 0; j < h.rank; ++j) keep[j] = j;
    basis_ = h.H.select_columns(keep);
    pivot_rows_ = h.pivot_rows;
}

std::optional<IntVector> Lattice::coordinates(const IntVector& v) const {
    if (v.size() != ambient_dim_) throw Error(ErrorKind::DimensionMismatch, "lattice dimension mismatch");
    IntVector residual = v;
    IntVector coords(basis_.cols());
    for (std::size_t j = 0; j < basis_.cols(); ++j) {
        const std::size_t p = pivot_rows_[j];
        if (!mpz_divisible_p(residual[p].get_mpz_t(), basis_(p, j).get_mpz_t())) return std::nullopt;
        mpz_divexact(coords[j].get_mpz_t(), residual[p].get_mpz_t(), basis_(p, j).get_mpz_t());
        for (std::size_t i = p; i < ambient_dim_; ++i) residual[i] -= coords[j] * basis_(i, j);
    }
    for (const auto& x : residual)
        if (x != 0) return std::nullopt;
    return coords;
}

bool Lattice::contains(const IntVector& v) const { return coordinates(v).has_value(); }

bool lattice_member(const Lattice& lattice, const IntVector& v) { return lattice.contains(v); }

Integer binomial(const Integer& a, unsigned long k) {
    if (a < 0 || a < k) return 0;
    Integer out;
    mpz_bin_ui(out.get_mpz_t(), a.get_mpz_t(), k);
    return out;
}

std::string to_string(const IntVector& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
    os << ')';
    return os.str();
}

std::string to_string(const RatVector& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
    os << ')';
    return os.str();
}

}  // namespace vpf

#include "vpf/chambers.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <set>
#include <string>

namespace vpf {

VpfInstance validate(const IntMatrix& A) {
    if (A.rows() == 0) throw Error(ErrorKind::RankDeficient, "matrix has no rows");
    if (rank(A) < A.rows())
        throw Error(ErrorKind::RankDeficient, "rank " + std::to_string(rank(A)) + " < d = " + std::to_string(A.rows()));
    if (auto w = nonnegative_kernel_vector(A)) {
        RatVector witness = to_rational(primitive(*w));
        throw Error(ErrorKind::NotPointed, "nonzero nonnegative kernel vector " + to_string(witness), witness);
    }
    VpfInstance inst;
    inst.A = A;
    inst.lattice = Lattice(A);
    inst.positive_hull = Cone::from_columns(A);
    inst.full_rank = true;
    inst.pointed_kernel = true;
    return inst;
}

bool SimplicialCone::contains(const RatVector& b) const {
    for (std::size_t i = 0; i < normals.rows(); ++i)
        if (dot(normals.row(i), b) < 0) return false;
    return true;
}

bool SimplicialCone::interior_contains(const RatVector& b) const {
    for (std::size_t i = 0; i < normals.rows(); ++i)
        if (dot(normals.row(i), b) <= 0) return false;
    return true;
}

namespace {

template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        f(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

std::vector<ColumnSet> simplicial_cones(const VpfInstance& inst) {
    std::vector<ColumnSet> out;
    for_each_subset(inst.n(), inst.d(), [&](const std::vector<std::size_t>& s) {
        if (det(inst.A.select_columns(s)) != 0) out.push_back(s);
    });
    return out;
}

std::vector<SimplicialCone> simplicial_cone_data(const VpfInstance& inst) {
    std::vector<SimplicialCone> out;
    const std::size_t d = inst.d();
    for (const auto& s : simplicial_cones(inst)) {
        RatMatrix inv = inverse(to_rational(inst.A.select_columns(s)));
        SimplicialCone sc{s, IntMatrix(d, d)};
        for (std::size_t i = 0; i < d; ++i) {
            IntVector row = primitive(inv.row(i));
            for (std::size_t j = 0; j < d; ++j) sc.normals(i, j) = row[j];
        }
        out.push_back(std::move(sc));
    }
    return out;
}

std::string chamber_hash(const Cone& c) {
    std::uint64_t h = 1469598103934665603ULL;
    for (const auto& r : c.rays()) {
        for (char ch : to_string(r)) {
            h ^= static_cast<unsigned char>(ch);
            h *= 1099511628211ULL;
        }
        h ^= ';';
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

Cone intersection_of(const std::vector<const SimplicialCone*>& cones, std::size_t d) {
    std::vector<IntVector> ineq;
    for (const auto* c : cones)
        for (std::size_t i = 0; i < d; ++i) ineq.push_back(c->normals.row(i));
    return Cone::from_inequalities(d, ineq);
}

Chamber chamber_from_cones(const std::vector<SimplicialCone>& data, const std::vector<bool>& member, std::size_t d,
                           const RatVector& witness) {
    std::vector<const SimplicialCone*> used;
    Chamber ch;
    for (std::size_t i = 0; i < data.size(); ++i)
        if (member[i]) {
            used.push_back(&data[i]);
            ch.containing_simplicial.push_back(data[i].columns);
        }
    ch.cone = intersection_of(used, d);
    ch.hash = chamber_hash(ch.cone);
    ch.interior_witness = witness;
    return ch;
}

}  // namespace

Chamber chamber_of_point(const VpfInstance& inst, const RatVector& b) {
    if (b.size() != inst.d()) throw Error(ErrorKind::DimensionMismatch, "point dimension mismatch");
    if (!inst.positive_hull.contains(b)) throw Error(ErrorKind::OutsideCone, "point " + to_string(b) + " is outside pos(A)");
    std::vector<SimplicialCone> data = simplicial_cone_data(inst);
    std::vector<bool> member(data.size());
    for (std::size_t i = 0; i < data.size(); ++i) member[i] = data[i].contains(b);
    Chamber ch = chamber_from_cones(data, member, inst.d(), b);
    if (!ch.cone.full_dimensional() || !ch.cone.relative_interior_contains(b))
        throw Error(ErrorKind::OnWall, "point " + to_string(b) + " lies on a wall of the chamber complex");
    return ch;
}

Chamber chamber_of_point(const VpfInstance& inst, const IntVector& b) { return chamber_of_point(inst, to_rational(b)); }

const Chamber* ChamberComplex::find(const Cone& c) const {
    for (const auto& ch : chambers)
        if (ch.cone == c) return &ch;
    return nullptr;
}

const Chamber& ChamberComplex::by_id(std::size_t id) const {
    if (id == 0 || id > chambers.size())
        throw Error(ErrorKind::InvalidArgument, "no chamber with id " + std::to_string(id));
    return chambers[id - 1];
}

const Chamber& ChamberComplex::locate(const RatVector& b) const {
    Chamber ch = chamber_of_point(instance, b);
    const Chamber* found = find(ch.cone);
    if (!found) throw std::logic_error("located chamber missing from the complex");
    return *found;
}

std::size_t default_wall_cap() {
    if (const char* env = std::getenv("VPF_WALL_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 512;
}

std::vector<IntVector> wall_normals(const VpfInstance& inst) {
    std::set<IntVector> walls;
    for (const auto& sc : simplicial_cone_data(inst))
        for (std::size_t i = 0; i < sc.normals.rows(); ++i) walls.insert(canonical_line(sc.normals.row(i)));
    return {walls.begin(), walls.end()};
}

namespace {

struct CellSearch {
    std::size_t d;
    const std::vector<IntVector>& walls;
    const std::vector<SimplicialCone>& cones;
    std::map<std::vector<bool>, RatVector> leaves;

    void explore(const std::vector<IntVector>& constraints, const std::vector<IntVector>& rays, std::size_t next) {
        for (std::size_t w = next; w < walls.size(); ++w) {
            const IntVector& h = walls[w];
            bool pos = false, neg = false;
            for (const auto& r : rays) {
                Integer v = dot(h, r);
                pos |= v > 0;
                neg |= v < 0;
            }
            if (!(pos && neg)) continue;
            IntVector hn = h;
            for (auto& x : hn) x = -x;
            std::vector<IntVector> plus = halfspace_cut(d, constraints, rays, h);
            std::vector<IntVector> minus = halfspace_cut(d, constraints, rays, hn);
            std::vector<IntVector> c = constraints;
            c.push_back(h);
            explore(c, plus, w + 1);
            c.back() = hn;
            explore(c, minus, w + 1);
            return;
        }
        IntVector sum(d);
        for (const auto& r : rays)
            for (std::size_t i = 0; i < d; ++i) sum[i] += r[i];
        RatVector witness = to_rational(sum);
        std::vector<bool> key(cones.size());
        for (std::size_t i = 0; i < cones.size(); ++i) key[i] = cones[i].interior_contains(witness);
        leaves.emplace(std::move(key), std::move(witness));
    }
};

}  // namespace

ChamberComplex chamber_complex(const VpfInstance& inst, std::size_t wall_cap) {
    ChamberComplex cx;
    cx.instance = inst;
    cx.walls = wall_normals(inst);
    if (cx.walls.size() > wall_cap)
        throw Error(ErrorKind::WallCapExceeded, std::to_string(cx.walls.size()) + " walls exceed the cap of " +
                                                    std::to_string(wall_cap) + " (set VPF_WALL_CAP to raise it)");
    std::vector<SimplicialCone> data = simplicial_cone_data(inst);
    CellSearch search{inst.d(), cx.walls, data, {}};
    search.explore(inst.positive_hull.inequalities(), inst.positive_hull.rays(), 0);

    for (const auto& [key, witness] : search.leaves) {
        Chamber ch = chamber_from_cones(data, key, inst.d(), witness);
        if (!ch.cone.full_dimensional() || !ch.cone.relative_interior_contains(witness))
            throw std::logic_error("cell witness is not interior to its chamber");
        cx.chambers.push_back(std::move(ch));
    }
    std::sort(cx.chambers.begin(), cx.chambers.end(), [](const Chamber& a, const Chamber& b) { return a.cone < b.cone; });
    cx.chambers.erase(std::unique(cx.chambers.begin(), cx.chambers.end(),
                                  [](const Chamber& a, const Chamber& b) { return a.cone == b.cone; }),
                      cx.chambers.end());
    for (std::size_t i = 0; i < cx.chambers.size(); ++i) cx.chambers[i].id = i + 1;
    return cx;
}

}  // namespace vpf

#include "doctest.h"

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "instances.hpp"
#include "oracles.hpp"
#include "vpf/analysis.hpp"

using namespace vpf;
using fixtures::iv;
using fixtures::random_instance;
using fixtures::rv;

namespace {

Cone pos(const IntMatrix& a, std::initializer_list<std::size_t> one_based, std::vector<IntVector> extra = {}) {
    std::vector<IntVector> g = extra;
    for (auto j : one_based) g.push_back(a.column(j - 1));
    return Cone(a.rows(), g);
}

IntVector facet_through(const VpfInstance& inst, std::initializer_list<std::size_t> one_based) {
    for (const auto& f : inst.positive_hull.facets()) {
        bool all = true;
        for (auto j : one_based) all = all && dot(f.normal, inst.column(j - 1)) == 0;
        if (all) return f.normal;
    }
    return {};
}

}  // namespace

TEST_CASE("external columns") {
    CHECK(external_columns(validate(fixtures::a22())).columns == ColumnSet{0, 1});
    CHECK(external_columns(validate(fixtures::k3())).columns == ColumnSet{0, 3, 5});
    ExternalColumns g6 = external_columns(validate(fixtures::complete_graph(6)));
    CHECK(g6.columns.size() == 15);
    CHECK_FALSE(g6.degenerate);
    ExternalColumns id = external_columns(validate(IntMatrix::identity(3)));
    CHECK(id.columns == ColumnSet{0, 1, 2});
    CHECK(id.degenerate);
}

TEST_CASE("external facets") {
    VpfInstance a22 = validate(fixtures::a22());
    auto fa = external_facets(a22);
    REQUIRE(fa.size() == 2);
    std::vector<ColumnSet> on;
    for (const auto& f : fa) on.push_back(f.columns);
    std::sort(on.begin(), on.end());
    CHECK(on == std::vector<ColumnSet>{{0}, {1}});

    VpfInstance k3 = validate(fixtures::k3());
    auto fk = external_facets(k3, chamber_complex(k3));
    REQUIRE(fk.size() == 1);
    CHECK(fk[0].columns == ColumnSet{0, 5});

    VpfInstance k4 = validate(fixtures::k4());
    CHECK(external_facets(k4).empty());

    CHECK_THROWS_AS(external_facets(validate(IntMatrix::identity(2))), Error);
}

TEST_CASE("external chamber of a facet") {
    IntMatrix k3m = fixtures::k3();
    VpfInstance k3 = validate(k3m);
    Chamber g5 = external_chamber_of_facet(k3, external_facet_with_normal(k3, facet_through(k3, {1, 6})));
    CHECK(g5.cone == pos(k3m, {1, 3, 6}));

    IntMatrix am = fixtures::a22();
    VpfInstance a22 = validate(am);
    Chamber g1 = external_chamber_of_facet(a22, external_facet_with_normal(a22, iv({0, 1})));
    CHECK(g1.cone == pos(am, {1, 3}));

    VpfInstance g6 = validate(fixtures::complete_graph(6));
    ExternalFacet f = external_facet_with_normal(g6, iv({-1, 1, 1, 1, 1, 1}));
    CHECK(f.columns == ColumnSet{0, 1, 2, 3, 4});
    Chamber c = external_chamber_of_facet(g6, f);
    auto info = external_chamber_info(g6, c, external_columns(g6).columns);
    REQUIRE(info.has_value());
    CHECK(info->internal_ray == iv({3, 1, 1, 1, 1, 1}));
    CHECK(info->external_rays == ColumnSet{0, 1, 2, 3, 4});

    CHECK_THROWS_AS(external_facet_with_normal(k3, facet_through(k3, {1, 2, 4})), Error);
}

TEST_CASE("external chambers of the examples") {
    IntMatrix k3m = fixtures::k3();
    VpfInstance k3 = validate(k3m);
    ChamberComplex cx = chamber_complex(k3);
    ExternalReport r = external_report(k3, cx);
    REQUIRE(r.chambers.size() == 1);
    CHECK(cx.by_id(r.chambers[0].chamber_id).cone == pos(k3m, {1, 3, 6}));
    CHECK(r.chambers[0].internal_ray == k3m.column(2));

    VpfInstance k4 = validate(fixtures::k4());
    CHECK(external_report(k4, chamber_complex(k4)).chambers.empty());

    VpfInstance a22 = validate(fixtures::a22());
    CHECK(external_report(a22, chamber_complex(a22)).chambers.size() == 2);
}

TEST_CASE("semi-external chambers") {
    IntMatrix k3m = fixtures::k3();
    VpfInstance k3 = validate(k3m);
    ChamberComplex cx = chamber_complex(k3);
    IntVector v = iv({1, 1, -1});
    std::vector<Cone> expected = {pos(k3m, {4, 5}, {v}), pos(k3m, {2, 4}, {v}), pos(k3m, {3, 5, 6}),
                                  pos(k3m, {1, 3, 6}), pos(k3m, {1, 2, 3})};
    std::vector<Cone> got;
    for (const auto& s : semi_external_chambers(k3, cx)) got.push_back(cx.by_id(s.chamber_id).cone);
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    CHECK(got == expected);

    IntMatrix am = fixtures::a22();
    VpfInstance a22 = validate(am);
    ChamberComplex ca = chamber_complex(a22);
    std::vector<Cone> semi;
    for (const auto& s : semi_external_chambers(a22, ca)) semi.push_back(ca.by_id(s.chamber_id).cone);
    std::sort(semi.begin(), semi.end());
    std::vector<Cone> want = {pos(am, {1, 3}), pos(am, {2, 4})};
    std::sort(want.begin(), want.end());
    CHECK(semi == want);

    VpfInstance orth = validate(IntMatrix::identity(3));
    auto so = semi_external_chambers(orth, chamber_complex(orth));
    REQUIRE(so.size() == 1);
    CHECK(so[0].facets.size() == 3);
}

TEST_CASE("saturation examples") {
    VpfInstance g6 = validate(fixtures::complete_graph(6));
    CHECK(saturation_check(g6, {0, 1, 2, 3, 4}));
    VpfInstance dm = validate(fixtures::dels());
    for (std::size_t a = 0; a < 5; ++a) {
        CHECK(saturation_check(dm, {a}));
        for (std::size_t b = a + 1; b < 5; ++b) CHECK(saturation_check(dm, {a, b}));
    }
    CHECK(saturation_check(validate(IntMatrix{{2}}), {0}));
    VpfInstance two_three = validate(IntMatrix{{2, 3}});
    CHECK_FALSE(saturation_check(two_three, {0}));
    auto w = saturation_witness(two_three, {0});
    REQUIRE(w.has_value());
    CHECK(two_three.lattice.contains(*w));
    CHECK_THROWS_AS(saturation_check(validate(fixtures::a22()), {0, 1, 2}), Error);
}

TEST_CASE("saturation agrees with lattice-point enumeration") {
    std::mt19937_64 rng(41);
    int done = 0;
    while (done < 25) {
        std::size_t d = 2 + done % 2;
        auto inst = random_instance(rng, d, d + 2);
        if (!inst) continue;
        ColumnSet cols;
        for (std::size_t j = 0; j + 1 < d; ++j) cols.push_back(j);
        if (rank(inst->A.select_columns(cols)) < cols.size()) continue;
        bool fast = saturation_check(*inst, cols);
        // brute: lattice points in pos(cols) within a box must have nonnegative integer coordinates
        Cone c(d, inst->A.select_columns(cols).columns());
        RatMatrix C = to_rational(inst->A.select_columns(cols));
        bool brute = true;
        const long B = 12;
        std::vector<long> p(d, -B);
        while (true) {
            IntVector v(p.begin(), p.end());
            if (c.contains(v) && inst->lattice.contains(v)) {
                auto x = solve(C, to_rational(v));
                for (const auto& q : *x) brute = brute && q.get_den() == 1;
            }
            std::size_t k = 0;
            while (k < d && p[k] == B) p[k++] = -B;
            if (k == d) break;
            ++p[k];
        }
        CHECK(fast == brute);
        ++done;
    }
}

TEST_CASE("unimodularity") {
    IntMatrix ii{{1, 0, 1, 0}, {0, 1, 0, 1}};
    CHECK(is_unimodular(ii));
    CHECK(is_unimodular(fixtures::k3()));
    CHECK_FALSE(is_unimodular(fixtures::complete_graph(6)));
}

TEST_CASE("vertex integrality") {
    VpfInstance g6 = validate(fixtures::complete_graph(6));
    VertexCheck vc = vertex_integrality(g6, iv({1, 1, 1, 1, 1, 1}));
    REQUIRE_FALSE(vc.all_integral);
    RatVector expected(15, 0);
    for (std::size_t j : {0, 1, 5, 12, 13, 14}) expected[j] = Rational(1, 2);
    CHECK(vc.vertex == expected);
    CHECK(to_rational(g6.A) * vc.vertex == rv({1, 1, 1, 1, 1, 1}));

    CHECK(vertex_integrality(validate(fixtures::dels()), iv({2, 2, 2})).all_integral);
    VpfInstance id = validate(IntMatrix::identity(3));
    CHECK(vertex_integrality(id, iv({4, 0, 7})).all_integral);
    CHECK_THROWS_AS(vertex_integrality(validate(fixtures::dels()), iv({1, 0, 0})), Error);
}

TEST_CASE("unimodular dot products") {
    VpfInstance k3 = validate(fixtures::k3());
    DotProductCheck r = unimodular_dot_products(k3, facet_through(k3, {1, 6}));
    CHECK(r.verified);
    CHECK(r.products == std::vector<Integer>{0, 1, 1, 1, 1, 0});
    VpfInstance id = validate(IntMatrix::identity(3));
    CHECK(unimodular_dot_products(id, iv({1, 0, 0})).verified);
    try {
        unimodular_dot_products(validate(fixtures::dels()), iv({1, 0, 0}));
        FAIL("expected NotUnimodular");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotUnimodular);
    }
}

TEST_CASE("externality is invariant under unimodular transforms") {
    std::mt19937_64 rng(42);
    int done = 0;
    while (done < 20) {
        std::size_t d = 2 + done % 3;
        auto inst = random_instance(rng, d, d + 3);
        if (!inst) continue;
        IntMatrix M = oracle::random_unimodular(rng, d);
        VpfInstance moved = validate(M * inst->A);
        CHECK(external_columns(moved).columns == external_columns(*inst).columns);
        ++done;
    }
}

TEST_CASE("external chamber properties on random matrices") {
    std::mt19937_64 rng(43);
    int done = 0, with_external = 0;
    while (done < 15) {
        std::size_t d = 2 + done % 2;
        auto inst = random_instance(rng, d, d + 2 + done % 2);
        if (!inst) continue;
        ChamberComplex cx = chamber_complex(*inst);
        if (cx.chambers.size() < 2) continue;
        ColumnSet ext = external_columns(*inst).columns;
        for (const auto& ch : cx.chambers) {
            if (auto info = external_chamber_info(*inst, ch, ext)) {
                CHECK(ch.cone.is_simplicial());
                CHECK(info->external_rays.size() + 1 == d);
            }
            // a chamber containing an external column has exactly one facet omitting it
            for (auto j : ext) {
                auto ri = ch.cone.ray_index(inst->column(j));
                if (!ri) continue;
                std::size_t omitting = 0;
                for (const auto& f : ch.cone.facets())
                    if (!std::binary_search(f.incident_rays.begin(), f.incident_rays.end(), *ri)) ++omitting;
                CHECK(omitting == 1);
            }
        }
        for (const auto& f : external_facets(*inst, cx)) {
            Chamber direct = external_chamber_of_facet(*inst, f);
            CHECK(cx.locate(direct.interior_witness).cone == direct.cone);
            CHECK(external_chamber_info(*inst, direct, ext).has_value());
            ++with_external;
        }
        ++done;
    }
    CHECK(with_external > 0);
}

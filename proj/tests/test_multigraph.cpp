#include "doctest.h"

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "vpf/analysis.hpp"
#include "vpf/multigraph.hpp"

using namespace vpf;
using fixtures::iv;

namespace {

template <typename F>
void for_each_descending(std::size_t m, long top, F&& f) {
    IntVector d(m, 0);
    std::vector<long> e(m, 0);
    while (true) {
        for (std::size_t i = 0; i < m; ++i) d[i] = e[m - 1 - i];  // e ascending, d descending
        f(d);
        std::size_t i = m;
        while (i > 0 && e[i - 1] == top) --i;
        if (i == 0) return;
        ++e[i - 1];
        for (std::size_t j = i; j < m; ++j) e[j] = e[i - 1];
    }
}

template <typename Fn>
void expect_error(ErrorKind kind, Fn&& fn) {
    try {
        fn();
        FAIL("no error raised");
    } catch (const Error& e) {
        CHECK(e.kind() == kind);
    }
}

}  // namespace

TEST_CASE("incidence matrices") {
    CHECK(incidence_matrix(3) == IntMatrix{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
    CHECK(incidence_matrix(4).cols() == 6);
    IntMatrix g6{{1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0},
                 {0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 1, 1, 0, 0, 0}, {0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 1, 0},
                 {0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 0, 1, 0, 1}, {0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 0, 1, 1}};
    CHECK(incidence_matrix(6) == g6);
    expect_error(ErrorKind::InvalidArgument, [] { incidence_matrix(1); });
}

TEST_CASE("brute-force counts") {
    CHECK(count_brute(iv({5, 4, 3, 2})) == 6);
    CHECK(count_brute(iv({0, 0, 0})) == 1);
    CHECK(count_brute(iv({2, 1, 1})) == 1);
    CHECK(count_brute(iv({2, 2, 2})) == 1);
    CHECK(count_brute(iv({1, 1, 1})) == 0);
    CHECK(count_brute(iv({3, 3})) == 1);
    CHECK(count_brute(iv({3, 1})) == 0);
    // independent box enumeration of edge multiplicities
    for (const auto& d : {iv({5, 4, 3, 2}), iv({4, 4, 2, 2}), iv({6, 2, 2, 2}), iv({3, 3, 3, 1})})
        CHECK(count_brute(d) == Integer(static_cast<long>(oracle::box_count(incidence_matrix(4), d, 6))));
}

TEST_CASE("closed formula examples") {
    CHECK(count_formula(iv({5, 4, 3, 2})) == 6);
    CHECK(count_formula(iv({2, 2, 2})) == 1);
    CHECK(count_formula(iv({4, 0, 0, 0})) == 0);
    CHECK(count_brute(iv({4, 0, 0, 0})) == 0);
    expect_error(ErrorKind::ConditionNotMet, [] { count_formula(iv({2, 3, 4, 5})); });
    expect_error(ErrorKind::ConditionNotMet, [] { count_formula(iv({4, 4, 4, 1})); });
    expect_error(ErrorKind::OddDegreeSum, [] { count_formula(iv({3, 2, 2})); });
}

TEST_CASE("formula agrees with enumeration for m = 3, 4, 5") {
    for (std::size_t m = 3; m <= 5; ++m) {
        MultigraphCounter brute;
        int compared = 0, mismatches = 0;
        for_each_descending(m, 8, [&](const IntVector& d) {
            if (!formula_condition(d)) return;
            Integer sum = 0;
            for (const auto& x : d) sum += x;
            if (sum % 2 != 0) return;
            ++compared;
            if (count_formula(d) != brute(d)) ++mismatches;
        });
        CHECK(compared > 0);
        CHECK(mismatches == 0);
    }
}

TEST_CASE("counts are invariant under relabeling and vanish on odd sums") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> deg(0, 6);
    MultigraphCounter brute;
    for (int t = 0; t < 40; ++t) {
        std::size_t m = 3 + t % 3;
        IntVector d(m);
        for (auto& x : d) x = deg(rng);
        IntVector p = d;
        std::shuffle(p.begin(), p.end(), rng);
        Integer c = brute(d);
        CHECK(c == brute(p));
        Integer sum = 0;
        for (const auto& x : d) sum += x;
        if (sum % 2 != 0) CHECK(c == 0);
    }
}

TEST_CASE("automatic method selection") {
    MultigraphCount a = count_auto(iv({5, 4, 3, 2}));
    CHECK(a.count == 6);
    CHECK(a.method == CountMethod::Formula);
    MultigraphCount odd = count_auto(iv({1, 1, 1}));
    CHECK(odd.count == 0);
    CHECK(odd.method == CountMethod::Parity);
    CHECK(count_auto(iv({2, 2, 2})).count == 1);
    MultigraphCount b = count_auto(iv({4, 4, 4, 2}));
    CHECK(b.method == CountMethod::Brute);
    CHECK(b.count == count_brute(iv({4, 4, 4, 2})));
}

TEST_CASE("chamber inequalities") {
    std::vector<IntVector> four = chamber_inequalities(4);
    REQUIRE(four.size() == 4);
    CHECK(four[0] == iv({-1, 1, 1, 1}));
    CHECK(four[1] == iv({1, 1, -1, -1}));
    CHECK(four[3] == iv({1, -1, -1, 1}));
    for (const auto& n : four) CHECK(dot(n, iv({5, 4, 3, 2})) >= 0);

    Cone six = Cone::from_inequalities(6, chamber_inequalities(6));
    CHECK(six.ray_index(iv({3, 1, 1, 1, 1, 1})).has_value());

    expect_error(ErrorKind::InvalidArgument, [] { chamber_inequalities(2); });
}

TEST_CASE("chamber inequalities cut out the external chamber") {
    CHECK(Cone::from_inequalities(3, chamber_inequalities(3)) == Cone::from_columns(incidence_matrix(3)));
    for (std::size_t m = 4; m <= 6; ++m) {
        VpfInstance g = validate(incidence_matrix(m));
        IntVector iota(m, 1);
        iota[0] = -1;
        Chamber ch = external_chamber_of_facet(g, external_facet_with_normal(g, iota));
        CHECK(ch.cone == Cone::from_inequalities(m, chamber_inequalities(m)));
    }
}

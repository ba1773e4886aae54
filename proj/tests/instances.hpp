#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "vpf/chambers.hpp"

namespace fixtures {

// Random pointed rank-d matrix with entries in [-3, 3], or nullopt when validation fails.
inline std::optional<vpf::VpfInstance> random_instance(std::mt19937_64& rng, std::size_t d, std::size_t n) {
    vpf::IntMatrix m = oracle::random_matrix(rng, d, n, -3, 3);
    try {
        return vpf::validate(m);
    } catch (const vpf::Error&) {
        return std::nullopt;
    }
}

// Every integer point of [lo, hi]^d.
inline std::vector<vpf::IntVector> box(std::size_t d, long lo, long hi) {
    std::vector<vpf::IntVector> out;
    vpf::IntVector p(d, lo);
    while (true) {
        out.push_back(p);
        std::size_t i = 0;
        while (i < d && p[i] == hi) p[i++] = lo;
        if (i == d) return out;
        ++p[i];
    }
}

// Lattice points of the closed cone in [lo, hi]^d, filtering with machine integers first.
inline std::vector<vpf::IntVector> lattice_points_in(const vpf::VpfInstance& inst, const vpf::Cone& c, long lo, long hi) {
    const std::size_t d = inst.d();
    std::vector<std::vector<long>> rows;
    for (const auto& n : c.inequalities()) {
        std::vector<long> r(d);
        for (std::size_t i = 0; i < d; ++i) r[i] = n[i].get_si();
        rows.push_back(std::move(r));
    }
    std::vector<vpf::IntVector> out;
    std::vector<long> p(d, lo);
    while (true) {
        bool in = std::all_of(rows.begin(), rows.end(), [&](const std::vector<long>& r) {
            return std::inner_product(r.begin(), r.end(), p.begin(), 0L) >= 0;
        });
        if (in) {
            vpf::IntVector v(p.begin(), p.end());
            if (inst.lattice.contains(v)) out.push_back(std::move(v));
        }
        std::size_t i = 0;
        while (i < d && p[i] == hi) p[i++] = lo;
        if (i == d) return out;
        ++p[i];
    }
}

}  // namespace fixtures

#pragma once

#include "vpf/exactmath.hpp"

namespace fixtures {

inline vpf::IntMatrix a22() { return {{1, 0, 1, 1}, {0, 1, 1, 2}}; }

inline vpf::IntMatrix k3() {
    return {{1, 1, 1, 0, 0, 0}, {-1, 0, 0, 1, 1, 0}, {0, -1, 0, -1, 0, 1}};
}

inline vpf::IntMatrix k4() {
    return {{1, 1, 1, 1, 0, 0, 0, 0, 0, 0},
            {-1, 0, 0, 0, 1, 1, 1, 0, 0, 0},
            {0, -1, 0, 0, -1, 0, 0, 1, 1, 0},
            {0, 0, -1, 0, 0, -1, 0, -1, 0, 1}};
}

// Complete-graph incidence matrix, columns e_i + e_j in lex order of pairs.
inline vpf::IntMatrix complete_graph(std::size_t m) {
    vpf::IntMatrix g(m, m * (m - 1) / 2);
    std::size_t c = 0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j, ++c) {
            g(i, c) = 1;
            g(j, c) = 1;
        }
    return g;
}

inline vpf::IntMatrix dels() { return {{2, 0, 0, 2, 2}, {0, 2, 0, 2, 0}, {0, 0, 2, 0, 2}}; }

inline vpf::IntVector iv(std::initializer_list<long> xs) { return vpf::IntVector(xs.begin(), xs.end()); }

inline vpf::RatVector rv(std::initializer_list<long> xs) { return vpf::RatVector(xs.begin(), xs.end()); }

}  // namespace fixtures

#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "vpf/exactmath.hpp"

namespace vpf {

class BruteCounter;

/// m × C(m,2) incidence matrix of K_m; column (i,j), i < j, in lex order is e_i + e_j.
IntMatrix incidence_matrix(std::size_t m);

/// Loopless multigraphs on m labelled vertices with the given degrees, by enumeration.
/// Keeps one counter per vertex count, so batches reuse the memo tables.
class MultigraphCounter {
public:
    MultigraphCounter();
    ~MultigraphCounter();
    Integer operator()(const IntVector& degrees);

private:
    std::map<std::size_t, std::unique_ptr<BruteCounter>> counters_;
};

Integer count_brute(const IntVector& degrees);

/// d sorted descending with d_1 + d_m >= d_2 + ... + d_{m-1}, m >= 3.
bool formula_condition(const IntVector& degrees);

/// C(e - d_1 + C(m-1,2) - 1, C(m-1,2) - 1) with e the edge count.
/// Throws ConditionNotMet (unsorted or inequality fails) or OddDegreeSum.
Integer count_formula(const IntVector& degrees);

enum class CountMethod { Formula, Brute, Parity };
std::string_view to_string(CountMethod m);

struct MultigraphCount {
    Integer count;
    CountMethod method;
};

/// Odd sums short-circuit to 0; otherwise the formula on the sorted sequence when it applies, else enumeration.
MultigraphCount count_auto(const IntVector& degrees);

/// Inner normals cutting out the external chamber of G_m at the facet (-1, 1, ..., 1). Needs m >= 3.
std::vector<IntVector> chamber_inequalities(std::size_t m);

}  // namespace vpf

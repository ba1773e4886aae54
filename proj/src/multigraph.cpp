#include "vpf/multigraph.hpp"

#include <algorithm>
#include <functional>

#include "vpf/partition.hpp"

namespace vpf {

namespace {

Integer degree_sum(const IntVector& ds) {
    Integer s = 0;
    for (const auto& x : ds) {
        if (x < 0) throw Error(ErrorKind::InvalidArgument, "degrees must be nonnegative");
        s += x;
    }
    return s;
}

}  // namespace

IntMatrix incidence_matrix(std::size_t m) {
    if (m < 2) throw Error(ErrorKind::InvalidArgument, "incidence matrix needs at least 2 vertices");
    IntMatrix g(m, m * (m - 1) / 2);
    std::size_t c = 0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j, ++c) {
            g(i, c) = 1;
            g(j, c) = 1;
        }
    return g;
}

MultigraphCounter::MultigraphCounter() = default;
MultigraphCounter::~MultigraphCounter() = default;

Integer MultigraphCounter::operator()(const IntVector& degrees) {
    const std::size_t m = degrees.size();
    Integer sum = degree_sum(degrees);
    if (m < 2) throw Error(ErrorKind::InvalidArgument, "degree sequence needs at least 2 vertices");
    if (sum % 2 != 0) return 0;
    if (m == 2) return degrees[0] == degrees[1] ? 1 : 0;  // G_2 has rank 1
    auto& slot = counters_[m];
    if (!slot) slot = std::make_unique<BruteCounter>(validate(incidence_matrix(m)));
    return (*slot)(degrees);
}

Integer count_brute(const IntVector& degrees) { return MultigraphCounter()(degrees); }

bool formula_condition(const IntVector& d) {
    const std::size_t m = d.size();
    if (m < 3) return false;
    if (!std::is_sorted(d.begin(), d.end(), std::greater<Integer>())) return false;
    Integer middle = 0;
    for (std::size_t i = 1; i + 1 < m; ++i) middle += d[i];
    return d[0] + d[m - 1] >= middle;
}

Integer count_formula(const IntVector& d) {
    Integer sum = degree_sum(d);
    if (!formula_condition(d))
        throw Error(ErrorKind::ConditionNotMet,
                    to_string(d) + " is not a descending sequence of length >= 3 with d_1 + d_m >= d_2 + ... + d_{m-1}");
    if (sum % 2 != 0) throw Error(ErrorKind::OddDegreeSum, "degree sum of " + to_string(d) + " is odd");
    const unsigned long m = d.size();
    const unsigned long pairs = (m - 1) * (m - 2) / 2;
    Integer e = sum / 2;
    return binomial(e - d[0] + Integer(pairs) - 1, pairs - 1);
}

std::string_view to_string(CountMethod m) {
    switch (m) {
        case CountMethod::Formula: return "formula";
        case CountMethod::Brute: return "brute";
        case CountMethod::Parity: return "parity";
    }
    return "unknown";
}

MultigraphCount count_auto(const IntVector& degrees) {
    if (degree_sum(degrees) % 2 != 0) return {0, CountMethod::Parity};
    IntVector sorted = degrees;
    std::sort(sorted.begin(), sorted.end(), std::greater<Integer>());
    if (formula_condition(sorted)) return {count_formula(sorted), CountMethod::Formula};
    return {count_brute(degrees), CountMethod::Brute};
}

std::vector<IntVector> chamber_inequalities(std::size_t m) {
    if (m < 3) throw Error(ErrorKind::InvalidArgument, "the chamber inequalities need m >= 3");
    std::vector<IntVector> out;
    IntVector first(m, 1);
    first[0] = -1;
    out.push_back(first);
    for (std::size_t l = 1; l < m; ++l) {
        IntVector row(m, -1);
        row[0] = 1;
        row[l] = 1;
        out.push_back(row);
    }
    return out;
}

}  // namespace vpf

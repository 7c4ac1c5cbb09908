#pragma once

#include <vector>

#include "sympow/hypergraph.hpp"

namespace sympow {

struct MengerianOptions {
    int max_vertices = 10;
    int max_c = 3;
};

/// Optimum and an optimal solution vector of one side of the min-max pair.
struct IpResult {
    long long value = 0;
    std::vector<int> solution;
};

/// min c.x over integer x >= 0 with every edge covered (incidence A x >= 1).
/// 0/1 values suffice on this side, so the search runs over vertex subsets.
IpResult ip_min_cover(const Hypergraph& h, const std::vector<int>& c);

/// max y.1 over integer edge multiplicities y >= 0 with yA <= c.
IpResult ip_max_matching(const Hypergraph& h, const std::vector<int>& c);

struct MengerianFailure {
    std::vector<int> c;
    long long min_cover = 0;
    long long max_matching = 0;
};

/// Exhaustive sweep of every demand vector with entries in {0..c_max}. A
/// clean report is necessary for the Mengerian property but, being bounded,
/// not sufficient.
struct MengerianReport {
    int c_max = 0;
    long long tested = 0;
    std::vector<MengerianFailure> failures; // lex order on c
};

MengerianReport check_mengerian_upto(const Hypergraph& h, int c_max,
                                     const MengerianOptions& opts = {});

} // namespace sympow

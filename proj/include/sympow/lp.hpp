#pragma once

#include <vector>

#include "sympow/rational.hpp"

namespace sympow {

/// Result of maximize c·x subject to A x <= b, x >= 0.
struct LpResult {
    Rational value;
    std::vector<Rational> primal; // x, one per column
    std::vector<Rational> dual;   // y, one per row; optimal for the dual LP
};

/// Dense primal simplex over exact rationals. Requires b >= 0 so the slack
/// basis is feasible; uses Bland's least-index pivot rule, which cannot
/// cycle. Deterministic: identical input, identical tableau path.
/// Throws Internal on an unbounded problem (callers here never build one).
LpResult simplex_max(const std::vector<std::vector<Rational>>& a,
                     const std::vector<Rational>& b,
                     const std::vector<Rational>& c);

} // namespace sympow

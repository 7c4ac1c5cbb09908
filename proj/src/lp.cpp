#include "sympow/lp.hpp"

#include <string>

#include "sympow/error.hpp"

namespace sympow {

// Classic tableau simplex. Layout: m constraint rows over n structural
// columns plus m slack columns, one objective row of reduced costs, one
// right-hand-side column. Everything stays rational, so optimality and
// feasibility tests are exact comparisons.
LpResult simplex_max(const std::vector<std::vector<Rational>>& a,
                     const std::vector<Rational>& b,
                     const std::vector<Rational>& c) {
    const std::size_t m = a.size();
    const std::size_t n = c.size();
    if (b.size() != m) fail(Errc::BadParams, "rhs size does not match row count");
    for (const auto& row : a)
        if (row.size() != n) fail(Errc::BadParams, "ragged constraint matrix");
    for (const Rational& bi : b)
        if (bi < 0) fail(Errc::BadParams, "simplex_max needs b >= 0");

    const std::size_t cols = n + m;
    std::vector<std::vector<Rational>> t(m, std::vector<Rational>(cols + 1));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
        t[i][n + i] = 1;
        t[i][cols] = b[i];
    }
    // Objective row holds z_j - c_j; nonnegative everywhere means optimal.
    std::vector<Rational> obj(cols + 1);
    for (std::size_t j = 0; j < n; ++j) obj[j] = -c[j];

    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

    for (;;) {
        // Bland: entering column = least index with negative reduced cost.
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols; ++j)
            if (obj[j] < 0) { enter = j; break; }
        if (enter == cols) break;

        // Leaving row = min ratio; ties resolved by least basis variable.
        std::size_t leave = m;
        Rational best_ratio;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            Rational ratio = t[i][cols] / t[i][enter];
            if (leave == m || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave == m)
            fail(Errc::Internal, "unbounded linear program in simplex_max");

        const Rational pivot = t[leave][enter];
        for (std::size_t j = 0; j <= cols; ++j) t[leave][j] /= pivot;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            const Rational factor = t[i][enter];
            for (std::size_t j = 0; j <= cols; ++j)
                t[i][j] -= factor * t[leave][j];
        }
        if (obj[enter] != 0) {
            const Rational factor = obj[enter];
            for (std::size_t j = 0; j <= cols; ++j)
                obj[j] -= factor * t[leave][j];
        }
        basis[leave] = enter;
    }

    LpResult result;
    result.primal.assign(n, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n) result.primal[basis[i]] = t[i][cols];
    // At optimality the reduced cost of slack i is the optimal dual y_i.
    result.dual.assign(m, Rational(0));
    for (std::size_t i = 0; i < m; ++i) result.dual[i] = obj[n + i];
    result.value = 0;
    for (std::size_t j = 0; j < n; ++j) result.value += c[j] * result.primal[j];
    return result;
}

} // namespace sympow

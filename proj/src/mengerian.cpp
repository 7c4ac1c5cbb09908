#include "sympow/mengerian.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace sympow {

IpResult ip_min_cover(const Hypergraph& h, const std::vector<int>& c) {
    const int n = h.vertex_count();
    if (static_cast<int>(c.size()) != n)
        fail(Errc::BadParams, "demand vector length does not match vertex count");
    for (int cv : c)
        if (cv < 0) fail(Errc::BadParams, "demand vector must be non-negative");
    if (n > 30) fail(Errc::TooLarge, "cover search capped at 30 vertices");

    const auto masks = edge_masks(h);
    IpResult best;
    best.value = -1;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        bool covers = true;
        for (std::uint64_t em : masks)
            if (!(s & em)) { covers = false; break; }
        if (!covers) continue;
        long long cost = 0;
        for (int v = 0; v < n; ++v)
            if (s >> v & 1u) cost += c[v];
        if (best.value < 0 || cost < best.value) {
            best.value = cost;
            best.solution.assign(n, 0);
            for (int v = 0; v < n; ++v)
                if (s >> v & 1u) best.solution[v] = 1;
        }
    }
    return best;
}

IpResult ip_max_matching(const Hypergraph& h, const std::vector<int>& c) {
    const int n = h.vertex_count();
    if (static_cast<int>(c.size()) != n)
        fail(Errc::BadParams, "demand vector length does not match vertex count");
    for (int cv : c)
        if (cv < 0) fail(Errc::BadParams, "demand vector must be non-negative");

    const int m = h.edge_count();
    // Each y_e is bounded by the tightest capacity on its vertices; a simple
    // optimistic bound on the remaining edges prunes the search.
    std::vector<int> y(m, 0), best_y(m, 0);
    std::vector<int> slack = c;
    long long best = 0;

    auto edge_cap = [&](int e) {
        int cap = std::numeric_limits<int>::max();
        for (VertexId v : h.edges[e]) cap = std::min(cap, slack[v]);
        return cap;
    };

    auto search = [&](auto&& self, int e, long long total) -> void {
        if (total > best) {
            best = total;
            best_y = y;
        }
        if (e == m) return;
        long long optimistic = total;
        for (int f = e; f < m; ++f) optimistic += edge_cap(f);
        if (optimistic <= best) return;

        for (int mult = edge_cap(e); mult >= 0; --mult) {
            y[e] = mult;
            for (VertexId v : h.edges[e]) slack[v] -= mult;
            self(self, e + 1, total + mult);
            for (VertexId v : h.edges[e]) slack[v] += mult;
            y[e] = 0;
        }
    };
    search(search, 0, 0);

    IpResult result;
    result.value = best;
    result.solution = best_y;
    return result;
}

MengerianReport check_mengerian_upto(const Hypergraph& h, int c_max,
                                     const MengerianOptions& opts) {
    if (c_max < 1) fail(Errc::BadParams, "c_max must be positive");
    if (h.vertex_count() > opts.max_vertices)
        fail(Errc::TooLarge, "Mengerian sweep capped at " +
                                 std::to_string(opts.max_vertices) + " vertices");
    if (c_max > opts.max_c)
        fail(Errc::TooLarge, "Mengerian sweep capped at demands of " +
                                 std::to_string(opts.max_c));

    const int n = h.vertex_count();
    MengerianReport report;
    report.c_max = c_max;

    std::vector<int> c(n, 0);
    for (;;) {
        const IpResult cover = ip_min_cover(h, c);
        const IpResult matching = ip_max_matching(h, c);
        internal_check(cover.value >= matching.value,
                       "weak duality violated in the Mengerian sweep");
        if (cover.value != matching.value)
            report.failures.push_back({c, cover.value, matching.value});
        ++report.tested;

        // Odometer increment keeps the sweep (and failure list) in lex order.
        int pos = n - 1;
        while (pos >= 0 && c[pos] == c_max) c[pos--] = 0;
        if (pos < 0) break;
        ++c[pos];
    }
    return report;
}

} // namespace sympow

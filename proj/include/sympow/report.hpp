#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "sympow/hypergraph.hpp"
#include "sympow/mengerian.hpp"
#include "sympow/path_ideals.hpp"
#include "sympow/symbolic.hpp"

namespace sympow {

// Insertion-ordered JSON keeps report bytes stable.
using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "sympow";
inline constexpr const char* kToolVersion = "1.0.0";

/// FNV-1a digest of the canonical text serialization, as "fnv1a:<16 hex>".
std::string content_digest(const Hypergraph& h);

/// Guard settings shared by the report builders; `max_vertices` mirrors the
/// CLI flag / SYMPOW_MAX_VERTICES.
struct ReportGuards {
    int max_vertices = 14;
    std::size_t max_covers = 200;

    SymbolicOptions symbolic() const { return {max_vertices, max_covers}; }
};

Json analyze_report(const Hypergraph& h, const ReportGuards& guards = {});
Json symbolic_report(const Hypergraph& h, int n, bool compare,
                     const ReportGuards& guards = {});
/// `cycle` carries (n, t) when the input came from the cycle generator, so
/// the closed form can be checked against the LP route.
Json waldschmidt_report(const Hypergraph& h, int m_max,
                        std::optional<std::pair<int, int>> cycle = std::nullopt,
                        const ReportGuards& guards = {});
Json paths_cycle_report(int n, int t);
Json paths_tree_report(const RootedTree& tree, int t);
Json mengerian_report(const Hypergraph& h, int c_max,
                      const ReportGuards& guards = {});

/// Deterministic plain-text rendering; a pure function of the JSON report.
std::string render_text(const Json& report);

} // namespace sympow

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "sympow/io.hpp"
#include "sympow/report.hpp"

namespace {

using sympow::Json;

struct GlobalFlags {
    std::string format = "text";
    int max_vertices = 14;
};

void emit(const Json& report, const GlobalFlags& flags) {
    if (flags.format == "json")
        std::cout << report.dump(2) << "\n";
    else
        std::cout << sympow::render_text(report);
}

int default_max_vertices() {
    if (const char* env = std::getenv("SYMPOW_MAX_VERTICES")) {
        try {
            int v = std::stoi(env);
            if (v > 0) return v;
        } catch (...) {
            // fall through to the default
        }
        std::cerr << "warning: ignoring bad SYMPOW_MAX_VERTICES='" << env << "'\n";
    }
    return 14;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symbolic powers, Waldschmidt constants and Mengerian checks "
                 "for hypergraph edge ideals"};
    app.require_subcommand(1);

    GlobalFlags flags;
    flags.max_vertices = default_max_vertices();
    app.add_option("--format", flags.format, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--max-vertices", flags.max_vertices,
                   "Vertex-count guard for the expensive computations")
        ->check(CLI::PositiveNumber);

    std::string file;
    int n = 2;
    bool compare = false;
    int m_max = 3;
    int c_max = 2;
    int cycle_n = 0;
    int t = 0;
    std::string tree_file;
    std::string out_file;

    CLI::App* analyze = app.add_subcommand("analyze", "Structure summary of a hypergraph");
    analyze->fallthrough();
    analyze->add_option("file", file, "Hypergraph file (text or JSON)")->required();

    CLI::App* symbolic = app.add_subcommand(
        "symbolic", "Generators of the n-th symbolic power of the edge ideal");
    symbolic->fallthrough();
    symbolic->add_option("file", file, "Hypergraph file")->required();
    symbolic->add_option("--n", n, "Symbolic power to compute")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    symbolic->add_flag("--compare", compare,
                       "Compare against the ordinary power (and classify when "
                       "3-uniform 3-partite)");

    CLI::App* waldschmidt = app.add_subcommand(
        "waldschmidt",
        "Fractional chromatic number and Waldschmidt constant of the edge ideal");
    waldschmidt->fallthrough();
    waldschmidt->add_option("file", file, "Hypergraph file");
    waldschmidt->add_option("--cycle", cycle_n, "Use the t-path hypergraph of this cycle")
        ->check(CLI::PositiveNumber);
    waldschmidt->add_option("--t", t, "Path length parameter t")->check(CLI::PositiveNumber);
    waldschmidt->add_option("--m-max", m_max, "Length of the alpha sequence")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    CLI::App* paths = app.add_subcommand(
        "paths", "Generate the t-path hypergraph of a cycle or rooted tree");
    paths->fallthrough();
    paths->add_option("--cycle", cycle_n, "Cycle length n")->check(CLI::PositiveNumber);
    paths->add_option("--tree", tree_file, "Rooted tree file (parent child lines)");
    paths->add_option("--t", t, "Path length parameter t")
        ->check(CLI::PositiveNumber)
        ->required();
    paths->add_option("--out", out_file, "Also write the hypergraph to this file");

    CLI::App* mengerian = app.add_subcommand(
        "mengerian", "Bounded min-max sweep over integer demand vectors");
    mengerian->fallthrough();
    mengerian->add_option("file", file, "Hypergraph file")->required();
    mengerian->add_option("--c-max", c_max, "Largest demand entry to test")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        sympow::ReportGuards guards;
        guards.max_vertices = flags.max_vertices;

        if (*analyze) {
            emit(sympow::analyze_report(sympow::load_hypergraph(file), guards), flags);
        } else if (*symbolic) {
            emit(sympow::symbolic_report(sympow::load_hypergraph(file), n, compare, guards),
                 flags);
        } else if (*waldschmidt) {
            std::optional<std::pair<int, int>> cycle;
            sympow::Hypergraph h;
            if (cycle_n > 0) {
                if (t <= 0)
                    sympow::fail(sympow::Errc::BadParams, "--cycle needs --t");
                if (!file.empty())
                    sympow::fail(sympow::Errc::BadParams,
                                 "give either a file or --cycle, not both");
                h = sympow::path_hypergraph_cycle(cycle_n, t);
                cycle = {cycle_n, t};
            } else if (!file.empty()) {
                h = sympow::load_hypergraph(file);
            } else {
                sympow::fail(sympow::Errc::BadParams, "need a file or --cycle/--t");
            }
            if (h.vertex_count() > guards.max_vertices)
                sympow::fail(sympow::Errc::TooLarge,
                             "input exceeds the vertex guard (" +
                                 std::to_string(guards.max_vertices) + ")");
            emit(sympow::waldschmidt_report(h, m_max, cycle, guards), flags);
        } else if (*paths) {
            if ((cycle_n > 0) == !tree_file.empty())
                sympow::fail(sympow::Errc::BadParams,
                             "give exactly one of --cycle or --tree");
            Json report = cycle_n > 0
                              ? sympow::paths_cycle_report(cycle_n, t)
                              : sympow::paths_tree_report(sympow::load_tree(tree_file), t);
            if (!out_file.empty()) {
                std::ofstream out(out_file);
                if (!out)
                    sympow::fail(sympow::Errc::ParseError, "cannot write " + out_file);
                out << report["payload"]["hypergraph"].get<std::string>();
            }
            emit(report, flags);
        } else if (*mengerian) {
            emit(sympow::mengerian_report(sympow::load_hypergraph(file), c_max, guards),
                 flags);
        }
    } catch (const sympow::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.category()) {
        case sympow::ErrorCategory::Input: return 1;
        case sympow::ErrorCategory::Guard: return 2;
        case sympow::ErrorCategory::Internal: return 3;
        }
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

#include "sympow/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace sympow {

namespace {

bool valid_name(const std::string& s) {
    if (s.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin() + 1, s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

std::vector<std::string> split_words(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> words;
    std::string w;
    while (is >> w) words.push_back(w);
    return words;
}

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
    fail(Errc::ParseError, "line " + std::to_string(line_no) + ": " + what,
         {line_no});
}

} // namespace

Hypergraph parse_hypergraph_text(std::istream& in) {
    std::vector<std::vector<std::string>> raw;
    std::vector<int> edge_lines;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string body = strip_comment(line);
        auto words = split_words(body);
        if (words.empty()) continue;
        if (words[0] != "edge:")
            parse_fail(line_no, "expected 'edge:', got '" + words[0] + "'");
        if (words.size() == 1) parse_fail(line_no, "edge with no vertices");
        std::vector<std::string> edge(words.begin() + 1, words.end());
        for (const std::string& name : edge)
            if (!valid_name(name))
                parse_fail(line_no, "bad vertex name '" + name + "'");
        auto sorted = edge;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            parse_fail(line_no, "repeated vertex within an edge");
        raw.push_back(std::move(edge));
        edge_lines.push_back(line_no);
    }

    try {
        return validate_simple(raw);
    } catch (const Error& e) {
        // Point validation errors back at source lines.
        if (e.indices().empty()) throw;
        std::string lines;
        for (int idx : e.indices()) {
            if (!lines.empty()) lines += ", ";
            lines += std::to_string(idx >= 0 && idx < static_cast<int>(edge_lines.size())
                                        ? edge_lines[idx]
                                        : -1);
        }
        throw Error(e.code(), std::string(e.what()) + " (line " + lines + ")",
                    e.indices());
    }
}

Hypergraph parse_hypergraph_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(Errc::ParseError, std::string("bad JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("edges") || !doc["edges"].is_array())
        fail(Errc::ParseError, "expected an object with an \"edges\" array");

    std::vector<std::vector<std::string>> raw;
    for (const auto& edge : doc["edges"]) {
        if (!edge.is_array()) fail(Errc::ParseError, "each edge must be an array");
        std::vector<std::string> names;
        for (const auto& v : edge) {
            if (!v.is_string()) fail(Errc::ParseError, "vertex names must be strings");
            std::string name = v.get<std::string>();
            if (!valid_name(name))
                fail(Errc::ParseError, "bad vertex name '" + name + "'");
            names.push_back(std::move(name));
        }
        auto sorted = names;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            fail(Errc::ParseError, "repeated vertex within an edge");
        raw.push_back(std::move(names));
    }
    Hypergraph h = validate_simple(raw);

    if (doc.contains("vertices")) {
        if (!doc["vertices"].is_array())
            fail(Errc::ParseError, "\"vertices\" must be an array");
        std::set<std::string> declared;
        for (const auto& v : doc["vertices"]) {
            if (!v.is_string()) fail(Errc::ParseError, "vertex names must be strings");
            declared.insert(v.get<std::string>());
        }
        std::set<std::string> used(h.vertex_names.begin(), h.vertex_names.end());
        for (const std::string& name : declared)
            if (!used.count(name))
                fail(Errc::IsolatedVertex,
                     "declared vertex '" + name + "' appears in no edge");
        for (const std::string& name : used)
            if (!declared.count(name))
                fail(Errc::ParseError,
                     "edge vertex '" + name + "' missing from \"vertices\"");
    }
    return h;
}

Hypergraph parse_hypergraph(const std::string& text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return parse_hypergraph_json(text);
    std::istringstream is(text);
    return parse_hypergraph_text(is);
}

Hypergraph load_hypergraph(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::ParseError, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_hypergraph(buf.str());
}

std::string serialize_hypergraph_text(const Hypergraph& h) {
    std::ostringstream os;
    for (int e = 0; e < h.edge_count(); ++e) {
        os << "edge:";
        for (VertexId v : h.edges[e]) os << " " << h.name(v);
        os << "\n";
    }
    return os.str();
}

RootedTree parse_tree_text(std::istream& in) {
    std::vector<std::pair<std::string, std::string>> edges;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto words = split_words(strip_comment(line));
        if (words.empty()) continue;
        if (words.size() != 2)
            parse_fail(line_no, "expected 'parent child'");
        for (const std::string& name : words)
            if (!valid_name(name))
                parse_fail(line_no, "bad vertex name '" + name + "'");
        edges.emplace_back(words[0], words[1]);
    }
    return RootedTree::from_edges(edges);
}

RootedTree load_tree(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::ParseError, "cannot open " + path);
    return parse_tree_text(in);
}

} // namespace sympow

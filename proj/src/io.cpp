#include "gcut/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "gcut/errors.hpp"

namespace gcut {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) fields.push_back(line.substr(start, i - start));
    }
    return fields;
}

std::uint64_t parse_number(std::string_view field, std::size_t line_no) {
    std::uint64_t v = 0;
    const auto* end = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(field.data(), end, v);
    if (ec != std::errc() || ptr != end) {
        throw ParseError(line_no, "expected a non-negative integer, got '" + std::string(field) + "'");
    }
    return v;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    bool have_header = false;
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    std::vector<std::pair<Vertex, Vertex>> edges;

    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        auto fields = split_fields(line);
        if (fields.empty() || fields.front().front() == '#') continue;
        if (fields.size() != 2) {
            throw ParseError(line_no, have_header ? "expected 'u v'" : "expected header 'n m'");
        }
        std::uint64_t a = parse_number(fields[0], line_no);
        std::uint64_t b = parse_number(fields[1], line_no);
        if (!have_header) {
            n = a;
            m = b;
            if (n > std::numeric_limits<Vertex>::max()) throw ParseError(line_no, "vertex count too large");
            have_header = true;
            edges.reserve(m);
            continue;
        }
        if (edges.size() == m) {
            throw ParseError(line_no, "more edge lines than the " + std::to_string(m) + " declared");
        }
        if (a >= n || b >= n) {
            throw ParseError(line_no, "endpoint out of range for n = " + std::to_string(n));
        }
        edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
    if (!have_header) throw ParseError(line_no + 1, "missing header 'n m'");
    if (edges.size() != m) {
        throw ParseError(line_no + 1, "declared " + std::to_string(m) + " edges but found " +
                                          std::to_string(edges.size()));
    }
    return Graph(n, edges);
}

std::string write_edge_list(const Graph& g, const std::vector<std::string>& comments) {
    std::ostringstream out;
    for (const auto& c : comments) out << "# " << c << '\n';
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) {
        for (std::uint32_t i = 0; i < e.multiplicity; ++i) out << e.u << ' ' << e.v << '\n';
    }
    return out.str();
}

Graph read_edge_list_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_edge_list(buffer.str());
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path.string() + "'");
    out << text;
}

std::string write_dot(const Graph& g, const DotHighlight* highlight) {
    std::set<Vertex> side;
    std::multiset<std::pair<Vertex, Vertex>> marked;
    if (highlight != nullptr) {
        side.insert(highlight->side.begin(), highlight->side.end());
        for (const Edge& e : highlight->edges) marked.emplace(e.u, e.v);
    }
    std::ostringstream out;
    out << "graph G {\n";
    for (Vertex u = 0; u < g.order(); ++u) {
        out << "  " << u;
        if (side.count(u) != 0) out << " [style=filled, fillcolor=lightblue]";
        out << ";\n";
    }
    for (const Edge& e : g.edges()) {
        bool cut = marked.count({e.u, e.v}) != 0;
        for (std::uint32_t i = 0; i < e.multiplicity; ++i) {
            out << "  " << e.u << " -- " << e.v;
            if (cut) out << " [color=red, penwidth=2]";
            out << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace gcut

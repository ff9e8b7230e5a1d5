#include "mengerian/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <unordered_map>

#include "mengerian/errors.hpp"

namespace mengerian {

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

bool valid_name(std::string_view name) {
    if (name.empty()) return false;
    for (char ch : name)
        if (ch == '#' || std::isspace(static_cast<unsigned char>(ch))) return false;
    return true;
}

}  // namespace

GraphFile parse_graph(std::istream& in) {
    std::vector<std::string> names;
    std::unordered_map<std::string, VertexId> index;
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<Label> labels;
    std::optional<bool> labelled;
    std::size_t line_no = 0;

    auto vertex = [&](std::string_view name) {
        auto [it, inserted] = index.try_emplace(std::string(name), VertexId(names.size()));
        if (inserted) names.emplace_back(name);
        return it->second;
    };

    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view(line);
        if (auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
        auto tok = tokens(view);
        if (tok.empty()) continue;
        if (tok[0] == "v") {
            if (tok.size() != 2) throw ParseError(line_no, "expected `v <name>`");
            if (index.count(std::string(tok[1]))) throw ParseError(line_no, "vertex '" + std::string(tok[1]) + "' declared twice");
            vertex(tok[1]);
        } else if (tok[0] == "e") {
            if (tok.size() != 3 && tok.size() != 4) throw ParseError(line_no, "expected `e <u> <v> [<label>]`");
            if (tok[1] == tok[2]) throw ParseError(line_no, "self-loops are not allowed");
            const bool has_label = tok.size() == 4;
            if (labelled && *labelled != has_label)
                throw ParseError(line_no, "labels must be given on every edge or on none");
            labelled = has_label;
            if (has_label) {
                Label value = 0;
                auto [ptr, ec] = std::from_chars(tok[3].data(), tok[3].data() + tok[3].size(), value);
                if (ec != std::errc() || ptr != tok[3].data() + tok[3].size() || value == 0)
                    throw ParseError(line_no, "label must be a positive integer, got '" + std::string(tok[3]) + "'");
                labels.push_back(value);
            }
            VertexId u = vertex(tok[1]);
            VertexId v = vertex(tok[2]);
            edges.emplace_back(u, v);
        } else {
            throw ParseError(line_no, "unknown directive '" + std::string(tok[0]) + "'");
        }
    }
    const std::size_t n = names.size();
    GraphFile out{Multigraph(n, edges, std::move(names)), std::nullopt};
    if (labelled.value_or(false)) out.times = TimeFunction(std::move(labels));
    return out;
}

GraphFile parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_graph(in);
}

GraphFile read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ArgumentError("cannot open " + path);
    return parse_graph(in);
}

std::string emit_graph(const Multigraph& g, const TimeFunction* times) {
    if (times && times->size() != g.edge_count()) throw ArgumentError("time-function does not match the graph");
    std::ostringstream out;
    for (VertexId v : g.vertices()) {
        if (!valid_name(g.name(v))) throw ArgumentError("vertex name '" + g.name(v) + "' cannot be written");
        out << "v " << g.name(v) << '\n';
    }
    for (const Edge& e : g.edges()) {
        out << "e " << g.name(e.u) << ' ' << g.name(e.v);
        if (times) out << ' ' << (*times)[e.id];
        out << '\n';
    }
    return out.str();
}

namespace {

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out + '"';
}

constexpr std::array<const char*, 9> kColours{"red",        "blue",  "forestgreen", "darkorange", "purple",
                                              "deeppink",   "teal",  "goldenrod",   "brown"};

}  // namespace

std::string to_dot(const Multigraph& g, const MEmbedding* embedding) {
    std::vector<int> segment_of(g.edge_count(), -1);
    std::vector<std::string> role(g.vertex_count());
    if (embedding) {
        const Pattern& f = pattern(embedding->pattern);
        for (std::size_t i = 0; i < embedding->segments.size(); ++i)
            for (const auto& hop : embedding->segments[i].hops)
                for (EdgeId e : hop) segment_of[e.index()] = static_cast<int>(i);
        for (std::size_t p = 0; p < embedding->branch_map.size(); ++p)
            role[embedding->branch_map[p].index()] = f.graph.name(VertexId(p));
    }
    std::ostringstream out;
    out << "graph G {\n  node [shape=circle];\n";
    for (VertexId v : g.vertices()) {
        out << "  " << v.value << " [label=" << quoted(role[v.index()].empty() ? g.name(v) : g.name(v) + " (" + role[v.index()] + ")");
        if (!role[v.index()].empty()) out << ", style=filled, fillcolor=lightgrey";
        out << "];\n";
    }
    for (const Edge& e : g.edges()) {
        out << "  " << e.u.value << " -- " << e.v.value << " [label=" << quoted("e" + std::to_string(e.id.value));
        if (int s = segment_of[e.id.index()]; s >= 0)
            out << ", color=" << kColours[static_cast<std::size_t>(s) % kColours.size()] << ", penwidth=2";
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

Multigraph random_multigraph(std::size_t n, std::size_t m, std::size_t max_mult, std::uint64_t seed) {
    if (m > 0 && (n < 2 || max_mult == 0 || m > max_mult * n * (n - 1) / 2))
        throw ArgumentError("cannot place " + std::to_string(m) + " edges on " + std::to_string(n) +
                            " vertices with multiplicity at most " + std::to_string(max_mult));
    std::mt19937_64 rng(seed);
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> count;
    std::vector<std::pair<VertexId, VertexId>> edges;
    while (edges.size() < m) {
        std::size_t a = rng() % n, b = rng() % n;
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        if (count[{a, b}] >= max_mult) continue;
        ++count[{a, b}];
        edges.emplace_back(VertexId(a), VertexId(b));
    }
    return Multigraph(n, edges);
}

Multigraph random_m_subdivision(PatternId id, std::size_t ops, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Multigraph g = pattern(id).graph;
    for (std::size_t k = 0; k < ops; ++k) {
        std::vector<std::pair<VertexId, VertexId>> pairs;
        for (VertexId v : g.vertices())
            for (const Neighbor& nb : g.neighbors(v))
                if (v < nb.vertex) pairs.emplace_back(v, nb.vertex);
        auto [u, v] = pairs[rng() % pairs.size()];
        g = m_subdivide(g, u, v).graph;
    }
    return g;
}

}  // namespace mengerian

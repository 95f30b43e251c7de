#include "grundy/io.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace grundy {

namespace {

Graph parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    long m = 0;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag == "c") continue;
        if (tag == "p") {
            std::string kind;
            if (n >= 0 || !(ls >> kind >> n >> m) || kind != "edge" || n < 0)
                throw std::invalid_argument("malformed DIMACS header");
            continue;
        }
        if (tag == "e") {
            int u, v;
            if (n < 0) throw std::invalid_argument("DIMACS edge before header");
            if (!(ls >> u >> v)) throw std::invalid_argument("malformed DIMACS edge line");
            if (u < 1 || u > n || v < 1 || v > n)
                throw std::invalid_argument("DIMACS vertex out of range");
            edges.emplace_back(u - 1, v - 1);
            continue;
        }
        throw std::invalid_argument("unrecognized DIMACS line: " + line);
    }
    if (n < 0) throw std::invalid_argument("DIMACS input has no header");
    return Graph(n, edges);
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    int n;
    long m;
    if (!(in >> n >> m) || n < 0 || m < 0)
        throw std::invalid_argument("edge list must start with \"n m\"");
    std::vector<std::pair<int, int>> edges;
    int u, v;
    while (in >> u >> v) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge list vertex out of range");
        edges.emplace_back(u, v);
    }
    if (!in.eof()) throw std::invalid_argument("trailing junk in edge list");
    if (static_cast<long>(edges.size()) != m)
        throw std::invalid_argument("edge list length does not match its header");
    return Graph(n, edges);
}

}  // namespace

Graph parse_graph(const std::string& text, GraphFormat format) {
    return format == GraphFormat::dimacs ? parse_dimacs(text) : parse_edge_list(text);
}

std::string emit_graph(const Graph& g, GraphFormat format) {
    std::ostringstream out;
    if (format == GraphFormat::dimacs) {
        out << "p edge " << g.n() << ' ' << g.edge_count() << '\n';
        for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    } else {
        out << g.n() << ' ' << g.edge_count() << '\n';
        for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    }
    return out.str();
}

std::string emit_dot(const Graph& g, const Coloring* coloring) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.n(); ++v) {
        out << "  v" << v << " [label=\"v" << v;
        if (coloring && (*coloring)[v] != 0) out << ':' << (*coloring)[v];
        out << "\"];\n";
    }
    for (auto [u, v] : g.edges()) out << "  v" << u << " -- v" << v << ";\n";
    out << "}\n";
    return out.str();
}

std::string emit_coloring(const Coloring& c) {
    nlohmann::json doc;
    doc["n"] = c.n();
    doc["colors"] = c.colors;
    return doc.dump() + "\n";
}

Coloring parse_coloring(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw std::invalid_argument("coloring document is not valid JSON");
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("colors"))
        throw std::invalid_argument("coloring document needs fields \"n\" and \"colors\"");
    if (!doc["n"].is_number_integer() || !doc["colors"].is_array())
        throw std::invalid_argument("coloring document field types are wrong");
    const int n = doc["n"].get<int>();
    std::vector<int> colors;
    for (const auto& item : doc["colors"]) {
        if (!item.is_number_integer())
            throw std::invalid_argument("coloring document has a non-integer color");
        colors.push_back(item.get<int>());
    }
    if (n < 0 || static_cast<int>(colors.size()) != n)
        throw std::invalid_argument("coloring document length does not match n");
    Coloring c(n);
    for (int v = 0; v < n; ++v) {
        if (colors[static_cast<size_t>(v)] < 0)
            throw std::invalid_argument("coloring document has a negative color");
        c[v] = colors[static_cast<size_t>(v)];
    }
    return c;
}

}  // namespace grundy

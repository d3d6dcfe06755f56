#include "sepbip/edgelist_io.hpp"

#include <fstream>
#include <sstream>

#include "sepbip/error.hpp"

namespace sepbip {

Graph read_edge_list(std::istream& in) {
    long long n = 0, m = 0;
    if (!(in >> n >> m)) fail(ErrorCode::Io, "bad edge-list header");
    if (n < 0 || m < 0) fail(ErrorCode::Io, "negative counts in edge-list header");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(m));
    for (long long i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) fail(ErrorCode::Io, "truncated edge list");
        edges.emplace_back(u, v);
    }
    return Graph::build(static_cast<int>(n), edges);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) fail(ErrorCode::Io, "cannot open " + path);
    return read_edge_list(f);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

void write_edge_list_file(const std::string& path, const Graph& g) {
    std::ofstream f(path);
    if (!f) fail(ErrorCode::Io, "cannot open " + path + " for writing");
    write_edge_list(f, g);
    if (!f) fail(ErrorCode::Io, "write failed: " + path);
}

} // namespace sepbip

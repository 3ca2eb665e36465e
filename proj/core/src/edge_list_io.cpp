#include "corospec/edge_list_io.hpp"

#include <fstream>
#include <sstream>

#include "corospec/errors.hpp"

namespace corospec {

namespace {

// Next line that carries data, with comments and blanks skipped.
bool next_data_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream probe(line);
        std::string token;
        if (probe >> token)
            return true;
    }
    return false;
}

} // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    if (!next_data_line(in, line))
        throw IoError("edge list: missing header line 'n m'");
    std::istringstream header(line);
    int n = 0, m = 0;
    if (!(header >> n >> m))
        throw IoError("edge list: malformed header line '" + line + "'");
    std::vector<Edge> edges;
    edges.reserve(m);
    for (int i = 0; i < m; ++i) {
        if (!next_data_line(in, line))
            throw IoError("edge list: expected " + std::to_string(m) +
                          " edges, got " + std::to_string(i));
        std::istringstream row(line);
        int u = 0, v = 0;
        if (!(row >> u >> v))
            throw IoError("edge list: malformed edge line '" + line + "'");
        edges.emplace_back(u, v);
    }
    return Graph::from_edge_list(n, edges);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open '" + path + "' for reading");
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
}

void write_edge_list_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out)
        throw IoError("cannot open '" + path + "' for writing");
    write_edge_list(out, g);
    if (!out)
        throw IoError("write failed for '" + path + "'");
}

} // namespace corospec

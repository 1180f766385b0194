#include "spex/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "spex/errors.hpp"

namespace spex {

std::string to_graph6(const Graph& g) {
    const int n = g.n();
    if (n > 62) throw capability_error("graph6 writer limited to n <= 62");
    std::string out;
    out.push_back(char(n + 63));
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; j++) {
        for (int i = 0; i < j; i++) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(char(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(char((acc << (6 - nbits)) + 63));
    return out;
}

Graph from_graph6(const std::string& s) {
    if (s.empty()) throw input_error("empty graph6 string");
    size_t pos = 0;
    if (s[0] == ':' || s[0] == '&') throw input_error("unsupported graph6 variant");
    int n = s[pos++] - 63;
    if (n == 63) throw input_error("graph6 reader limited to n <= 62");
    if (n < 0) throw input_error("bad graph6 order byte");
    const long need = (long(n) * (n - 1) / 2 + 5) / 6;
    if ((long)s.size() - (long)pos < need) throw input_error("graph6 string truncated");
    std::vector<std::pair<int, int>> edges;
    long bit = 0;
    for (int j = 1; j < n; j++) {
        for (int i = 0; i < j; i++, bit++) {
            int byte = s[pos + bit / 6] - 63;
            if (byte < 0 || byte > 63) throw input_error("bad graph6 payload byte");
            if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    return Graph(n, edges);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream os;
    os << g.n() << " " << g.m() << "\n";
    for (auto [u, v] : g.edges()) os << u << " " << v << "\n";
    return os.str();
}

Graph from_edge_list(const std::string& text) {
    std::istringstream is(text);
    long n = -1, m = -1;
    if (!(is >> n >> m)) throw input_error("edge list header must be \"n m\"");
    std::vector<std::pair<int, int>> edges;
    for (long i = 0; i < m; i++) {
        int u, v;
        if (!(is >> u >> v)) throw input_error("edge list truncated");
        edges.emplace_back(u, v);
    }
    return Graph((int)n, edges);
}

static bool ends_with(const std::string& s, const std::string& suf) {
    return s.size() >= suf.size() && s.compare(s.size() - suf.size(), suf.size(), suf) == 0;
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    if (ends_with(path, ".g6")) {
        std::string line;
        std::getline(in, line);
        while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
        return from_graph6(line);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return from_edge_list(buf.str());
}

void write_graph_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot open " + path + " for writing");
    if (ends_with(path, ".g6"))
        out << to_graph6(g) << "\n";
    else
        out << to_edge_list(g);
}

}  // namespace spex

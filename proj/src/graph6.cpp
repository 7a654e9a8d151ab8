#include "plancage/graph6.hpp"

#include <sstream>

namespace plancage {

std::string encode_graph6(const SimpleGraph& g) {
    const int n = g.order();
    if (n > 62) throw std::invalid_argument("graph6 encoder handles n <= 62 only");
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

SimpleGraph decode_graph6(std::string_view bytes) {
    if (bytes.empty()) throw ParseError("graph6: empty input");
    const int header = static_cast<unsigned char>(bytes[0]);
    if (header < 63 || header > 63 + 62)
        throw ParseError("graph6: malformed header byte");
    const int n = header - 63;
    const int nbits = n * (n - 1) / 2;
    const size_t ndata = static_cast<size_t>((nbits + 5) / 6);
    if (bytes.size() != 1 + ndata)
        throw ParseError(bytes.size() < 1 + ndata ? "graph6: truncated data"
                                                  : "graph6: trailing garbage");
    SimpleGraph g(n);
    int bit = 0;
    for (size_t k = 0; k < ndata; ++k) {
        const int c = static_cast<unsigned char>(bytes[1 + k]);
        if (c < 63 || c > 126) throw ParseError("graph6: data byte out of range");
        const int group = c - 63;
        for (int b = 5; b >= 0; --b, ++bit) {
            const bool set = (group >> b) & 1;
            if (bit >= nbits) {
                if (set) throw ParseError("graph6: nonzero padding bits");
                continue;
            }
            if (set) {
                // bit index -> (i, j) column by column
                int j = 1, before = 0;
                while (before + j <= bit) before += j++;
                g.add_edge(bit - before, j);
            }
        }
    }
    return g;
}

std::string encode_edge_list(const SimpleGraph& g) {
    std::ostringstream out;
    out << g.order() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

SimpleGraph decode_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> pairs;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream row(line);
        if (n < 0) {
            if (!(row >> n) || n < 0) throw ParseError("edge list: bad vertex count line");
        } else {
            int u, v;
            if (!(row >> u >> v)) throw ParseError("edge list: bad edge line: " + line);
            pairs.emplace_back(u, v);
        }
        std::string rest;
        if (row >> rest) throw ParseError("edge list: trailing tokens: " + line);
    }
    if (n < 0) throw ParseError("edge list: missing vertex count");
    if (n > kMaxVertices) throw ParseError("edge list: vertex count above 64");
    try {
        return SimpleGraph::from_edge_list(n, pairs);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("edge list: ") + e.what());
    }
}

std::string encode_dot(const SimpleGraph& g, std::string_view name) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0) out << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace plancage

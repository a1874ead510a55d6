#include "updom/graph6.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace updom {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

[[noreturn]] void bad_byte(size_t offset, const std::string& what) {
    throw PreconditionError("malformed graph6 at byte offset " + std::to_string(offset) +
                            ": " + what);
}

}  // namespace

std::string graph6_encode(const Graph& g) {
    const int n = g.n();
    std::string out;
    if (n <= 62) {
        out.push_back(char(n + kBias));
    } else if (n <= 258047) {
        out.push_back(char(126));
        out.push_back(char(((n >> 12) & 0x3f) + kBias));
        out.push_back(char(((n >> 6) & 0x3f) + kBias));
        out.push_back(char((n & 0x3f) + kBias));
    } else {
        throw PreconditionError("graph too large for this graph6 writer");
    }
    int buffer = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            buffer = (buffer << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(char(buffer + kBias));
                buffer = filled = 0;
            }
        }
    }
    if (filled) out.push_back(char((buffer << (6 - filled)) + kBias));
    return out;
}

Graph graph6_decode(std::string_view line) {
    size_t base = 0;
    if (line.substr(0, kHeader.size()) == kHeader) {
        base = kHeader.size();
        line.remove_prefix(kHeader.size());
    }
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.remove_suffix(1);
    if (line.empty()) bad_byte(base, "empty input");

    auto byte_at = [&](size_t i) -> int {
        if (i >= line.size()) bad_byte(base + line.size(), "truncated input");
        unsigned char c = line[i];
        if (c < kBias || c > 126) bad_byte(base + i, "byte outside the graph6 alphabet");
        return c - kBias;
    };

    size_t pos = 0;
    long long n = 0;
    if (static_cast<unsigned char>(line[0]) == 126) {
        if (line.size() >= 2 && static_cast<unsigned char>(line[1]) == 126)
            bad_byte(base + 1, "graphs with n >= 258048 are not supported");
        n = (static_cast<long long>(byte_at(1)) << 12) | (byte_at(2) << 6) | byte_at(3);
        pos = 4;
    } else {
        n = byte_at(0);
        pos = 1;
    }

    Graph g(static_cast<int>(n));
    long long bits_needed = n * (n - 1) / 2;
    long long bit = 0;
    int i = 0, j = 1;
    while (bit < bits_needed) {
        int chunk = byte_at(pos);
        for (int k = 5; k >= 0 && bit < bits_needed; --k, ++bit) {
            if ((chunk >> k) & 1) g.add_edge(i, j);
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
        ++pos;
    }
    if (pos != line.size()) bad_byte(base + pos, "trailing bytes after adjacency data");
    return g;
}

Graph read_edge_list(std::istream& in) {
    long long n, m;
    if (!(in >> n >> m)) throw PreconditionError("edge list: missing 'n m' header line");
    if (n < 0 || m < 0) throw PreconditionError("edge list: negative counts");
    Graph g(static_cast<int>(n));
    for (long long k = 0; k < m; ++k) {
        long long u, v;
        if (!(in >> u >> v))
            throw PreconditionError("edge list: expected " + std::to_string(m) +
                                    " edges, got " + std::to_string(k));
        g.add_edge(int(u), int(v));
    }
    return g;
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edge_list()) out << u << ' ' << v << '\n';
}

Graph parse_graph(const std::string& text, GraphFormat format) {
    if (format == GraphFormat::autodetect) {
        std::string first_line = text.substr(0, text.find('\n'));
        bool spaced = first_line.find(' ') != std::string::npos ||
                      first_line.find('\t') != std::string::npos;
        format = spaced ? GraphFormat::edge_list : GraphFormat::graph6;
    }
    if (format == GraphFormat::edge_list) {
        std::istringstream in(text);
        return read_edge_list(in);
    }
    return graph6_decode(text);
}

}  // namespace updom

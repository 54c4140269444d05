#include "rootline/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace rootline {

ParseError::ParseError(const std::string& what, int line, int column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

void put_bits(std::string& out, const std::vector<int>& bits) {
    for (std::size_t k = 0; k < bits.size(); k += 6) {
        int chunk = 0;
        for (std::size_t b = 0; b < 6; ++b) {
            chunk <<= 1;
            if (k + b < bits.size()) chunk |= bits[k + b];
        }
        out.push_back(static_cast<char>(chunk + 63));
    }
}

std::string graph6_of_bits(int n, const std::vector<int>& bits) {
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        throw std::invalid_argument("graph too large for graph6");
    }
    put_bits(out, bits);
    return out;
}

}  // namespace

std::string emit_graph6(const SimpleGraph& g) {
    std::vector<int> bits;
    for (int j = 1; j < g.order(); ++j) {
        for (int i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j) ? 1 : 0);
    }
    return graph6_of_bits(g.order(), bits);
}

std::string CanonicalForm::graph6() const {
    std::vector<int> bits;
    for (char c : bits_) bits.push_back(c == '1' ? 1 : 0);
    return graph6_of_bits(n_, bits);
}

SimpleGraph parse_graph6(std::string_view text, int line) {
    std::size_t pos = 0;
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header) pos = header.size();
    while (!text.empty() && (text.back() == '\r' || text.back() == '\n' || text.back() == ' ')) text.remove_suffix(1);

    auto byte_at = [&](std::size_t p) {
        if (p >= text.size()) throw ParseError("graph6 string ends early", line, static_cast<int>(p) + 1);
        const int c = static_cast<unsigned char>(text[p]);
        if (c < 63 || c > 126) {
            throw ParseError("byte outside the graph6 range 63..126", line, static_cast<int>(p) + 1);
        }
        return c - 63;
    };

    if (pos >= text.size()) throw ParseError("empty graph6 string", line, static_cast<int>(pos) + 1);
    int n = 0;
    if (text[pos] == '~') {
        if (pos + 1 < text.size() && text[pos + 1] == '~') {
            throw ParseError("graphs with more than 258047 vertices are not supported", line, static_cast<int>(pos) + 1);
        }
        for (int k = 1; k <= 3; ++k) n = (n << 6) | byte_at(pos + static_cast<std::size_t>(k));
        pos += 4;
    } else {
        n = byte_at(pos);
        pos += 1;
    }
    const std::size_t nbits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
    const std::size_t nbytes = (nbits + 5) / 6;
    if (text.size() - pos != nbytes) {
        throw ParseError("expected " + std::to_string(nbytes) + " data bytes for " + std::to_string(n) +
                             " vertices, found " + std::to_string(text.size() - pos),
                         line, static_cast<int>(std::min(text.size(), pos + nbytes)) + 1);
    }
    SimpleGraph g(n);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const int chunk = byte_at(pos + k / 6);
            if ((chunk >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    }
    // Padding bits must be zero.
    if (nbytes > 0) {
        const int last = byte_at(pos + nbytes - 1);
        const std::size_t pad = nbytes * 6 - nbits;
        if ((last & ((1 << pad) - 1)) != 0) {
            throw ParseError("non-zero padding bits", line, static_cast<int>(pos + nbytes));
        }
    }
    return g;
}

std::vector<SimpleGraph> parse_graph6_stream(std::istream& in) {
    std::vector<SimpleGraph> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        out.push_back(parse_graph6(line, lineno));
    }
    return out;
}

MultiGraph parse_edgelist(std::string_view text) {
    struct Entry {
        int u, v, k;
    };
    std::vector<Entry> entries;
    int declared = -1;
    int max_label = -1;
    int lineno = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

        std::vector<std::pair<long long, int>> fields;  // value, column
        std::size_t p = 0;
        while (p < line.size()) {
            if (line[p] == ' ' || line[p] == '\t' || line[p] == '\r' || line[p] == ',') {
                ++p;
                continue;
            }
            std::size_t q = p;
            while (q < line.size() && line[q] != ' ' && line[q] != '\t' && line[q] != '\r' && line[q] != ',') ++q;
            long long value = 0;
            const auto res = std::from_chars(line.data() + p, line.data() + q, value);
            if (res.ec != std::errc() || res.ptr != line.data() + q || value < 0 || value > 1'000'000) {
                throw ParseError("expected a non-negative integer, got '" + std::string(line.substr(p, q - p)) + "'",
                                 lineno, static_cast<int>(p) + 1);
            }
            fields.emplace_back(value, static_cast<int>(p) + 1);
            p = q;
        }
        if (fields.size() == 1) {
            if (declared >= 0) throw ParseError("vertex count given twice", lineno, fields[0].second);
            declared = static_cast<int>(fields[0].first);
        } else if (fields.size() == 2 || fields.size() == 3) {
            const int u = static_cast<int>(fields[0].first);
            const int v = static_cast<int>(fields[1].first);
            const int k = fields.size() == 3 ? static_cast<int>(fields[2].first) : 1;
            if (u == v) throw ParseError("loop at vertex " + std::to_string(u), lineno, fields[1].second);
            if (k < 1) throw ParseError("multiplicity must be positive", lineno, fields[2].second);
            entries.push_back({u, v, k});
            max_label = std::max({max_label, u, v});
        } else if (fields.size() > 3) {
            throw ParseError("too many fields; expected 'u v' or 'u v k'", lineno, fields[3].second);
        }
        if (end == text.size()) break;
        start = end + 1;
    }
    const int n = declared >= 0 ? declared : max_label + 1;
    if (max_label >= n) {
        throw ParseError("vertex " + std::to_string(max_label) + " exceeds declared count " + std::to_string(n), 1, 1);
    }
    MultiGraph g(n);
    for (const auto& e : entries) g.add_edge(e.u, e.v, e.k);
    return g;
}

SimpleGraph parse_simple_edgelist(std::string_view text) {
    const MultiGraph m = parse_edgelist(text);
    SimpleGraph g(m.order());
    for (const auto& [pair, k] : m.multiplicities()) {
        if (k > 1) {
            throw ParseError("edge " + std::to_string(pair.first) + "-" + std::to_string(pair.second) +
                                 " repeated; a simple graph was expected",
                             1, 1);
        }
        g.add_edge(pair.first, pair.second);
    }
    return g;
}

std::string emit_edgelist(const SimpleGraph& g) {
    std::ostringstream out;
    out << g.order() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

std::string emit_edgelist(const MultiGraph& g) {
    std::ostringstream out;
    out << g.order() << '\n';
    for (const auto& [pair, k] : g.multiplicities()) {
        out << pair.first << ' ' << pair.second;
        if (k > 1) out << ' ' << k;
        out << '\n';
    }
    return out.str();
}

std::string emit_dot(const SimpleGraph& g, const std::string& name) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (int v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
    for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

std::string emit_dot(const MultiGraph& g, const std::string& name) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (int v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
    for (const auto& [u, v] : g.edge_instances()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace rootline

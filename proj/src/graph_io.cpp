#include "prespec/graph_io.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace prespec {

namespace {

constexpr int kMaxShortOrder = 62;
constexpr int kMaxLongOrder = 258047; // 18-bit size field

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

[[noreturn]] void malformed(const std::string& why) {
    throw std::invalid_argument("malformed graph6: " + why);
}

} // namespace

std::string emit_graph6(const Graph& g) {
    const int n = g.order();
    if (n > kMaxLongOrder)
        throw std::invalid_argument("graph6 supports orders up to 258047");
    std::string out;
    if (n <= kMaxShortOrder) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    // Upper-triangle bits, column-major: (0,1), (0,2), (1,2), (0,3), ...
    int acc = 0;
    int nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

Graph parse_graph6(std::string_view text) {
    std::string_view s = trim(text);
    if (s.starts_with(">>graph6<<")) s.remove_prefix(10);
    if (s.empty()) malformed("empty input");
    for (char c : s)
        if (c < 63 || c > 126) malformed("byte out of printable range");

    std::size_t pos = 0;
    long n;
    if (s[0] == 126) {
        if (s.size() >= 2 && s[1] == 126) malformed("8-byte order encoding unsupported");
        if (s.size() < 4) malformed("truncated size field");
        n = (static_cast<long>(s[1] - 63) << 12) | (static_cast<long>(s[2] - 63) << 6) |
            static_cast<long>(s[3] - 63);
        if (n <= kMaxShortOrder) malformed("non-canonical long size field");
        pos = 4;
    } else {
        n = s[0] - 63;
        pos = 1;
    }

    const long bits_needed = n * (n - 1) / 2;
    const std::size_t bytes_needed = static_cast<std::size_t>((bits_needed + 5) / 6);
    if (s.size() - pos != bytes_needed) malformed("edge bit-vector length mismatch");

    Graph g(static_cast<int>(n));
    long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int byte = s[pos + static_cast<std::size_t>(bit / 6)] - 63;
            if ((byte >> (5 - bit % 6)) & 1) g.add_edge(i, j);
        }
    }
    // Padding bits must be zero.
    if (bits_needed % 6 != 0) {
        int last = s.back() - 63;
        int pad = static_cast<int>(6 - bits_needed % 6);
        if (last & ((1 << pad) - 1)) malformed("nonzero padding bits");
    }
    return g;
}

std::string emit_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    long n = -1, m = -1;
    if (!(in >> n >> m) || n < 0 || m < 0)
        throw std::invalid_argument("edge list: expected header line \"n m\"");
    Graph g(static_cast<int>(n));
    for (long k = 0; k < m; ++k) {
        long u, v;
        if (!(in >> u >> v))
            throw std::invalid_argument("edge list: expected " + std::to_string(m) + " edges");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    long extra;
    if (in >> extra) throw std::invalid_argument("edge list: trailing data");
    return g;
}

Graph parse_graph_auto(std::string_view text) {
    std::string_view s = trim(text);
    // An edge list starts with a decimal header line containing two numbers.
    std::size_t eol = s.find('\n');
    std::string_view first = trim(s.substr(0, eol));
    bool looks_numeric = !first.empty();
    int spaces = 0;
    for (char c : first) {
        if (c == ' ')
            ++spaces;
        else if (!std::isdigit(static_cast<unsigned char>(c)))
            looks_numeric = false;
    }
    if (looks_numeric && spaces == 1) return parse_edge_list(s);
    return parse_graph6(s);
}

} // namespace prespec

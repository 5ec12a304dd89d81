#include "exspec/formats.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "exspec/errors.hpp"
#include "exspec/subset_indexer.hpp"

namespace exspec {

namespace {

// Strips a trailing '#' comment and surrounding whitespace.
std::string_view clean_line(std::string_view line) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) line.remove_prefix(1);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
    return line;
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        std::size_t start = i;
        while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        if (i > start) out.push_back(s.substr(start, i - start));
    }
    return out;
}

int parse_int(std::string_view token, int line_no, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw parse_error("line " + std::to_string(line_no) + ": malformed " + what + " '" +
                          std::string(token) + "'");
    return value;
}

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = clean_line(raw);
        if (line.empty()) continue;
        auto tokens = split_ws(line);
        if (n < 0) {
            if (tokens.size() != 1)
                throw parse_error("line " + std::to_string(line_no) +
                                  ": expected a single vertex count, got '" + std::string(line) + "'");
            n = parse_int(tokens[0], line_no, "vertex count");
            if (n < 1)
                throw parse_error("line " + std::to_string(line_no) + ": vertex count must be positive");
            continue;
        }
        if (tokens.size() != 2)
            throw parse_error("line " + std::to_string(line_no) + ": expected 'i j', got '" +
                              std::string(line) + "'");
        int i = parse_int(tokens[0], line_no, "vertex");
        int j = parse_int(tokens[1], line_no, "vertex");
        if (i < 1 || i > n || j < 1 || j > n)
            throw parse_error("line " + std::to_string(line_no) + ": vertex out of range [1, " +
                              std::to_string(n) + "]");
        if (i == j)
            throw parse_error("line " + std::to_string(line_no) + ": self-loop at vertex " +
                              std::to_string(i));
        if (i > j)
            throw parse_error("line " + std::to_string(line_no) + ": edge endpoints must satisfy i < j");
        if (std::find(edges.begin(), edges.end(), std::make_pair(i, j)) != edges.end())
            throw parse_error("line " + std::to_string(line_no) + ": duplicate edge {" +
                              std::to_string(i) + ", " + std::to_string(j) + "}");
        edges.emplace_back(i, j);
    }
    if (n < 0) throw parse_error("empty input: expected a vertex count line");
    return Graph(n, std::move(edges));
}

std::string to_edge_list(const Graph& g) {
    std::string out = std::to_string(g.n_vertices());
    out.push_back('\n');
    for (auto [i, j] : g.edges()) {
        out += std::to_string(i);
        out.push_back(' ');
        out += std::to_string(j);
        out.push_back('\n');
    }
    return out;
}

Graph parse_hex_upper_triangle(std::string_view hex, int n_vertices) {
    if (n_vertices < 1) throw parse_error("vertex count must be positive");
    const std::uint64_t need = binomial(n_vertices, 2);
    const std::uint64_t have = 4 * static_cast<std::uint64_t>(hex.size());
    if (have < need)
        throw parse_error("hex string too short: " + std::to_string(hex.size()) + " digits give " +
                          std::to_string(have) + " bits, need " + std::to_string(need));

    std::vector<bool> bits;
    bits.reserve(have);
    for (char c : hex) {
        int d = hex_digit(c);
        if (d < 0) throw parse_error(std::string("non-hex character '") + c + "'");
        for (int b = 3; b >= 0; --b) bits.push_back((d >> b) & 1);
    }
    const std::size_t excess = static_cast<std::size_t>(have - need);
    for (std::size_t k = 0; k < excess; ++k)
        if (bits[k])
            throw parse_error("hex string encodes more than C(N,2) bits and the excess leading bits "
                              "are not all zero");

    std::vector<std::pair<int, int>> edges;
    std::size_t pos = excess;
    for (int i = 1; i <= n_vertices; ++i)
        for (int j = i + 1; j <= n_vertices; ++j)
            if (bits[pos++]) edges.emplace_back(i, j);
    return Graph(n_vertices, std::move(edges));
}

std::string to_hex_upper_triangle(const Graph& g) {
    const int n = g.n_vertices();
    const std::uint64_t need = binomial(n, 2);
    const std::size_t digits = static_cast<std::size_t>((need + 3) / 4);
    std::vector<bool> bits(digits * 4, false);
    std::size_t pos = digits * 4 - static_cast<std::size_t>(need);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) bits[pos++] = g.has_edge(i, j);
    std::string out(digits, '0');
    for (std::size_t d = 0; d < digits; ++d) {
        int v = 0;
        for (std::size_t b = 0; b < 4; ++b) v = (v << 1) | (bits[d * 4 + b] ? 1 : 0);
        out[d] = "0123456789ABCDEF"[v];
    }
    return out;
}

Graph parse_graph6(std::string_view line) {
    constexpr std::string_view header = ">>graph6<<";
    if (line.substr(0, header.size()) == header) line.remove_prefix(header.size());
    if (line.empty()) throw parse_error("empty graph6 line");
    if (line[0] == ':' || line[0] == ';')
        throw parse_error("sparse6/incremental formats are not supported");

    auto byte_at = [&](std::size_t k) -> int {
        unsigned char c = static_cast<unsigned char>(line[k]);
        if (c < 63 || c > 126)
            throw parse_error("invalid graph6 byte at position " + std::to_string(k));
        return c - 63;
    };

    std::size_t pos = 0;
    std::uint64_t n = 0;
    if (byte_at(0) < 63) {
        n = static_cast<std::uint64_t>(byte_at(0));
        pos = 1;
    } else {  // byte 126 = '~': extended vertex count
        if (line.size() >= 2 && line[1] == '~')
            throw parse_error("graph6 8-byte vertex counts are not supported");
        if (line.size() < 4) throw parse_error("truncated graph6 vertex count");
        n = (static_cast<std::uint64_t>(byte_at(1)) << 12) |
            (static_cast<std::uint64_t>(byte_at(2)) << 6) | static_cast<std::uint64_t>(byte_at(3));
        pos = 4;
    }
    if (n < 1) throw parse_error("graph6 vertex count must be positive");
    const std::uint64_t nbits = n * (n - 1) / 2;
    const std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
    if (line.size() != pos + nbytes)
        throw parse_error("graph6 line has " + std::to_string(line.size() - pos) +
                          " data bytes, expected " + std::to_string(nbytes));

    std::vector<std::pair<int, int>> edges;
    std::uint64_t bit = 0;
    for (int j = 1; j < static_cast<int>(n); ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int b = byte_at(pos + static_cast<std::size_t>(bit / 6));
            if ((b >> (5 - bit % 6)) & 1) edges.emplace_back(i + 1, j + 1);
        }
    }
    // trailing padding bits must be zero
    for (std::uint64_t k = nbits; k < 6 * static_cast<std::uint64_t>(nbytes); ++k) {
        int b = byte_at(pos + static_cast<std::size_t>(k / 6));
        if ((b >> (5 - k % 6)) & 1) throw parse_error("nonzero padding bits in graph6 line");
    }
    return Graph(static_cast<int>(n), std::move(edges));
}

std::string to_graph6(const Graph& g) {
    const int n = g.n_vertices();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw std::invalid_argument("graph6 output supports at most 258047 vertices");
    }
    const std::uint64_t nbits = binomial(n, 2);
    const std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
    std::vector<int> bytes(nbytes, 0);
    std::uint64_t bit = 0;
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i, ++bit)
            if (g.has_edge(i, j)) bytes[static_cast<std::size_t>(bit / 6)] |= 1 << (5 - bit % 6);
    for (int b : bytes) out.push_back(static_cast<char>(b + 63));
    return out;
}

std::string format_name(GraphFormat f) {
    switch (f) {
        case GraphFormat::edgelist: return "edgelist";
        case GraphFormat::hex: return "hex";
        case GraphFormat::graph6: return "graph6";
    }
    return "?";
}

Graph read_graph_file(const std::filesystem::path& path, GraphFormat format, int n_vertices_for_hex) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path.string() + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();

    switch (format) {
        case GraphFormat::edgelist:
            return parse_edge_list(text);
        case GraphFormat::hex: {
            if (n_vertices_for_hex < 1)
                throw parse_error("hex format requires the vertex count (--vertices)");
            std::istringstream lines(text);
            std::string raw;
            while (std::getline(lines, raw)) {
                std::string_view line = clean_line(raw);
                if (!line.empty()) return parse_hex_upper_triangle(line, n_vertices_for_hex);
            }
            throw parse_error("no hex string found in '" + path.string() + "'");
        }
        case GraphFormat::graph6: {
            std::istringstream lines(text);
            std::string raw;
            while (std::getline(lines, raw)) {
                std::string_view line = clean_line(raw);
                if (!line.empty()) return parse_graph6(line);
            }
            throw parse_error("no graph6 line found in '" + path.string() + "'");
        }
    }
    throw parse_error("unknown graph format");
}

}  // namespace exspec

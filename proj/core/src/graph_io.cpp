#include <algorithm>
#include <charconv>
#include <string>

#include "mp/error.hpp"
#include "mp/graph.hpp"

namespace mp {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

}  // namespace

SimpleGraph parse_graph6(std::string_view text) {
    std::size_t begin = 0, end = text.size();
    while (begin < end && is_space(text[begin])) ++begin;
    while (end > begin && is_space(text[end - 1])) --end;
    if (text.substr(begin, 10) == ">>graph6<<") begin += 10;
    if (begin == end) throw ParseError("empty graph6 string", begin);

    std::size_t pos = begin;
    auto sextet = [&](std::size_t at) {
        const char c = text[at];
        if (c < 63 || c > 126) throw ParseError(std::string("invalid graph6 character '") + c + "'", at);
        return static_cast<unsigned>(c - 63);
    };

    long long n = 0;
    if (text[pos] == '~') {
        if (pos + 1 < end && text[pos + 1] == '~') throw ParseError("graph6 order exceeds 64 vertices", pos);
        if (pos + 4 > end) throw ParseError("truncated graph6 order", end);
        for (int i = 1; i <= 3; ++i) n = n << 6 | sextet(pos + static_cast<std::size_t>(i));
        pos += 4;
        if (n > kMaxVars) throw ParseError("graph6 order exceeds 64 vertices", begin);
    } else {
        n = sextet(pos);
        pos += 1;
    }

    const std::size_t nbits = static_cast<std::size_t>(n * (n - 1) / 2);
    const std::size_t nchars = (nbits + 5) / 6;
    if (end - pos != nchars) {
        throw ParseError("graph6 body has " + std::to_string(end - pos) + " characters, expected " +
                             std::to_string(nchars),
                         pos + std::min(end - pos, nchars));
    }

    SimpleGraph g(static_cast<int>(n));
    std::size_t k = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++k) {
            const unsigned bits = sextet(pos + k / 6);
            if (bits >> (5 - k % 6) & 1u) g.add_edge(u, v);
        }
    }
    if (nchars > 0 && nbits % 6 != 0) {
        const std::size_t last = pos + nchars - 1;
        const unsigned pad_mask = (1u << (6 - nbits % 6)) - 1;
        if ((sextet(last) & pad_mask) != 0) throw ParseError("nonzero graph6 padding bits", last);
    }
    return g;
}

std::string emit_graph6(const SimpleGraph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>((n >> shift & 63) + 63));
    }
    unsigned acc = 0;
    int filled = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = acc << 1 | (g.has_edge(u, v) ? 1u : 0u);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

SimpleGraph parse_edge_list(std::string_view text) {
    std::optional<SimpleGraph> g;
    std::size_t line_start = 0;
    while (line_start <= text.size()) {
        std::size_t line_end = text.find('\n', line_start);
        if (line_end == std::string_view::npos) line_end = text.size();
        std::string_view line = text.substr(line_start, line_end - line_start);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

        // Tokenize with offsets.
        std::vector<std::pair<std::string_view, std::size_t>> tokens;
        for (std::size_t i = 0; i < line.size();) {
            if (is_space(line[i])) { ++i; continue; }
            std::size_t j = i;
            while (j < line.size() && !is_space(line[j])) ++j;
            tokens.emplace_back(line.substr(i, j - i), line_start + i);
            i = j;
        }
        auto number = [](std::pair<std::string_view, std::size_t> tok) {
            long long value = 0;
            auto [ptr, ec] = std::from_chars(tok.first.data(), tok.first.data() + tok.first.size(), value);
            if (ec != std::errc{} || ptr != tok.first.data() + tok.first.size()) {
                throw ParseError("expected an integer, got '" + std::string(tok.first) + "'", tok.second);
            }
            return value;
        };

        if (!tokens.empty()) {
            if (!g) {
                if (tokens.size() != 2 || tokens[0].first != "n") {
                    throw ParseError("edge list must start with 'n <count>'", tokens[0].second);
                }
                const long long n = number(tokens[1]);
                if (n < 0 || n > kMaxVars) throw ParseError("vertex count out of range", tokens[1].second);
                g.emplace(static_cast<int>(n));
            } else {
                if (tokens.size() != 2) throw ParseError("expected 'u v'", tokens[0].second);
                const long long u = number(tokens[0]), v = number(tokens[1]);
                if (u < 1 || u > g->order()) throw ParseError("vertex out of range", tokens[0].second);
                if (v < 1 || v > g->order()) throw ParseError("vertex out of range", tokens[1].second);
                if (u == v) throw ParseError("loops are not allowed", tokens[0].second);
                g->add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1));
            }
        }
        line_start = line_end + 1;
    }
    if (!g) throw ParseError("edge list must start with 'n <count>'", 0);
    return *g;
}

std::string emit_edge_list(const SimpleGraph& g) {
    std::string out = "n " + std::to_string(g.order()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    return out;
}

}  // namespace mp

#include "mp/ideal_io.hpp"

#include <cctype>
#include <charconv>
#include <vector>

#include "mp/error.hpp"

namespace mp {

namespace {

bool parse_uint(std::string_view s, int& out) {
    if (s.empty()) return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

struct Token {
    std::string_view text;
    std::size_t offset;
};

std::vector<Token> split_tokens(std::string_view line, std::size_t base) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) out.push_back({line.substr(start, i - start), base + start});
    }
    return out;
}

}  // namespace

MonomialIdeal parse_ideal_text(std::string_view text) {
    int nvars = -1;
    std::vector<std::vector<int>> rows;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto tokens = split_tokens(line, pos);
        if (!tokens.empty()) {
            if (tokens[0].text == "nvars") {
                if (nvars >= 0) throw ParseError("duplicate nvars header", tokens[0].offset);
                if (tokens.size() != 2 || !parse_uint(tokens[1].text, nvars) || nvars < 1) {
                    throw ParseError("expected 'nvars <positive integer>'", tokens[0].offset);
                }
                if (nvars > kMaxVars) throw ParseError("too many variables", tokens[1].offset);
            } else {
                if (nvars < 0) throw ParseError("monomial before the nvars header", tokens[0].offset);
                std::vector<int> exps(static_cast<std::size_t>(nvars), 0);
                for (const auto& tok : tokens) {
                    if (tok.text == "1") continue;
                    if (tok.text.size() < 2 || tok.text[0] != 'x') {
                        throw ParseError("expected x<i> or x<i>^<e>", tok.offset);
                    }
                    std::string_view body = tok.text.substr(1);
                    int exponent = 1;
                    if (auto caret = body.find('^'); caret != std::string_view::npos) {
                        if (!parse_uint(body.substr(caret + 1), exponent) || exponent < 0) {
                            throw ParseError("bad exponent", tok.offset + 1 + caret + 1);
                        }
                        body = body.substr(0, caret);
                    }
                    int index = 0;
                    if (!parse_uint(body, index) || index < 1 || index > nvars) {
                        throw ParseError("variable index out of range 1.." + std::to_string(nvars), tok.offset + 1);
                    }
                    exps[static_cast<std::size_t>(index - 1)] += exponent;
                }
                rows.push_back(std::move(exps));
            }
        }
        if (end == text.size()) break;
        pos = end + 1;
    }
    if (nvars < 0) throw ParseError("missing nvars header", text.size());
    std::vector<Monomial> monomials;
    monomials.reserve(rows.size());
    for (auto& r : rows) monomials.emplace_back(std::move(r));
    return minimalize(std::move(monomials), nvars);
}

std::string format_monomial(const Monomial& m) {
    if (m.is_unit()) return "1";
    std::string out;
    for (int i = 0; i < m.nvars(); ++i) {
        const int e = m.exponent(i);
        if (e == 0) continue;
        if (!out.empty()) out += ' ';
        out += 'x';
        out += std::to_string(i + 1);
        if (e > 1) {
            out += '^';
            out += std::to_string(e);
        }
    }
    return out;
}

std::string format_ideal_text(const MonomialIdeal& ideal) {
    std::string out = "nvars " + std::to_string(ideal.nvars()) + "\n";
    if (ideal.is_zero()) out += "# zero ideal\n";
    for (const auto& g : ideal.generators()) {
        out += format_monomial(g);
        out += '\n';
    }
    return out;
}

}  // namespace mp

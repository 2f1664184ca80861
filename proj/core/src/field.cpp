#include "mp/field.hpp"

#include <charconv>

#include "mp/error.hpp"

namespace mp {

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
    // Entries are reduced in 64-bit products, so p must fit in 31 bits.
    if (!is_prime(p) || p >= (1u << 31)) {
        throw InvalidInput("field characteristic must be a prime below 2^31, got " +
                           std::to_string(p));
    }
    return FieldSpec{p};
}

FieldSpec FieldSpec::parse(std::string_view text) {
    if (text == "q" || text == "Q" || text == "qq") return rationals();
    if (text == "gf2") return prime(2);
    if (text == "gf3") return prime(3);
    if (text.starts_with("gf:")) {
        auto digits = text.substr(3);
        std::uint32_t p = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
            throw InvalidInput("bad field '" + std::string(text) + "'");
        }
        return prime(p);
    }
    throw InvalidInput("unknown field '" + std::string(text) + "' (expected q, gf2, gf3 or gf:<p>)");
}

std::string FieldSpec::name() const {
    if (is_rational()) return "q";
    if (characteristic_ == 2) return "gf2";
    if (characteristic_ == 3) return "gf3";
    return "gf:" + std::to_string(characteristic_);
}

}  // namespace mp

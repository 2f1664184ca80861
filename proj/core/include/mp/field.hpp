#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace mp {

/// Coefficient field: the rationals or a prime field GF(p).
class FieldSpec {
public:
    /// Rationals.
    constexpr FieldSpec() = default;

    static FieldSpec rationals() { return FieldSpec{}; }
    /// Throws InvalidInput unless p is prime.
    static FieldSpec prime(std::uint32_t p);
    /// Accepts "q", "gf2", "gf3", "gf:<p>".
    static FieldSpec parse(std::string_view text);

    bool is_rational() const noexcept { return characteristic_ == 0; }
    std::uint32_t characteristic() const noexcept { return characteristic_; }

    /// Inverse of parse: "q", "gf2", "gf3", or "gf:<p>".
    std::string name() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
    friend auto operator<=>(const FieldSpec&, const FieldSpec&) = default;

private:
    explicit constexpr FieldSpec(std::uint32_t p) : characteristic_(p) {}
    std::uint32_t characteristic_ = 0;
};

bool is_prime(std::uint64_t n) noexcept;

}  // namespace mp

#pragma once

#include <string>
#include <string_view>

#include "mp/monomial.hpp"

namespace mp {

/// Parses the ideal text format:
///
///     # comment
///     nvars 4
///     x1 x2
///     x2^2 x3
///
/// One monomial per line; `1` denotes the unit monomial. The `nvars` header
/// must precede the first monomial. Errors carry the byte offset.
MonomialIdeal parse_ideal_text(std::string_view text);

/// "x1 x2^2"; the unit monomial prints as "1".
std::string format_monomial(const Monomial& m);

/// Canonical text: header, then generators in canonical order. The zero
/// ideal is a header followed by a "# zero ideal" comment line.
std::string format_ideal_text(const MonomialIdeal& ideal);

}  // namespace mp

#include "mp/error.hpp"

namespace mp {

ParseError::ParseError(const std::string& what, std::size_t offset)
    : std::runtime_error(what + " (at offset " + std::to_string(offset) + ")"), offset_(offset) {}

}  // namespace mp

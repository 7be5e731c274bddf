#pragma once

#include <cstddef>

namespace limitlab {

inline constexpr std::size_t kDefaultMaxDepth = 64;

/// Maximum accepted bit-string length. Reads LIMITLAB_MAX_DEPTH once;
/// falls back to kDefaultMaxDepth when unset or unparsable.
std::size_t max_depth();

}  // namespace limitlab

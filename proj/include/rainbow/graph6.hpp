#pragma once

#include <string>
#include <string_view>

#include "rainbow/graph.hpp"

namespace rainbow {

// graph6 as published with nauty: N(n) header, then the upper triangle in
// column order packed six bits per printable byte (value + 63), zero padded.
std::string graph6_encode(const graph& g);

/// Throws invalid_input on a malformed header, bad length, stray characters or
/// nonzero padding; capacity_error when n exceeds graph::kMaxOrder.
graph graph6_decode(std::string_view text);

} // namespace rainbow

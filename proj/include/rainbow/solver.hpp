#pragma once

#include <optional>
#include <variant>

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

enum class rainbow_kind { edge, vertex };

/// A coloring together with the rainbow number it certifies.
struct rainbow_witness {
    rainbow_kind kind = rainbow_kind::edge;
    int value = 0;
    std::variant<edge_coloring, vertex_coloring> coloring;

    const edge_coloring& edges() const { return std::get<edge_coloring>(coloring); }
    const vertex_coloring& vertices() const { return std::get<vertex_coloring>(coloring); }
};

// Exact rainbow-connectivity checks. Both explore (vertex, used-color-set)
// states, so they are exact under repeated colors; the palette is capped at
// kMaxPalette. Disconnected graphs are rejected with invalid_input.
bool verify_rc_coloring(const graph& g, const edge_coloring& c);
bool verify_rvc_coloring(const graph& g, const vertex_coloring& c);

/// Some coloring with at most k colors, or nullopt once the search is exhausted.
/// The witness value is the number of colors it actually uses.
std::optional<rainbow_witness> rc_leq(const graph& g, int k);
std::optional<rainbow_witness> rvc_leq(const graph& g, int k);

/// Ascends from diam(g) (rc) or diam(g) - 1 (rvc). rc_exact rejects n = 1.
rainbow_witness rc_exact(const graph& g);
rainbow_witness rvc_exact(const graph& g);

/// Specialised rc <= 2 decision: every non-adjacent pair needs a common
/// neighbour whose two connecting edges differ. Exhaustive with unit
/// propagation on pairs down to a single usable connector.
std::optional<edge_coloring> rc2_decide(const graph& g);

} // namespace rainbow

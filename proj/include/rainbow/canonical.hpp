#pragma once

#include <compare>
#include <string>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

/// Exact isomorphism-class key: the graph6 text of the canonically relabeled
/// graph. Two graphs get equal keys if and only if they are isomorphic.
struct canonical_form {
    std::string bytes;
    friend auto operator<=>(const canonical_form&, const canonical_form&) = default;
};

/// Permutation (old label -> new label) that produces the canonical representative.
///
/// The representative minimises the row-wise adjacency key over all labelings
/// compatible with the iterated degree refinement of the vertex set, searched by
/// individualization-refinement. Twin vertices inside a cell are tried once,
/// since swapping them is an automorphism.
std::vector<int> canonical_labeling(const graph& g);

graph canonical_graph(const graph& g);
canonical_form canonical_key(const graph& g);

} // namespace rainbow

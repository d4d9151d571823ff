#ifndef CUBESLICE_GRAPH_CANON_HPP
#define CUBESLICE_GRAPH_CANON_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace cubeslice {

/// Canonical form of a vertex-colored graph: iterated color refinement, then
/// backtracking over the smallest refined color class, taking the
/// lexicographically least encoding over the individualization tree. Equal
/// strings exactly for color-preserving isomorphic graphs. Instances here are
/// tiny (vertex-facet graphs and slice skeletons), so no pruning beyond
/// refinement is needed.
std::string canonical_graph_key(const std::vector<std::vector<int>>& adjacency,
                                const std::vector<int>& colors);

}  // namespace cubeslice

#endif

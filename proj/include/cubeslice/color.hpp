#ifndef CUBESLICE_COLOR_HPP
#define CUBESLICE_COLOR_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>

#include "cubeslice/lp.hpp"
#include "cubeslice/slice.hpp"

namespace cubeslice {

/// {+,0,-} assignment on the cube vertices, label(v) = sign of <w,v> + a for
/// the realizing hyperplane.
struct Labeling {
    int d = 0;
    std::vector<int8_t> labels;  // +1, 0, -1 per vertex index
};

/// Slice skeleton with white (cube vertex) / black (edge crossing) colors.
struct ColoredGraph {
    int n = 0;
    std::vector<std::vector<int>> adj;
    std::vector<int> colors;  // 0 white, 1 black
};

ColoredGraph colored_graph(const Slice& s);

/// Canonical form under color-preserving isomorphism.
std::string colored_canonical_key(const ColoredGraph& g);

/// Square patterns no affine functional realizes on a 2-face, used for
/// pruning only. The production set adds the sign-swapped variants
/// {-,0,-,0} and {0,0,0,-} to the three displayed patterns; both sets are
/// sound (parallelogram identity), and the cone check is the actual gate.
enum class SquarePatterns { paper_three, full };

/// Reject when some 4-cycle of the cube graph carries a forbidden pattern.
bool forbidden_square_filter(const Labeling& l, SquarePatterns patterns = SquarePatterns::full);

/// The three combinatorial necessary conditions: + side and - side induce
/// connected subgraphs, every 0 is adjacent to a + (unless no + exists), no
/// forbidden square.
bool combinatorial_conditions(const Labeling& l, SquarePatterns patterns = SquarePatterns::paper_three);

/// Geometric realizability through the cone of compatible (w, a): equality
/// per 0-label, strict inequality per +/-; witness hyperplane on success.
struct RealizabilityResult {
    bool realizable = false;
    std::optional<Hyperplane> witness;
};
RealizabilityResult realizable(const Labeling& l);

/// All color classes of slices of C_d: connected induced + sides up to cube
/// symmetry, {-,0} labelings of the neighborhood, forbidden-square pruning,
/// cone check as the gate, plus the facet-support family (all-white cube
/// class). Returns the canonical keys.
std::set<std::string> enumerate_color_classes(int d, int workers = 1, bool use_square_filter = true);

/// Same enumeration keeping one representative slice per class (the one with
/// the lexicographically least vertex list, so output is schedule-free).
std::map<std::string, Slice> enumerate_color_classes_full(int d, int workers = 1,
                                                          bool use_square_filter = true);

}  // namespace cubeslice

#endif

#ifndef CUBESLICE_CLASSIFIER_HPP
#define CUBESLICE_CLASSIFIER_HPP

#include <map>
#include <set>

#include "cubeslice/arrangement.hpp"
#include "cubeslice/comb_type.hpp"
#include "cubeslice/slice.hpp"

namespace cubeslice {

/// A full classification of the slices of one cube: the deduplicated type
/// registry plus the per-k bookkeeping behind the breakdown tables, where k
/// is the rank of the cube vertices a slice contains (in the mode's
/// homogeneous picture).
struct ClassificationRun {
    CubeSpec spec;
    bool generic_only = false;
    TypeRegistry registry;
    std::map<int, std::set<std::string>> per_k_types;
    std::map<int, int> per_k_new;  // types first seen at k
    long long master_cell_count = 0;
    // Cell counts of the restricted arrangement per orbit-representative
    // tuple, grouped by tuple size, in representative order.
    std::map<int, std::vector<long long>> flat_cell_counts;
};

/// Enumerate cells (master chambers, then cells of every tuple-orbit flat),
/// build each cell's slice, deduplicate into the registry. generic_only
/// restricts to the master arrangement. max_k < 0 means all sizes (ambient
/// dimension minus one).
ClassificationRun classify(const CubeSpec& spec, bool generic_only = false, int max_k = -1,
                           int workers = 1);

/// Histogram: number of types per vertex count. Values sum to registry size.
std::map<int, int> vertex_count_distribution(const ClassificationRun& run);

/// The central hyperplane attaining the vertex-count upper bound
/// ceil(d/2) * C(d, ceil(d/2)): normal all-ones for odd d, all-ones with a
/// trailing zero for even d.
Hyperplane max_vertex_construction(int d);

/// For a central run: all pairwise intersections of the per-k type sets,
/// checked against the singleton type of C_{d-1}, plus the explicit
/// one-parameter family u_k = (-(d-k),1,...,1,0,...,0) checked to be a
/// combinatorial C_{d-1} for every k.
struct CentralIntersectionReport {
    bool pairwise_singleton_cube = false;
    bool family_all_cube = false;
    std::string cube_key;
    std::vector<std::string> violations;
};
CentralIntersectionReport check_central_intersection_conjecture(const ClassificationRun& central_run);

/// Groups generic central chambers by the symmetry orbit of their crossed
/// edge sets and checks the grouping coincides with canonical-key classes.
struct EdgeCriterionReport {
    int edge_classes = 0;
    int key_classes = 0;
    bool coincide = false;
};
EdgeCriterionReport check_generic_central_edge_criterion(int d, int workers = 1);

/// Attained slice vertex counts plus the literal power-of-two gap predicate
/// (reported, never asserted).
struct VertexGapReport {
    std::set<int> attained;
    std::vector<std::pair<int, bool>> power_counts;  // (2^i <= 2d-3, attained?)
    bool predicate_holds = false;                    // no such 2^i attained
};
VertexGapReport vertex_gap_report(const ClassificationRun& run);

}  // namespace cubeslice

#endif

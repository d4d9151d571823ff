#ifndef CUBESLICE_CUBE_HPP
#define CUBESLICE_CUBE_HPP

#include <cstdint>
#include <utility>

#include "cubeslice/rational.hpp"

namespace cubeslice {

enum class Mode { central, affine };

/// The cube C_d = [-1,1]^d, either in d-space (central slices) or embedded at
/// height 1 in (d+1)-space (affine slices).
struct CubeSpec {
    int d = 0;
    Mode mode = Mode::central;

    int ambient_dim() const { return mode == Mode::affine ? d + 1 : d; }
    int vertex_count() const { return 1 << d; }
};

/// Vertex index convention: bit i of the index is coordinate i+1, set bit
/// means +1. Index 0 is (-1,...,-1).
RatVec vertex_coords(int d, int index);

/// Columns are all 2^d vertices in binary index order; affine mode appends a
/// final all-ones row.
RatMat vertices(const CubeSpec& spec);

/// Pairs of vertex indices differing in exactly one coordinate.
std::vector<std::pair<int, int>> edges(int d);

/// The 2d facets as (coordinate j in 1..d, sign).
std::vector<std::pair<int, int>> facets(int d);

/// Signed permutation pi of [d]: images[i-1] = pi(i) in {±1..±d}, acting by
/// pi(v)_i = v_pi(i) with v_{-j} = -v_j.
struct SignedPermutation {
    std::vector<int> images;

    int d() const { return static_cast<int>(images.size()); }
    static SignedPermutation identity(int d);
};

/// Apply pi to a vector of length d, or length d+1 with the height coordinate
/// fixed (affine mode).
RatVec act(const SignedPermutation& pi, const RatVec& v);

/// Image of a vertex index under pi (bit arithmetic, no rationals).
int act_vertex(const SignedPermutation& pi, int d, int index);

/// All 2^d d! elements, enumerated deterministically. Cached per d.
const std::vector<SignedPermutation>& group_elements(int d);

/// A tuple of linearly independent vertices spanning a flat of the master
/// arrangement. Vertices are stored as cube-vertex indices of C_d; in affine
/// mode the embedded column is (v, 1).
struct VertexTuple {
    std::vector<int> vertices;
    int span_dim = 0;
};

/// One representative per orbit of independent vertex tuples of each size
/// 1..max_size. Tuples are taken as sets of ±vertex-classes of the
/// homogeneous picture (hyperplanes v-perp of the master arrangement), and
/// orbits under the full signed-permutation symmetry of that arrangement;
/// for affine mode this is the symmetry of C_{d+1} acting on the embedded
/// classes. Representatives are the lexicographically smallest orbit members.
std::vector<VertexTuple> orbit_reps_vertex_tuples(const CubeSpec& spec, int max_size);

/// One restriction step: the pivot row removed and the restricted vertex's
/// column as it looked in the matrix the step was applied to.
struct RestrictionStep {
    int pivot_row = 0;  // 0-based index within the matrix at that stage
    RatVec column;      // transformed column of the restricted vertex
};

struct RestrictionChain {
    std::vector<RestrictionStep> steps;
    std::vector<RatVec> originals;  // embedded vertex vectors, restriction order
};

/// Restriction of the vertex matrix to col-perp: removes the column and the
/// pivot row k (first row with a nonzero entry in that column), applying
/// (A|v)_{i,j} = A_{i,j} - v_i A_{k,j} / v_k. Throws on an all-zero column.
struct ZeroColumnError : std::runtime_error {
    ZeroColumnError() : std::runtime_error("restrict: zero column") {}
};
std::pair<RatMat, int> restrict_matrix(const RatMat& a, int col);

/// Reinsert the pivot coordinates in reverse restriction order so that each
/// restricted column annihilates the lifted point.
struct InconsistentChainError : std::runtime_error {
    InconsistentChainError() : std::runtime_error("lift: inconsistent chain") {}
};
RatVec lift(const RatVec& p, const RestrictionChain& chain);

/// Restriction of the full vertex matrix by every vertex of the tuple, in
/// order. Returns the final matrix, the chain (for lifting), and for each
/// surviving column its original vertex index.
struct RestrictedSystem {
    RatMat matrix;
    RestrictionChain chain;
    std::vector<int> column_vertex;  // original cube-vertex index per column
};
RestrictedSystem restrict_by_tuple(const CubeSpec& spec, const VertexTuple& tuple);

}  // namespace cubeslice

#endif

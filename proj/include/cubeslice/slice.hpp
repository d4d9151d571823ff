#ifndef CUBESLICE_SLICE_HPP
#define CUBESLICE_SLICE_HPP

#include <array>
#include <cstdint>
#include <optional>

#include "cubeslice/cube.hpp"
#include "cubeslice/rational.hpp"

namespace cubeslice {

/// Small fixed-width vertex set (slices of C_7 reach 140 vertices).
struct VSet {
    std::array<uint64_t, 3> w{};

    bool get(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { w[i >> 6] |= uint64_t(1) << (i & 63); }
    int count() const {
        return __builtin_popcountll(w[0]) + __builtin_popcountll(w[1]) + __builtin_popcountll(w[2]);
    }
    bool empty() const { return !(w[0] | w[1] | w[2]); }
    VSet operator&(const VSet& o) const {
        VSet r;
        for (int i = 0; i < 3; i++) r.w[i] = w[i] & o.w[i];
        return r;
    }
    bool operator==(const VSet& o) const { return w == o.w; }
    bool operator<(const VSet& o) const { return w < o.w; }

    static VSet full(int n) {
        VSet r;
        for (int i = 0; i < n; i++) r.set(i);
        return r;
    }
    std::vector<int> indices() const {
        std::vector<int> idx;
        for (int b = 0; b < 192; b++)
            if (get(b)) idx.push_back(b);
        return idx;
    }
};

/// The hyperplane {x : <w,x> = a} in cube coordinates.
struct Hyperplane {
    RatVec w;
    Rational a = 0;

    bool central() const { return a == 0; }
};

/// Ambient arrangement normal -> hyperplane. Central mode: u itself with
/// level 0. Affine mode: u = (w, u_last) cuts the height-1 cube in
/// {<w,x> = -u_last}. Returns nullopt when w = 0 (no slice).
std::optional<Hyperplane> hyperplane_from_normal(const CubeSpec& spec, const RatVec& u);

/// One facet of a slice: the slice vertices on it plus every cube facet that
/// cuts out this same face (distinct cube facets can share a contact face).
struct SliceFacet {
    VSet vset;
    std::vector<std::pair<int, int>> cube_facets;  // (coordinate, sign)
};

/// A (d-1)-dimensional section of the cube, fully combinatorial: exact vertex
/// coordinates, white/black flags, facets with vertex incidence, and the
/// ranks of the contained cube vertices in both homogeneous pictures.
struct Slice {
    int d = 0;
    std::vector<RatVec> verts;         // sorted lexicographically
    std::vector<bool> is_cube_vertex;  // white
    std::vector<SliceFacet> facets;    // sorted by vset
    int k_central = 0;                 // rank of contained cube vertices in R^d
    int k_affine = 0;                  // rank of their height-1 embeddings

    int k(Mode mode) const { return mode == Mode::affine ? k_affine : k_central; }
    int vertex_count() const { return static_cast<int>(verts.size()); }
    int facet_count() const { return static_cast<int>(facets.size()); }
    bool incident(int vi, int fi) const { return facets[fi].vset.get(vi); }
};

/// Intersect C_d with the hyperplane. Vertices are the cube vertices on H
/// plus the exact crossings of edges whose endpoint values have strictly
/// opposite signs. Returns nullopt (degenerate) when the intersection has
/// affine dimension < d-1; callers discard those cells.
std::optional<Slice> build_slice(int d, const Hyperplane& h);

/// Face counts (f_0, ..., f_{d-2}) from the vertex-facet incidence: faces are
/// the intersections of facet vertex sets, dimension the affine rank of the
/// face's vertices minus one.
std::vector<int> f_vector(const Slice& s);

/// All faces as (vertex set, dimension), the polytope itself excluded.
std::vector<std::pair<VSet, int>> faces(const Slice& s);

/// Vertex pairs of the 1-faces.
std::vector<std::pair<int, int>> skeleton_edges(const Slice& s);

/// Number of slice facets; central nondegenerate slices give 2d or 2d-2.
int facet_count_profile(const Slice& s);

}  // namespace cubeslice

#endif

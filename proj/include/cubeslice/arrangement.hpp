#ifndef CUBESLICE_ARRANGEMENT_HPP
#define CUBESLICE_ARRANGEMENT_HPP

#include <cstdint>
#include <string>

#include "cubeslice/cube.hpp"
#include "cubeslice/rational.hpp"

namespace cubeslice {

/// Central hyperplane arrangement {n_i-perp}. Normals are primitive integer
/// vectors, sign-canonicalized, pairwise non-parallel; provenance maps each
/// back to the generating cube vertices (or restricted-matrix columns).
struct ArrangementSpec {
    int ambient_dim = 0;
    std::vector<RatVec> normals;
    std::vector<std::vector<int>> provenance;
    std::vector<int> zero_provenance;  // generators that restricted to zero

    int size() const { return static_cast<int>(normals.size()); }
};

/// Signs over the arrangement normals, packed; bit set means '+'.
struct SignVector {
    int n = 0;
    std::vector<uint64_t> bits;

    explicit SignVector(int n_ = 0) : n(n_), bits((n_ + 63) / 64, 0) {}
    bool get(int i) const { return (bits[i >> 6] >> (i & 63)) & 1; }
    void set(int i, bool plus) {
        uint64_t m = uint64_t(1) << (i & 63);
        if (plus)
            bits[i >> 6] |= m;
        else
            bits[i >> 6] &= ~m;
    }
    SignVector flipped(int i) const {
        SignVector s = *this;
        s.bits[i >> 6] ^= uint64_t(1) << (i & 63);
        return s;
    }
    SignVector negated() const {
        SignVector s = *this;
        for (auto& w : s.bits) w = ~w;
        int tail = n & 63;
        if (tail) s.bits.back() &= (uint64_t(1) << tail) - 1;
        return s;
    }
    std::string key() const {
        return std::string(reinterpret_cast<const char*>(bits.data()), bits.size() * 8);
    }
    bool operator<(const SignVector& o) const { return bits < o.bits; }
    bool operator==(const SignVector& o) const { return bits == o.bits; }
};

/// A maximal open cell: realizable sign vector plus an exact interior witness.
struct Chamber {
    SignVector sign;
    RatVec witness;
};

/// Dedup normals up to sign and scaling; zero normals are dropped (their
/// provenance is kept).
ArrangementSpec build_arrangement(const std::vector<RatVec>& normals,
                                  const std::vector<int>& provenance_ids = {});

/// All chambers, one witness each, found by a breadth-first sign-flip walk
/// from a deterministic start chamber. Witnesses are the slack-maximizing
/// interior points, so output is independent of the worker schedule. Result
/// sorted by sign vector.
std::vector<Chamber> enumerate_chambers(const ArrangementSpec& spec, int workers = 1);

/// Chamber count without storing witnesses (and without the per-chamber
/// canonical-witness solve).
long long count_chambers(const ArrangementSpec& spec, int workers = 1);

/// Cells of the arrangement restricted to the flat of a vertex tuple:
/// restricts the vertex matrix, dedups columns, enumerates chambers in the
/// restricted space and lifts every witness back to the ambient space.
struct FlatCells {
    VertexTuple tuple;
    ArrangementSpec restricted;
    std::vector<Chamber> cells;  // witnesses in ambient coordinates
};
FlatCells enumerate_cells_on_flat(const CubeSpec& spec, const VertexTuple& tuple, int workers = 1);

/// Count-only variant of the flat enumeration.
long long count_cells_on_flat(const CubeSpec& spec, const VertexTuple& tuple, int workers = 1);

}  // namespace cubeslice

#endif

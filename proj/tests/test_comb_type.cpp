#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cubeslice/comb_type.hpp"
#include "cubeslice/cube.hpp"

using namespace cubeslice;

namespace {

Hyperplane hp(const std::vector<long>& w, long a_num = 0, long a_den = 1) {
    Hyperplane h;
    h.w.resize(w.size());
    for (size_t i = 0; i < w.size(); i++) h.w[i] = w[i];
    h.a = frac(a_num, a_den);
    return h;
}

Slice slice_of(int d, const Hyperplane& h) {
    auto s = build_slice(d, h);
    REQUIRE(s.has_value());
    return *s;
}

// Relabel vertices and facets of a slice; the canonical key must not move.
Slice relabeled(const Slice& s, std::mt19937& rng) {
    Slice r = s;
    std::vector<int> vp(s.vertex_count());
    for (int i = 0; i < s.vertex_count(); i++) vp[i] = i;
    std::shuffle(vp.begin(), vp.end(), rng);
    for (int i = 0; i < s.vertex_count(); i++) {
        r.verts[vp[i]] = s.verts[i];
        r.is_cube_vertex[vp[i]] = s.is_cube_vertex[i];
    }
    r.facets.clear();
    for (const auto& f : s.facets) {
        SliceFacet nf;
        nf.cube_facets = f.cube_facets;
        for (int i = 0; i < s.vertex_count(); i++)
            if (f.vset.get(i)) nf.vset.set(vp[i]);
        r.facets.push_back(nf);
    }
    std::shuffle(r.facets.begin(), r.facets.end(), rng);
    return r;
}

}  // namespace

TEST_CASE("isomorphic slices share keys, different polygons do not") {
    auto hex1 = slice_of(3, hp({1, 1, 1}));
    auto hex2 = slice_of(3, hp({4, -2, -3}));
    CHECK(canonical_key(hex1) == canonical_key(hex2));

    auto quad1 = slice_of(3, hp({0, 0, 1}));
    auto quad2 = slice_of(3, hp({0, 2, 2}, 1));
    CHECK(canonical_key(quad1) == canonical_key(quad2));

    auto tri = slice_of(3, hp({1, 1, 1}, 5, 2));
    CHECK(tri.vertex_count() == 3);
    CHECK(canonical_key(tri) != canonical_key(quad1));
    CHECK(canonical_key(tri) != canonical_key(hex1));
}

TEST_CASE("registry keeps one entry per type") {
    TypeRegistry reg;
    auto insert = [&](const Slice& s, int k) {
        TypeRegistry::InsertInfo info;
        info.k = k;
        info.normal = RatVec(4, Rational(1));
        info.central = false;
        return reg.insert(s, info);
    };
    // triangle, quadrilateral, pentagon, hexagon
    CHECK(insert(slice_of(3, hp({1, 1, 1}, 5, 2)), 0));
    CHECK(insert(slice_of(3, hp({0, 0, 1}, 1, 3)), 0));
    CHECK(insert(slice_of(3, hp({4, 1, 1}, 7, 2)), 0));
    CHECK(insert(slice_of(3, hp({1, 1, 1}, 1, 2)), 0));
    CHECK(reg.size() == 4);

    // a transformed copy is a duplicate and merges metadata
    SignedPermutation pi{{-2, 3, -1}};
    Hyperplane h2;
    h2.w = act(pi, hp({1, 1, 1}, 1, 2).w);
    h2.a = frac(1, 2);
    CHECK(!insert(slice_of(3, h2), 2));
    CHECK(reg.size() == 4);

    auto entries = reg.entries();
    REQUIRE(entries.size() == 4);
    for (const auto* e : entries) {
        if (e->rep.vertex_count() == 6) {
            CHECK(e->meta.ks == std::set<int>{0, 2});
            CHECK(e->meta.min_k == 0);
        }
    }
}

TEST_CASE("keys are stable under 100 random relabelings") {
    std::mt19937 rng(1618);
    std::vector<Slice> corpus = {
        slice_of(3, hp({1, 1, 1})),       slice_of(3, hp({1, 1, 1}, 5, 2)),
        slice_of(3, hp({4, 1, 1}, 7, 2)), slice_of(4, hp({1, 1, 1, 0})),
        slice_of(4, hp({1, 1, 1, 1})),    slice_of(4, hp({-2, 1, 1, 0})),
        slice_of(4, hp({1, 2, 3, 4}, 2)),
    };
    for (const auto& s : corpus) {
        std::string key = canonical_key(s);
        for (int trial = 0; trial < 100; trial++) CHECK(canonical_key(relabeled(s, rng)) == key);
    }
}

TEST_CASE("different f-vectors never collide in the registry") {
    auto a = slice_of(4, hp({1, 1, 1, 0}));
    auto b = slice_of(4, hp({1, 0, 0, 0}));
    CHECK(f_vector(a) != f_vector(b));
    CHECK(canonical_key(a) != canonical_key(b));
}

TEST_CASE("hex serialization") {
    CHECK(key_to_hex(std::string("\x01\xab", 2)) == "01ab");
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cubeslice/arrangement.hpp"
#include "cubeslice/lp.hpp"

using namespace cubeslice;

namespace {

std::vector<RatVec> vertex_columns(const CubeSpec& spec) {
    RatMat a = vertices(spec);
    std::vector<RatVec> cols;
    for (int j = 0; j < a.cols; j++) cols.push_back(a.col(j));
    return cols;
}

RatVec rv(const std::vector<long>& v) {
    RatVec r(v.size());
    for (size_t i = 0; i < v.size(); i++) r[i] = v[i];
    return r;
}

// All realizable sign vectors by testing every one of the 2^n candidates.
std::set<std::string> chambers_brute_force(const ArrangementSpec& spec) {
    std::set<std::string> out;
    int n = spec.size();
    for (long mask = 0; mask < (1L << n); mask++) {
        ConstraintSystem cs;
        cs.ambient_dim = spec.ambient_dim;
        for (int i = 0; i < n; i++)
            cs.strict.push_back((mask >> i) & 1 ? spec.normals[i] : neg(spec.normals[i]));
        if (!strict_feasible(cs).feasible) continue;
        SignVector s(n);
        for (int i = 0; i < n; i++) s.set(i, (mask >> i) & 1);
        out.insert(s.key());
    }
    return out;
}

}  // namespace

TEST_CASE("normal deduplication") {
    // central C_4: opposite vertices give the same hyperplane
    auto a = build_arrangement(vertex_columns({4, Mode::central}));
    CHECK(a.size() == 8);
    for (const auto& p : a.provenance) CHECK(p.size() == 2);

    // embedded C_3: no two of the eight are parallel
    auto b = build_arrangement(vertex_columns({3, Mode::affine}));
    CHECK(b.size() == 8);

    // restricted example: 6 columns fall to 4 hyperplanes
    std::vector<RatVec> cols = {rv({-2, 0}), rv({2, 0}), rv({0, 2}),
                                rv({-2, 2}), rv({2, 2}), rv({0, 2})};
    auto c = build_arrangement(cols);
    CHECK(c.size() == 4);

    // zero normals are dropped but remembered
    std::vector<RatVec> withzero = {rv({0, 0}), rv({1, 0})};
    auto z = build_arrangement(withzero, {7, 8});
    CHECK(z.size() == 1);
    REQUIRE(z.zero_provenance.size() == 1);
    CHECK(z.zero_provenance[0] == 7);
}

TEST_CASE("two independent lines give four chambers") {
    auto spec = build_arrangement({rv({1, 0}), rv({0, 1})});
    auto ch = enumerate_chambers(spec);
    CHECK(ch.size() == 4);
    CHECK(count_chambers(spec) == 4);
}

TEST_CASE("single hyperplane on a line gives two chambers") {
    auto spec = build_arrangement({rv({2})});
    CHECK(count_chambers(spec) == 2);
}

TEST_CASE("the embedded 3-cube master arrangement has 104 chambers") {
    auto spec = build_arrangement(vertex_columns({3, Mode::affine}));
    auto ch = enumerate_chambers(spec, 2);
    CHECK(ch.size() == 104);
    // witnesses are interior and antipodal closure holds
    std::set<std::string> keys;
    for (const auto& c : ch) {
        keys.insert(c.sign.key());
        for (int i = 0; i < spec.size(); i++) {
            int s = sign_of(dot(spec.normals[i], c.witness));
            CHECK(s != 0);
            CHECK((s > 0) == c.sign.get(i));
        }
    }
    CHECK(keys.size() == 104);
    for (const auto& c : ch) CHECK(keys.count(c.sign.negated().key()));
}

TEST_CASE("restricted arrangement of the two-vertex flat has 8 cells") {
    CubeSpec spec{3, Mode::affine};
    VertexTuple t;
    t.vertices = {0, 3};
    t.span_dim = 2;
    auto flat = enumerate_cells_on_flat(spec, t);
    CHECK(flat.restricted.size() == 4);
    CHECK(flat.cells.size() == 8);
    // every lifted witness is orthogonal to both tuple vertices
    for (const auto& c : flat.cells) {
        RatVec v1 = vertex_coords(3, 0);
        v1.push_back(1);
        RatVec v4 = vertex_coords(3, 3);
        v4.push_back(1);
        CHECK(dot(v1, c.witness) == 0);
        CHECK(dot(v4, c.witness) == 0);
        // and has the right sign pattern: x1 = -x2, x3 = x4
        CHECK(c.witness[0] == -c.witness[1]);
        CHECK(c.witness[2] == c.witness[3]);
    }
}

TEST_CASE("one-vertex flat of the embedded 3-cube has 32 cells") {
    CubeSpec spec{3, Mode::affine};
    auto tuples = orbit_reps_vertex_tuples(spec, 1);
    REQUIRE(tuples.size() == 1);
    CHECK(count_cells_on_flat(spec, tuples[0]) == 32);
}

TEST_CASE("flat cell-count multisets for the embedded 3- and 4-cube") {
    CubeSpec s3{3, Mode::affine};
    std::multiset<long long> size2;
    for (const auto& t : orbit_reps_vertex_tuples(s3, 2))
        if (t.span_dim == 2) size2.insert(count_cells_on_flat(s3, t));
    CHECK(size2 == std::multiset<long long>{6, 8});

    CubeSpec s4{4, Mode::affine};
    std::multiset<long long> c2, c3;
    for (const auto& t : orbit_reps_vertex_tuples(s4, 3)) {
        if (t.span_dim == 2) c2.insert(count_cells_on_flat(s4, t));
        if (t.span_dim == 3) c3.insert(count_cells_on_flat(s4, t));
    }
    CHECK(c2 == std::multiset<long long>{32, 60});
    CHECK(c3 == std::multiset<long long>{6, 8, 10});
}

TEST_CASE("chamber sets equal brute force on random small arrangements") {
    std::mt19937 rng(60817);
    std::uniform_int_distribution<int> entry(-2, 2);
    for (int trial = 0; trial < 200; trial++) {
        int dim = 2 + trial % 3;
        int n = 1 + trial % 6;
        std::vector<RatVec> normals;
        for (int i = 0; i < n; i++) {
            RatVec c(dim);
            bool zero = true;
            for (int j = 0; j < dim; j++) {
                c[j] = entry(rng);
                if (c[j] != 0) zero = false;
            }
            if (zero) c[trial % dim] = 1;
            normals.push_back(c);
        }
        auto spec = build_arrangement(normals);
        auto ch = enumerate_chambers(spec);
        std::set<std::string> got;
        for (const auto& c : ch) got.insert(c.sign.key());
        CHECK(got.size() == ch.size());
        CHECK(got == chambers_brute_force(spec));
    }
}

TEST_CASE("chamber count is invariant under permutation and negation of normals") {
    std::mt19937 rng(4711);
    std::uniform_int_distribution<int> entry(-2, 2);
    for (int trial = 0; trial < 30; trial++) {
        std::vector<RatVec> normals;
        for (int i = 0; i < 4; i++) {
            RatVec c(3);
            bool zero = true;
            for (int j = 0; j < 3; j++) {
                c[j] = entry(rng);
                if (c[j] != 0) zero = false;
            }
            if (zero) c[0] = 1;
            normals.push_back(c);
        }
        long long base = count_chambers(build_arrangement(normals));
        std::shuffle(normals.begin(), normals.end(), rng);
        if (trial % 2) normals[0] = neg(normals[0]);
        CHECK(count_chambers(build_arrangement(normals)) == base);
    }
}

TEST_CASE("worker count does not change the chamber set") {
    auto spec = build_arrangement(vertex_columns({3, Mode::affine}));
    auto a = enumerate_chambers(spec, 1);
    auto b = enumerate_chambers(spec, 4);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); i++) {
        CHECK(a[i].sign == b[i].sign);
        CHECK(a[i].witness == b[i].witness);
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cubeslice/cube.hpp"
#include "cubeslice/linalg.hpp"

using namespace cubeslice;

namespace {

RatMat from_rows(const std::vector<std::vector<long>>& rows) {
    RatMat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (size_t i = 0; i < rows.size(); i++)
        for (size_t j = 0; j < rows[i].size(); j++)
            m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    return m;
}

bool mat_eq(const RatMat& a, const RatMat& b) {
    if (a.rows != b.rows || a.cols != b.cols) return false;
    for (int i = 0; i < a.rows; i++)
        for (int j = 0; j < a.cols; j++)
            if (a.at(i, j) != b.at(i, j)) return false;
    return true;
}

RatVec rv(const std::vector<long>& v) {
    RatVec r(v.size());
    for (size_t i = 0; i < v.size(); i++) r[i] = v[i];
    return r;
}

}  // namespace

TEST_CASE("embedded vertex matrix of the 3-cube") {
    RatMat a = vertices({3, Mode::affine});
    RatMat expect = from_rows({{-1, 1, -1, 1, -1, 1, -1, 1},
                               {-1, -1, 1, 1, -1, -1, 1, 1},
                               {-1, -1, -1, -1, 1, 1, 1, 1},
                               {1, 1, 1, 1, 1, 1, 1, 1}});
    CHECK(mat_eq(a, expect));
}

TEST_CASE("small central vertex matrices") {
    RatMat a1 = vertices({1, Mode::central});
    CHECK(a1.rows == 1);
    CHECK(a1.cols == 2);
    CHECK(a1.at(0, 0) == -1);
    CHECK(a1.at(0, 1) == 1);

    RatMat a2 = vertices({2, Mode::central});
    CHECK(a2.cols == 4);
    for (int j = 0; j < 4; j++)
        for (int i = 0; i < 2; i++) CHECK((a2.at(i, j) == 1 || a2.at(i, j) == -1));
}

TEST_CASE("edge and facet counts") {
    CHECK(edges(3).size() == 12);
    CHECK(facets(3).size() == 6);
    CHECK(edges(4).size() == 32);
    CHECK(facets(4).size() == 8);
    CHECK(edges(6).size() == 192);
    CHECK(facets(6).size() == 12);
}

TEST_CASE("signed permutation action") {
    // 1 -> 1, 2 -> -2, 3 -> -3 applied to the rational direction (4,-2,-3).
    SignedPermutation pi{{1, -2, -3}};
    CHECK(act(pi, rv({4, -2, -3})) == rv({4, 2, 3}));
    CHECK(act(SignedPermutation::identity(3), rv({4, -2, -3})) == rv({4, -2, -3}));
}

TEST_CASE("involution acts as identity on all vertices") {
    SignedPermutation pi{{2, 1, -3}};  // swap 1,2 and flip 3: an involution
    for (int v = 0; v < 8; v++) CHECK(act_vertex(pi, 3, act_vertex(pi, 3, v)) == v);
}

TEST_CASE("action permutes the vertex set") {
    for (int d = 2; d <= 5; d++) {
        const auto& g = group_elements(d);
        for (size_t gi = 0; gi < g.size(); gi += std::max<size_t>(1, g.size() / 7)) {
            std::vector<bool> hit(1 << d, false);
            for (int v = 0; v < (1 << d); v++) {
                int w = act_vertex(g[gi], d, v);
                CHECK(!hit[w]);
                hit[w] = true;
                CHECK(act(g[gi], vertex_coords(d, v)) == vertex_coords(d, w));
            }
        }
    }
}

TEST_CASE("group order is 2^d d!") {
    long long expect = 1;
    for (int d = 1; d <= 5; d++) {
        expect *= 2 * d;
        CHECK(static_cast<long long>(group_elements(d).size()) == expect);
    }
}

TEST_CASE("orbit counts of independent vertex tuples") {
    auto count_size = [](const std::vector<VertexTuple>& ts, int size) {
        int c = 0;
        for (const auto& t : ts)
            if (t.span_dim == size) c++;
        return c;
    };
    auto t3 = orbit_reps_vertex_tuples({3, Mode::affine}, 3);
    CHECK(count_size(t3, 1) == 1);
    CHECK(count_size(t3, 2) == 2);

    auto t4 = orbit_reps_vertex_tuples({4, Mode::affine}, 4);
    CHECK(count_size(t4, 1) == 1);
    CHECK(count_size(t4, 2) == 2);
    CHECK(count_size(t4, 3) == 3);

    auto c3 = orbit_reps_vertex_tuples({3, Mode::central}, 2);
    CHECK(count_size(c3, 1) == 1);
}

TEST_CASE("restriction matrices of the worked example") {
    CubeSpec spec{3, Mode::affine};
    RatMat a = vertices(spec);

    auto [av1, k1] = restrict_matrix(a, 0);
    CHECK(k1 == 0);
    RatMat expect1 =
        from_rows({{-2, 2, 0, 0, -2, 2, 0}, {-2, 0, -2, 2, 0, 2, 0}, {2, 0, 2, 0, 2, 0, 2}});
    CHECK(mat_eq(av1, expect1));

    // v4 is now the third column; its first entry is 0, so the pivot falls to
    // the second row.
    auto [av14, k2] = restrict_matrix(av1, 2);
    CHECK(k2 == 1);
    RatMat expect2 = from_rows({{-2, 2, 0, -2, 2, 0}, {0, 0, 2, 2, 2, 2}});
    CHECK(mat_eq(av14, expect2));
}

TEST_CASE("restricting a single-column matrix") {
    RatMat m(2, 1);
    m.at(0, 0) = 3;
    m.at(1, 0) = -1;
    auto [r, k] = restrict_matrix(m, 0);
    CHECK(r.rows == 1);
    CHECK(r.cols == 0);
    CHECK(k == 0);

    RatMat z(2, 1);
    CHECK_THROWS_AS(restrict_matrix(z, 0), ZeroColumnError);
}

TEST_CASE("lift inverts restriction") {
    CubeSpec spec{3, Mode::affine};
    VertexTuple t;
    t.vertices = {0, 3};  // v1 = (-1,-1,-1), v4 = (1,1,-1)
    t.span_dim = 2;
    auto rs = restrict_by_tuple(spec, t);
    CHECK(rs.matrix.rows == 2);
    CHECK(rs.matrix.cols == 6);

    for (long x = -3; x <= 3; x++)
        for (long y = -3; y <= 3; y++) {
            RatVec p = rv({x, y});
            RatVec hat = lift(p, rs.chain);
            CHECK(hat.size() == 4);
            for (const auto& orig : rs.chain.originals) CHECK(dot(orig, hat) == 0);
        }

    RestrictionChain empty;
    CHECK(lift(rv({5, 7}), empty) == rv({5, 7}));
}

TEST_CASE("one-step lift solves the pivot equation") {
    CubeSpec spec{3, Mode::central};
    VertexTuple t;
    t.vertices = {7};  // (1,1,1)
    t.span_dim = 1;
    auto rs = restrict_by_tuple(spec, t);
    RatVec hat = lift(rv({1, 2}), rs.chain);
    CHECK(hat.size() == 3);
    CHECK(dot(vertex_coords(3, 7), hat) == 0);
}

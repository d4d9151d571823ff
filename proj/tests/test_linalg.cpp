#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

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

// Independent oracle: plain rational Gaussian elimination, no pivoting
// strategy shared with the library path.
int rank_oracle(RatMat m) {
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; c++) {
        int piv = -1;
        for (int i = r; i < m.rows; i++)
            if (m.at(i, c) != 0) piv = i;  // last nonzero, unlike the library
        if (piv < 0) continue;
        for (int j = 0; j < m.cols; j++) std::swap(m.at(r, j), m.at(piv, j));
        for (int i = 0; i < m.rows; i++) {
            if (i == r || m.at(i, c) == 0) continue;
            Rational f = m.at(i, c) / m.at(r, c);
            for (int j = 0; j < m.cols; j++) m.at(i, j) -= f * m.at(r, j);
        }
        r++;
    }
    return r;
}

}  // namespace

TEST_CASE("rank identity") {
    RatMat id(3, 3);
    for (int i = 0; i < 3; i++) id.at(i, i) = 1;
    CHECK(rank(id) == 3);
}

TEST_CASE("rank of the restricted 3x7 vertex matrix") {
    // A|_{v_1} for the height-1 embedding of C_3.
    RatMat m = from_rows({{-2, 2, 0, 0, -2, 2, 0}, {-2, 0, -2, 2, 0, 2, 0}, {2, 0, 2, 0, 2, 0, 2}});
    CHECK(rank(m) == 3);
}

TEST_CASE("rank agrees with elimination oracle on random matrices") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int trial = 0; trial < 200; trial++) {
        RatMat m(4, 6);
        for (int i = 0; i < 4; i++)
            for (int j = 0; j < 6; j++) m.at(i, j) = entry(rng);
        CHECK(rank(m) == rank_oracle(m));
    }
}

TEST_CASE("kernel of the zero matrix spans everything") {
    RatMat z(2, 3);
    auto basis = kernel_basis(z);
    CHECK(basis.size() == 3);
    CHECK(rank_of_vectors(basis) == 3);
}

TEST_CASE("kernel of the all-ones row") {
    RatMat m(1, 3);
    for (int j = 0; j < 3; j++) m.at(0, j) = 1;
    auto basis = kernel_basis(m);
    REQUIRE(basis.size() == 2);
    for (const auto& b : basis) {
        Rational s = b[0] + b[1] + b[2];
        CHECK(s == 0);
    }
}

TEST_CASE("coplanar zero-set of the invalid cube labeling") {
    // The three 0-labeled vertices of the unrealizable C_3 labeling lie on
    // x+z = 0, which forces a fourth vertex onto the plane. Homogenized, the
    // four coplanar vertices leave a one-dimensional kernel spanned by the
    // plane's (w, a) = (1, 0, 1, 0).
    RatMat zeros = from_rows({{1, 1, -1, 1}, {-1, -1, 1, 1}, {-1, 1, 1, 1}});
    auto nb = kernel_basis(zeros);
    REQUIRE(nb.size() == 1);
    RatVec plane = normalize_direction(nb[0]);
    CHECK(plane == RatVec{1, 0, 1, 0});

    RatMat four = from_rows({{1, 1, -1, 1}, {-1, -1, 1, 1}, {-1, 1, 1, 1}, {1, -1, -1, 1}});
    auto kb = kernel_basis(four);
    REQUIRE(kb.size() == 1);
    CHECK(normalize_direction(kb[0]) == plane);
    CHECK(rank(four) == 3);
}

TEST_CASE("solve basic cases") {
    RatMat id(2, 2);
    id.at(0, 0) = 1;
    id.at(1, 1) = 1;
    auto x = solve(id, {Rational(1), Rational(2)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 1);
    CHECK((*x)[1] == 2);

    RatMat m(1, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = 1;
    auto y = solve(m, {Rational(0)});
    REQUIRE(y.has_value());
    CHECK((*y)[0] + (*y)[1] == 0);

    RatMat bad(2, 2);
    bad.at(0, 0) = 1;
    bad.at(1, 0) = 1;
    CHECK(!solve(bad, {Rational(0), Rational(1)}).has_value());
}

TEST_CASE("rank-nullity and exact solutions on random systems") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> entry(-4, 4);
    for (int trial = 0; trial < 100; trial++) {
        int rows = 2 + trial % 4, cols = 2 + (trial / 4) % 5;
        RatMat m(rows, cols);
        for (int i = 0; i < rows; i++)
            for (int j = 0; j < cols; j++) m.at(i, j) = frac(entry(rng), 1 + (trial % 3));
        CHECK(rank(m) + static_cast<int>(kernel_basis(m).size()) == cols);

        RatVec b(rows);
        for (int i = 0; i < rows; i++) b[i] = entry(rng);
        auto x = solve(m, b);
        if (x) {
            for (int i = 0; i < rows; i++) {
                Rational s = 0;
                for (int j = 0; j < cols; j++) s += m.at(i, j) * (*x)[j];
                CHECK(s == b[i]);
            }
        }
        for (const auto& kv : kernel_basis(m))
            for (int i = 0; i < rows; i++) {
                Rational s = 0;
                for (int j = 0; j < cols; j++) s += m.at(i, j) * kv[j];
                CHECK(s == 0);
            }
    }
}

TEST_CASE("rationals stay in lowest terms with positive denominators") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> entry(-20, 20);
    std::uniform_int_distribution<int> den(1, 12);
    for (int trial = 0; trial < 500; trial++) {
        Rational a = frac(entry(rng), den(rng));
        Rational b = frac(entry(rng), den(rng));
        a.canonicalize();
        b.canonicalize();
        for (Rational r : {Rational(a + b), Rational(a - b), Rational(a * b)}) {
            CHECK(r.get_den() > 0);
            Integer g;
            mpz_gcd(g.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
            CHECK((g == 1 || r == 0));
            if (r == 0) CHECK(r.get_den() == 1);
        }
    }
}

TEST_CASE("rational parsing and printing") {
    CHECK(to_string(frac(3, 6)) == "1/2");
    CHECK(to_string(frac(-4, 2)) == "-2");
    CHECK(parse_rational("7/21") == frac(1, 3));
    CHECK(parse_rational("-5") == Rational(-5));
}

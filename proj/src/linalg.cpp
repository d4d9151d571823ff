#include "cubeslice/linalg.hpp"

#include <stdexcept>

namespace cubeslice {

RatVec scale_primitive(const RatVec& v) {
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& q : v) {
        if (q == 0) continue;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
    }
    if (num_gcd == 0) return v;  // zero vector
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (scale < 0) scale = -scale;
    RatVec r(v.size());
    for (size_t i = 0; i < v.size(); i++) r[i] = v[i] * scale;
    return r;
}

RatVec normalize_direction(const RatVec& v) {
    RatVec r = scale_primitive(v);
    int lead = 0;
    for (const auto& q : r) {
        lead = sign_of(q);
        if (lead != 0) break;
    }
    if (lead < 0)
        for (auto& q : r) q = -q;
    return r;
}

int compare(const RatVec& x, const RatVec& y) {
    size_t n = std::min(x.size(), y.size());
    for (size_t i = 0; i < n; i++) {
        int c = cmp(x[i], y[i]);
        if (c != 0) return c;
    }
    if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
    return 0;
}

namespace {

// Clear denominators row by row.
std::vector<std::vector<Integer>> to_integer_rows(const RatMat& m) {
    std::vector<std::vector<Integer>> rows(m.rows, std::vector<Integer>(m.cols));
    for (int i = 0; i < m.rows; i++) {
        Integer l = 1;
        for (int j = 0; j < m.cols; j++)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
        for (int j = 0; j < m.cols; j++) {
            Rational q = m.at(i, j) * l;
            rows[i][j] = q.get_num();
        }
    }
    return rows;
}

}  // namespace

int rank(const RatMat& m) {
    auto a = to_integer_rows(m);
    int rows = m.rows, cols = m.cols;
    int r = 0;
    Integer prev = 1;
    for (int c = 0; c < cols && r < rows; c++) {
        int piv = -1;
        for (int i = r; i < rows; i++)
            if (a[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[r], a[piv]);
        for (int i = r + 1; i < rows; i++) {
            for (int j = c + 1; j < cols; j++) {
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        r++;
    }
    return r;
}

RatMat rref(const RatMat& m, std::vector<int>* pivot_cols) {
    RatMat a = m;
    if (pivot_cols) pivot_cols->clear();
    int r = 0;
    for (int c = 0; c < a.cols && r < a.rows; c++) {
        int piv = -1;
        for (int i = r; i < a.rows; i++)
            if (a.at(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < a.cols; j++) std::swap(a.at(r, j), a.at(piv, j));
        Rational inv = a.at(r, c);
        for (int j = c; j < a.cols; j++) a.at(r, j) /= inv;
        for (int i = 0; i < a.rows; i++) {
            if (i == r || a.at(i, c) == 0) continue;
            Rational f = a.at(i, c);
            for (int j = c; j < a.cols; j++) a.at(i, j) -= f * a.at(r, j);
        }
        if (pivot_cols) pivot_cols->push_back(c);
        r++;
    }
    return a;
}

std::vector<RatVec> kernel_basis(const RatMat& m) {
    std::vector<int> piv;
    RatMat r = rref(m, &piv);
    std::vector<bool> is_piv(m.cols, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<RatVec> basis;
    for (int c = 0; c < m.cols; c++) {
        if (is_piv[c]) continue;
        RatVec v(m.cols, Rational(0));
        v[c] = 1;
        for (size_t k = 0; k < piv.size(); k++) v[piv[k]] = -r.at(static_cast<int>(k), c);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RatVec> solve(const RatMat& m, const RatVec& b) {
    if (static_cast<int>(b.size()) != m.rows) throw std::invalid_argument("solve: b.dim != rows");
    RatMat aug(m.rows, m.cols + 1);
    for (int i = 0; i < m.rows; i++) {
        for (int j = 0; j < m.cols; j++) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[i];
    }
    std::vector<int> piv;
    RatMat r = rref(aug, &piv);
    for (int c : piv)
        if (c == m.cols) return std::nullopt;  // pivot in the b column: inconsistent
    RatVec x(m.cols, Rational(0));
    for (size_t k = 0; k < piv.size(); k++) x[piv[k]] = r.at(static_cast<int>(k), m.cols);
    return x;
}

int rank_of_vectors(const std::vector<RatVec>& vs) {
    if (vs.empty()) return 0;
    RatMat m(static_cast<int>(vs.size()), static_cast<int>(vs[0].size()));
    for (size_t i = 0; i < vs.size(); i++)
        for (size_t j = 0; j < vs[i].size(); j++) m.at(static_cast<int>(i), static_cast<int>(j)) = vs[i][j];
    return rank(m);
}

}  // namespace cubeslice

#include "cubeslice/lp.hpp"

#include <cassert>
#include <stdexcept>

#include "cubeslice/linalg.hpp"

namespace cubeslice {

namespace {

// Full-tableau simplex with Bland's rule. Tableau layout: m constraint rows
// [A | b], one objective row [reduced costs | -objective]. basis[i] is the
// variable basic in row i.
struct Tableau {
    int m, n;
    std::vector<RatVec> t;  // (m+1) x (n+1)
    std::vector<int> basis;

    Tableau(int m_, int n_) : m(m_), n(n_), t(m_ + 1, RatVec(n_ + 1, Rational(0))), basis(m_, -1) {}

    void pivot(int row, int col) {
        RatVec& pr = t[row];
        Rational inv = pr[col];
        for (int j = 0; j <= n; j++)
            if (pr[j] != 0) pr[j] /= inv;
        mpq_t tmp;
        mpq_init(tmp);
        for (int i = 0; i <= m; i++) {
            if (i == row) continue;
            Rational f = t[i][col];
            if (f == 0) continue;
            RatVec& ri = t[i];
            for (int j = 0; j <= n; j++) {
                if (pr[j] == 0) continue;
                mpq_mul(tmp, f.get_mpq_t(), pr[j].get_mpq_t());
                mpq_sub(ri[j].get_mpq_t(), ri[j].get_mpq_t(), tmp);
            }
        }
        mpq_clear(tmp);
        basis[row] = col;
    }

    // Returns false when the LP is unbounded in the current phase.
    bool run(int max_col) {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < max_col; j++)
                if (t[m][j] < 0) {
                    enter = j;
                    break;
                }
            if (enter < 0) return true;
            int leave = -1;
            Rational best;
            for (int i = 0; i < m; i++) {
                if (t[i][enter] <= 0) continue;
                Rational ratio = t[i][n] / t[i][enter];
                if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                    best = ratio;
                    leave = i;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    }
};

}  // namespace

std::optional<LpSolution> simplex_solve(const RatMat& a, const RatVec& b, const RatVec& c) {
    int m = a.rows, n = a.cols;
    assert(static_cast<int>(b.size()) == m && static_cast<int>(c.size()) == n);

    // Sign-normalize rows, then crash-start from unit columns (slacks); only
    // the remaining rows get phase-1 artificials.
    std::vector<int> rowsign(m, 1), rowbasis(m, -1);
    for (int i = 0; i < m; i++)
        if (sign_of(b[i]) < 0) rowsign[i] = -1;
    for (int j = 0; j < n; j++) {
        int the_row = -1;
        bool unit = true;
        for (int i = 0; i < m && unit; i++) {
            if (a.at(i, j) == 0) continue;
            if (the_row >= 0 || rowsign[i] * sign_of(a.at(i, j)) < 0 || a.at(i, j) * rowsign[i] != 1)
                unit = false;
            else
                the_row = i;
        }
        if (unit && the_row >= 0 && rowbasis[the_row] < 0) rowbasis[the_row] = j;
    }
    std::vector<int> art_col(m, -1);
    int na = 0;
    for (int i = 0; i < m; i++)
        if (rowbasis[i] < 0) art_col[i] = n + na++;

    Tableau tab(m, n + na);
    for (int i = 0; i < m; i++) {
        for (int j = 0; j < n; j++) tab.t[i][j] = rowsign[i] * a.at(i, j);
        tab.t[i][n + na] = rowsign[i] * b[i];
        if (rowbasis[i] >= 0) {
            tab.basis[i] = rowbasis[i];
        } else {
            tab.t[i][art_col[i]] = 1;
            tab.basis[i] = art_col[i];
        }
    }
    if (na > 0) {
        // Phase 1: minimize the sum of artificials. Reduced costs are the
        // cost vector (1 on artificials) minus the sum of the rows where an
        // artificial is basic.
        for (int j = 0; j <= n + na; j++) {
            Rational red = (j >= n && j < n + na) ? Rational(1) : Rational(0);
            for (int i = 0; i < m; i++)
                if (tab.basis[i] >= n) red -= tab.t[i][j];
            tab.t[m][j] = red;
        }
        if (!tab.run(n + na)) throw std::logic_error("simplex: phase 1 unbounded");
        if (tab.t[m][n + na] != 0) {
            // -objective != 0  =>  sum of artificials positive: infeasible.
            return std::nullopt;
        }
    }

    // Drive basic artificials out; rows that cannot pivot are redundant.
    for (int i = 0; i < m; i++) {
        if (tab.basis[i] < n) continue;
        int col = -1;
        for (int j = 0; j < n; j++)
            if (tab.t[i][j] != 0) {
                col = j;
                break;
            }
        if (col >= 0) tab.pivot(i, col);
    }

    // Phase 2 objective on the structural columns.
    for (int j = 0; j <= n + na; j++) {
        Rational red = (j < n) ? c[j] : Rational(0);
        for (int i = 0; i < m; i++) {
            int bv = tab.basis[i];
            if (bv < n && c[bv] != 0) red -= c[bv] * tab.t[i][j];
        }
        tab.t[m][j] = red;
    }
    // Redundant rows may still hold an artificial at level zero; forbidding
    // artificial columns from entering (max_col = n) keeps them parked there.
    if (!tab.run(n)) throw std::logic_error("simplex: unbounded objective");

    LpSolution sol;
    sol.x.assign(n, Rational(0));
    for (int i = 0; i < m; i++)
        if (tab.basis[i] < n) sol.x[tab.basis[i]] = tab.t[i][n + na];
    sol.value = -tab.t[m][n + na];
    return sol;
}

FeasibilityResult strict_feasible(const ConstraintSystem& s) {
    const int dim = s.ambient_dim;

    // Work in kernel coordinates of the equality flat.
    std::vector<RatVec> basis;  // columns of K
    bool full_space = s.equalities.empty();
    if (full_space) {
        basis.reserve(dim);
        for (int j = 0; j < dim; j++) {
            RatVec e(dim, Rational(0));
            e[j] = 1;
            basis.push_back(std::move(e));
        }
    } else {
        RatMat eq(static_cast<int>(s.equalities.size()), dim);
        for (size_t i = 0; i < s.equalities.size(); i++)
            for (int j = 0; j < dim; j++) eq.at(static_cast<int>(i), j) = s.equalities[i][j];
        basis = kernel_basis(eq);
    }
    const int k = static_cast<int>(basis.size());

    auto lift = [&](const RatVec& y) {
        RatVec x(dim, Rational(0));
        for (int j = 0; j < k; j++)
            for (int i = 0; i < dim; i++) x[i] += y[j] * basis[j][i];
        return x;
    };

    if (s.strict.empty()) {
        FeasibilityResult r;
        r.feasible = true;
        r.witness = RatVec(dim, Rational(0));
        return r;
    }

    // Reduce strict constraints to kernel coordinates; a constraint that
    // vanishes on the flat can never hold strictly.
    std::vector<RatVec> cs;
    cs.reserve(s.strict.size());
    for (const auto& c : s.strict) {
        RatVec cy(k);
        for (int j = 0; j < k; j++) cy[j] = full_space ? c[j] : dot(c, basis[j]);
        cy = scale_primitive(cy);
        if (is_zero_vec(cy)) return FeasibilityResult{};
        cs.push_back(std::move(cy));
    }

    // max t  s.t.  <c_i, y> >= t,  -1 <= y_j <= 1.
    // Substituting u = y + 1 in [0,2] and noting t* >= 0 (y = 0, t = 0 is
    // feasible), everything is nonnegative-variable standard form:
    //   <c_i, u> - t - s_i = <c_i, 1>,   u_j + w_j = 2.
    const int nc = static_cast<int>(cs.size());
    int rows = nc + k;
    int cols = k + 1 + nc + k;  // u, t, s, w
    RatMat a(rows, cols);
    RatVec b(rows, Rational(0)), obj(cols, Rational(0));
    for (int i = 0; i < nc; i++) {
        Rational g = 0;
        for (int j = 0; j < k; j++) {
            a.at(i, j) = cs[i][j];
            g += cs[i][j];
        }
        a.at(i, k) = -1;
        a.at(i, k + 1 + i) = -1;
        b[i] = g;
    }
    for (int j = 0; j < k; j++) {
        a.at(nc + j, j) = 1;
        a.at(nc + j, k + 1 + nc + j) = 1;
        b[nc + j] = 2;
    }
    obj[k] = -1;  // min -t

    auto sol = simplex_solve(a, b, obj);
    if (!sol) throw std::logic_error("strict_feasible: slack LP must be feasible");
    Rational tstar = sol->x[k];
    if (tstar <= 0) return FeasibilityResult{};

    RatVec y(k);
    for (int j = 0; j < k; j++) y[j] = sol->x[j] - 1;
    RatVec x = lift(y);

    // Exact substitution check.
    for (const auto& e : s.equalities) assert(dot(e, x) == 0);
    for (const auto& c : s.strict) assert(dot(c, x) > 0);

    FeasibilityResult r;
    r.feasible = true;
    r.witness = std::move(x);
    return r;
}

std::optional<int> cone_relint_dimension(const ConstraintSystem& s) {
    if (!strict_feasible(s).feasible) return std::nullopt;
    if (s.equalities.empty()) return s.ambient_dim;
    RatMat eq(static_cast<int>(s.equalities.size()), s.ambient_dim);
    for (size_t i = 0; i < s.equalities.size(); i++)
        for (int j = 0; j < s.ambient_dim; j++) eq.at(static_cast<int>(i), j) = s.equalities[i][j];
    return s.ambient_dim - rank(eq);
}

}  // namespace cubeslice

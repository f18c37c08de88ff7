#include "torimod/simplex_lp.hpp"

#include "torimod/errors.hpp"

namespace torimod {

namespace {

// Dense simplex tableau. Columns 0..n-1 are the problem variables, the last
// column is the right-hand side; the last row holds the reduced costs with the
// negated objective value in the corner.
struct Tableau {
    size_t m, n;               // constraints, variables
    RatMat t;                  // (m+1) x (n+1)
    std::vector<size_t> basis; // basic variable per row

    void pivot(size_t row, size_t col) {
        Rational inv = 1 / t[row][col];
        for (auto& x : t[row]) x *= inv;
        for (size_t i = 0; i <= m; ++i) {
            if (i == row || t[i][col] == 0) continue;
            Rational f = t[i][col];
            for (size_t j = 0; j <= n; ++j) t[i][j] -= f * t[row][j];
        }
        basis[row] = col;
    }

    // Returns false on unboundedness. Bland's rule, so termination is assured.
    bool run() {
        for (;;) {
            size_t col = n;
            for (size_t j = 0; j < n; ++j)
                if (t[m][j] > 0) {
                    col = j;
                    break;
                }
            if (col == n) return true;
            size_t row = m;
            for (size_t i = 0; i < m; ++i) {
                if (t[i][col] <= 0) continue;
                if (row == m) {
                    row = i;
                    continue;
                }
                Rational cur = t[i][n] / t[i][col];
                Rational best = t[row][n] / t[row][col];
                if (cur < best || (cur == best && basis[i] < basis[row])) row = i;
            }
            if (row == m) return false;
            pivot(row, col);
        }
    }
};

}  // namespace

LPResult simplex_solve(RatMat A, std::vector<Rational> b, std::vector<Rational> c) {
    size_t m = A.size(), n = m ? A[0].size() : c.size();
    if (b.size() != m || c.size() != n) throw Error("simplex_solve: shape mismatch");
    for (auto& row : A)
        if (row.size() != n) throw Error("simplex_solve: ragged matrix");

    // Phase I: artificial variable per row, minimize their sum.
    Tableau tab;
    tab.m = m;
    tab.n = n + m;
    tab.t.assign(m + 1, std::vector<Rational>(tab.n + 1, Rational(0)));
    tab.basis.resize(m);
    for (size_t i = 0; i < m; ++i) {
        int sign = b[i] < 0 ? -1 : 1;
        for (size_t j = 0; j < n; ++j) tab.t[i][j] = sign * A[i][j];
        tab.t[i][n + i] = 1;
        tab.t[i][tab.n] = sign * b[i];
        tab.basis[i] = n + i;
    }
    // maximize -(sum of artificials): reduced costs via the basic rows
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j <= tab.n; ++j)
            if (j < n || j == tab.n) tab.t[m][j] += tab.t[i][j];
    if (!tab.run()) throw Error("simplex_solve: phase I unbounded");
    if (tab.t[m][tab.n] != 0) return {LPStatus::Infeasible, Rational(0), {}};

    // Drive any artificial variables out of the basis (degenerate rows).
    for (size_t i = 0; i < m; ++i) {
        if (tab.basis[i] < n) continue;
        size_t col = n;
        for (size_t j = 0; j < n; ++j)
            if (tab.t[i][j] != 0) {
                col = j;
                break;
            }
        if (col < n) tab.pivot(i, col);
        // else the row is all zero on the real variables: redundant constraint
    }

    // Phase II on the real columns.
    Tableau t2;
    t2.m = 0;
    t2.n = n;
    t2.basis.clear();
    for (size_t i = 0; i < m; ++i) {
        if (tab.basis[i] >= n) continue;  // redundant zero row
        std::vector<Rational> row(n + 1);
        for (size_t j = 0; j < n; ++j) row[j] = tab.t[i][j];
        row[n] = tab.t[i][tab.n];
        t2.t.push_back(std::move(row));
        t2.basis.push_back(tab.basis[i]);
        ++t2.m;
    }
    std::vector<Rational> cost(n + 1, Rational(0));
    for (size_t j = 0; j < n; ++j) cost[j] = c[j];
    t2.t.push_back(std::move(cost));
    for (size_t i = 0; i < t2.m; ++i) {
        Rational f = t2.t[t2.m][t2.basis[i]];
        if (f == 0) continue;
        for (size_t j = 0; j <= n; ++j) t2.t[t2.m][j] -= f * t2.t[i][j];
    }
    if (!t2.run()) return {LPStatus::Unbounded, Rational(0), {}};

    LPResult res;
    res.status = LPStatus::Optimal;
    res.value = -t2.t[t2.m][n];
    res.x.assign(n, Rational(0));
    for (size_t i = 0; i < t2.m; ++i) res.x[t2.basis[i]] = t2.t[i][n];
    return res;
}

bool lp_feasible(RatMat A, std::vector<Rational> b) {
    size_t n = A.empty() ? 0 : A[0].size();
    auto r = simplex_solve(std::move(A), std::move(b), std::vector<Rational>(n, Rational(0)));
    return r.status == LPStatus::Optimal;
}

}  // namespace torimod

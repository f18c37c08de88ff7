#include "torimod/lattice.hpp"

#include <numeric>

#include "torimod/errors.hpp"

namespace torimod {

long long dot(const LatticeVector& m, const LatticeVector& n) {
    if (m.size() != n.size()) throw Error("dot: dimension mismatch");
    long long acc = 0;
    for (size_t i = 0; i < m.size(); ++i) acc += m[i] * n[i];
    return acc;
}

bool is_zero_vector(const LatticeVector& v) {
    for (long long x : v)
        if (x != 0) return false;
    return true;
}

LatticeVector primitive(LatticeVector v) {
    long long g = 0;
    for (long long x : v) g = std::gcd(g, x < 0 ? -x : x);
    if (g == 0) throw Error("primitive: zero vector");
    for (long long& x : v) x /= g;
    return v;
}

IntMat identity_mat(size_t n) {
    IntMat I(n, std::vector<Integer>(n, 0));
    for (size_t i = 0; i < n; ++i) I[i][i] = 1;
    return I;
}

IntMat mat_mul(const IntMat& A, const IntMat& B) {
    size_t n = A.size(), k = B.size(), m = B.empty() ? 0 : B[0].size();
    IntMat C(n, std::vector<Integer>(m, 0));
    for (size_t i = 0; i < n; ++i) {
        if (A[i].size() != k) throw Error("mat_mul: shape mismatch");
        for (size_t t = 0; t < k; ++t) {
            if (A[i][t] == 0) continue;
            for (size_t j = 0; j < m; ++j) C[i][j] += A[i][t] * B[t][j];
        }
    }
    return C;
}

SmithNF smith_normal_form(IntMat A) {
    size_t n = A.size(), m = n ? A[0].size() : 0;
    SmithNF r{identity_mat(n), std::move(A), identity_mat(m)};
    IntMat& S = r.S;

    auto swap_rows = [&](size_t a, size_t b) {
        std::swap(S[a], S[b]);
        std::swap(r.U[a], r.U[b]);
    };
    auto swap_cols = [&](size_t a, size_t b) {
        for (auto& row : S) std::swap(row[a], row[b]);
        for (auto& row : r.V) std::swap(row[a], row[b]);
    };
    // row[a] -= q * row[b], tracked in U
    auto row_op = [&](size_t a, size_t b, const Integer& q) {
        for (size_t j = 0; j < m; ++j) S[a][j] -= q * S[b][j];
        for (size_t j = 0; j < n; ++j) r.U[a][j] -= q * r.U[b][j];
    };
    auto col_op = [&](size_t a, size_t b, const Integer& q) {
        for (size_t i = 0; i < n; ++i) S[i][a] -= q * S[i][b];
        for (size_t i = 0; i < m; ++i) r.V[i][a] -= q * r.V[i][b];
    };
    auto negate_row = [&](size_t a) {
        for (auto& x : S[a]) x = -x;
        for (auto& x : r.U[a]) x = -x;
    };

    size_t t = 0;
    while (t < n && t < m) {
        // find a pivot
        size_t pi = t, pj = t;
        bool found = false;
        for (size_t i = t; i < n && !found; ++i)
            for (size_t j = t; j < m && !found; ++j)
                if (S[i][j] != 0) {
                    pi = i;
                    pj = j;
                    found = true;
                }
        if (!found) break;
        swap_rows(t, pi);
        swap_cols(t, pj);

        // clear row and column t; repeat until both stay clear
        for (;;) {
            bool dirty = false;
            for (size_t i = t + 1; i < n; ++i) {
                if (S[i][t] == 0) continue;
                Integer q = S[i][t] / S[t][t];
                row_op(i, t, q);
                if (S[i][t] != 0) {
                    swap_rows(t, i);
                    dirty = true;
                }
            }
            for (size_t j = t + 1; j < m; ++j) {
                if (S[t][j] == 0) continue;
                Integer q = S[t][j] / S[t][t];
                col_op(j, t, q);
                if (S[t][j] != 0) {
                    swap_cols(t, j);
                    dirty = true;
                }
            }
            if (!dirty) break;
        }
        if (S[t][t] < 0) negate_row(t);
        ++t;
    }

    // enforce the divisibility chain
    for (bool changed = true; changed;) {
        changed = false;
        for (size_t i = 0; i + 1 < t; ++i) {
            if (S[i + 1][i + 1] % S[i][i] == 0) continue;
            changed = true;
            // fold S[i+1][i+1] into position (i,i) and redo the 2x2 block
            col_op(i, i + 1, Integer(-1));  // col i += col i+1
            for (;;) {
                bool dirty = false;
                if (S[i + 1][i] != 0) {
                    Integer q = S[i + 1][i] / S[i][i];
                    row_op(i + 1, i, q);
                    if (S[i + 1][i] != 0) {
                        swap_rows(i, i + 1);
                        dirty = true;
                    }
                }
                if (S[i][i + 1] != 0) {
                    Integer q = S[i][i + 1] / S[i][i];
                    col_op(i + 1, i, q);
                    if (S[i][i + 1] != 0) {
                        swap_cols(i, i + 1);
                        dirty = true;
                    }
                }
                if (!dirty) break;
            }
            if (S[i][i] < 0) negate_row(i);
            if (S[i + 1][i + 1] < 0) negate_row(i + 1);
        }
    }
    return r;
}

IntMat unimodular_inverse(const IntMat& A) {
    size_t n = A.size();
    RatMat B(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) B[i][j] = Rational(A[i][j]);
    auto inv = rat_inverse(std::move(B));
    if (!inv) throw Error("unimodular_inverse: singular matrix");
    IntMat R(n, std::vector<Integer>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Rational& x = (*inv)[i][j];
            if (x.get_den() != 1) throw Error("unimodular_inverse: matrix not unimodular");
            R[i][j] = x.get_num();
        }
    return R;
}

Integer int_det(IntMat A) {
    size_t n = A.size();
    if (n == 0) return 1;
    // Bareiss fraction-free elimination
    Integer prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (A[k][k] == 0) {
            size_t p = k + 1;
            while (p < n && A[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(A[k], A[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                A[i][j] = (A[k][k] * A[i][j] - A[i][k] * A[k][j]) / prev;
        prev = A[k][k];
    }
    return sign > 0 ? A[n - 1][n - 1] : -A[n - 1][n - 1];
}

namespace {

// Reduces A to reduced row echelon form in place, pivoting only in the first
// pivot_cols columns; returns the rank of that block. If rhs is non-null it is
// carried along as an extra column per row.
size_t row_reduce(RatMat& A, std::vector<Rational>* rhs, size_t pivot_cols) {
    size_t n = A.size(), m = n ? A[0].size() : 0;
    size_t row = 0;
    for (size_t col = 0; col < pivot_cols && row < n; ++col) {
        size_t p = row;
        while (p < n && A[p][col] == 0) ++p;
        if (p == n) continue;
        std::swap(A[row], A[p]);
        if (rhs) std::swap((*rhs)[row], (*rhs)[p]);
        Rational inv = 1 / A[row][col];
        for (size_t j = col; j < m; ++j) A[row][j] *= inv;
        if (rhs) (*rhs)[row] *= inv;
        for (size_t i = 0; i < n; ++i) {
            if (i == row || A[i][col] == 0) continue;
            Rational f = A[i][col];
            for (size_t j = col; j < m; ++j) A[i][j] -= f * A[row][j];
            if (rhs) (*rhs)[i] -= f * (*rhs)[row];
        }
        ++row;
    }
    return row;
}

}  // namespace

size_t rat_rank(RatMat A) {
    return row_reduce(A, nullptr, A.empty() ? 0 : A[0].size());
}

std::optional<std::vector<Rational>> rat_solve(RatMat A, std::vector<Rational> b) {
    size_t n = A.size();
    if (n == 0) return std::vector<Rational>{};
    if (A[0].size() != n || b.size() != n) throw Error("rat_solve: shape mismatch");
    if (row_reduce(A, &b, n) < n) return std::nullopt;
    return b;
}

std::optional<std::vector<Rational>> rat_solve_rect(RatMat A, std::vector<Rational> b) {
    size_t n = A.size(), m = n ? A[0].size() : 0;
    if (b.size() != n) throw Error("rat_solve_rect: shape mismatch");
    for (size_t i = 0; i < n; ++i) A[i].push_back(b[i]);
    size_t rank = row_reduce(A, nullptr, m);
    if (rank < m) throw Error("rat_solve_rect: dependent columns");
    // rows past the pivot rows must vanish entirely, else inconsistent
    for (size_t i = rank; i < n; ++i)
        if (A[i][m] != 0) return std::nullopt;
    std::vector<Rational> x(m);
    for (size_t i = 0; i < rank; ++i) {
        size_t j = 0;
        while (j < m && A[i][j] == 0) ++j;
        x[j] = A[i][m];
    }
    return x;
}

std::optional<RatMat> rat_inverse(RatMat A) {
    size_t n = A.size();
    // augment with the identity
    for (size_t i = 0; i < n; ++i) {
        if (A[i].size() != n) throw Error("rat_inverse: not square");
        A[i].resize(2 * n, Rational(0));
        A[i][n + i] = 1;
    }
    if (row_reduce(A, nullptr, n) < n) return std::nullopt;
    RatMat R(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) R[i][j] = A[i][n + j];
    return R;
}

}  // namespace torimod

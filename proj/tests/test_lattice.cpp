#include "doctest.h"
#include "torimod/lattice.hpp"
#include "torimod/simplex_lp.hpp"

#include <random>

using namespace torimod;

namespace {

std::mt19937 rng(424242);

IntMat random_mat(size_t n, size_t m, long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    IntMat A(n, std::vector<Integer>(m));
    for (auto& row : A)
        for (auto& x : row) x = d(rng);
    return A;
}

}  // namespace

TEST_CASE("primitive and dot") {
    CHECK(primitive({4, -6, 8}) == LatticeVector{2, -3, 4});
    CHECK(primitive({0, 5}) == LatticeVector{0, 1});
    CHECK(dot({1, 2, 3}, {4, -1, 2}) == 8);
    CHECK_THROWS_AS(primitive({0, 0}), Error);
}

TEST_CASE("smith normal form invariants") {
    for (int it = 0; it < 60; ++it) {
        size_t n = 1 + rng() % 4, m = 1 + rng() % 4;
        IntMat A = random_mat(n, m, -9, 9);
        SmithNF s = smith_normal_form(A);
        // U A V = S
        CHECK(mat_mul(mat_mul(s.U, A), s.V) == s.S);
        // U, V unimodular
        Integer du = int_det(s.U), dv = int_det(s.V);
        CHECK((du == 1 || du == -1));
        CHECK((dv == 1 || dv == -1));
        // S diagonal, nonnegative, divisibility chain
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < m; ++j)
                if (i != j) CHECK(s.S[i][j] == 0);
        for (size_t i = 0; i + 1 < std::min(n, m); ++i) {
            CHECK(s.S[i][i] >= 0);
            if (s.S[i][i] != 0 && s.S[i + 1][i + 1] != 0)
                CHECK(s.S[i + 1][i + 1] % s.S[i][i] == 0);
            if (s.S[i][i] == 0) CHECK(s.S[i + 1][i + 1] == 0);
        }
    }
}

TEST_CASE("det and inverse") {
    IntMat A = {{2, 1}, {1, 1}};
    CHECK(int_det(A) == 1);
    IntMat Ai = unimodular_inverse(A);
    CHECK(mat_mul(A, Ai) == identity_mat(2));

    CHECK(int_det({{1, 2}, {2, 4}}) == 0);
    CHECK(int_det({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}) == 1);

    for (int it = 0; it < 40; ++it) {
        IntMat B = random_mat(3, 3, -5, 5);
        // compare Bareiss against cofactor expansion
        auto c2 = [&](size_t r0, size_t r1, size_t c0, size_t c1) -> Integer {
            return B[r0][c0] * B[r1][c1] - B[r0][c1] * B[r1][c0];
        };
        Integer ref = B[0][0] * c2(1, 2, 1, 2) - B[0][1] * c2(1, 2, 0, 2) +
                      B[0][2] * c2(1, 2, 0, 1);
        CHECK(int_det(B) == ref);
    }
}

TEST_CASE("rational solve and rank") {
    RatMat A = {{Rational(1), Rational(2)}, {Rational(3), Rational(4)}};
    auto x = rat_solve(A, {Rational(5), Rational(11)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 1);
    CHECK((*x)[1] == 2);

    CHECK(rat_rank({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}) == 1);
    CHECK(!rat_solve({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}},
                     {Rational(1), Rational(1)})
               .has_value());

    auto inv = rat_inverse(A);
    REQUIRE(inv.has_value());
    CHECK((*inv)[0][0] == Rational(-2));
    CHECK((*inv)[0][1] == Rational(1));
    CHECK((*inv)[1][0] == Rational(3, 2));
    CHECK((*inv)[1][1] == Rational(-1, 2));
    CHECK(!rat_inverse({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}).has_value());
}

TEST_CASE("simplex: basic optimization") {
    // max x+y st x+2y+s1=4, 3x+y+s2=6, all >= 0; optimum at (8/5, 6/5), value 14/5
    RatMat A = {{Rational(1), Rational(2), Rational(1), Rational(0)},
                {Rational(3), Rational(1), Rational(0), Rational(1)}};
    auto r = simplex_solve(A, {Rational(4), Rational(6)},
                           {Rational(1), Rational(1), Rational(0), Rational(0)});
    REQUIRE(r.status == LPStatus::Optimal);
    CHECK(r.value == Rational(14, 5));
    CHECK(r.x[0] == Rational(8, 5));
    CHECK(r.x[1] == Rational(6, 5));
}

TEST_CASE("simplex: infeasible and unbounded") {
    // x + y = -1, x,y >= 0
    CHECK(!lp_feasible({{Rational(1), Rational(1)}}, {Rational(-1)}));
    // max x st x - y = 1
    auto r = simplex_solve({{Rational(1), Rational(-1)}}, {Rational(1)},
                           {Rational(1), Rational(0)});
    CHECK(r.status == LPStatus::Unbounded);
}

TEST_CASE("simplex: redundant rows and degenerate feasibility") {
    // duplicated constraint
    RatMat A = {{Rational(1), Rational(1)}, {Rational(1), Rational(1)}};
    auto r = simplex_solve(A, {Rational(2), Rational(2)}, {Rational(1), Rational(0)});
    REQUIRE(r.status == LPStatus::Optimal);
    CHECK(r.value == 2);
    // b = 0 forces x = 0 here
    CHECK(lp_feasible({{Rational(1), Rational(1)}}, {Rational(0)}));
}

TEST_CASE("simplex agrees with brute force on small integer programs") {
    // max c.x st A x = b over a grid; compare against exhaustive search of
    // LP optima restricted to basic solutions via vertex enumeration on pairs.
    std::uniform_int_distribution<long> d(-3, 3), dpos(0, 4);
    int done = 0;
    while (done < 50) {
        // 2 constraints, 4 vars
        RatMat A(2, std::vector<Rational>(4));
        for (auto& row : A)
            for (auto& x : row) x = Rational(d(rng));
        std::vector<Rational> b = {Rational(dpos(rng)), Rational(dpos(rng))};
        std::vector<Rational> c(4);
        for (auto& x : c) x = Rational(d(rng));
        auto r = simplex_solve(A, b, c);
        // brute force over all 2-subsets of columns as candidate bases
        bool any = false, unbounded = false;
        Rational best;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                if (i == j) continue;
                RatMat B = {{A[0][i], A[0][j]}, {A[1][i], A[1][j]}};
                auto x = rat_solve(B, b);
                if (!x || (*x)[0] < 0 || (*x)[1] < 0) continue;
                Rational v = c[i] * (*x)[0] + c[j] * (*x)[1];
                if (!any || v > best) best = v;
                any = true;
            }
        // detect unboundedness: a ray direction in ker A with c.d > 0, d >= 0
        for (int i = 0; i < 4 && any; ++i)
            for (int j = i + 1; j < 4; ++j) {
                RatMat B = {{A[0][i], A[0][j]}, {A[1][i], A[1][j]}};
                for (int k = 0; k < 4; ++k) {
                    if (k == i || k == j) continue;
                    auto x = rat_solve(B, {-A[0][k], -A[1][k]});
                    if (!x || (*x)[0] < 0 || (*x)[1] < 0) continue;
                    Rational v = c[i] * (*x)[0] + c[j] * (*x)[1] + c[k];
                    if (v > 0) unbounded = true;
                }
            }
        if (!any) {
            // brute force misses feasible sets needing >2 positive vars only in
            // degenerate setups; just require consistency when simplex agrees
            if (r.status == LPStatus::Infeasible) ++done;
            continue;
        }
        if (unbounded) {
            CHECK(r.status == LPStatus::Unbounded);
        } else if (r.status == LPStatus::Optimal) {
            CHECK(r.value >= best);
            // verify the certificate: feasible point achieving the value
            for (auto& xi : r.x) CHECK(xi >= 0);
            for (int row = 0; row < 2; ++row) {
                Rational acc(0);
                for (int k = 0; k < 4; ++k) acc += A[row][k] * r.x[k];
                CHECK(acc == b[row]);
            }
            Rational obj(0);
            for (int k = 0; k < 4; ++k) obj += c[k] * r.x[k];
            CHECK(obj == r.value);
        }
        ++done;
    }
}

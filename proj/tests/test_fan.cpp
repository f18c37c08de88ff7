#include "doctest.h"
#include "torimod/degree.hpp"
#include "torimod/errors.hpp"
#include "torimod/fan.hpp"
#include "torimod/intersection.hpp"

#include <random>
#include <set>

using namespace torimod;

namespace {

std::mt19937 rng(77001);

Fan p2() { return Fan(2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {2, 0}}); }
Fan p1xp1() {
    return Fan(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, {{0, 2}, {2, 1}, {1, 3}, {3, 0}});
}
Fan hirzebruch1() {
    return Fan(2, {{1, 0}, {0, 1}, {-1, 1}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}
// normal fan of the octahedron: complete, non-simplicial (cones over squares)
Fan octahedron() {
    std::vector<LatticeVector> rays;
    for (int sx : {1, -1})
        for (int sy : {1, -1})
            for (int sz : {1, -1}) rays.push_back({sx, sy, sz});
    auto idx = [&](int sx, int sy, int sz) {
        for (int i = 0; i < 8; ++i)
            if (rays[i][0] == sx && rays[i][1] == sy && rays[i][2] == sz) return i;
        return -1;
    };
    std::vector<std::vector<int>> cones;
    for (int axis = 0; axis < 3; ++axis)
        for (int s : {1, -1}) {
            std::vector<int> c;
            for (int i = 0; i < 8; ++i)
                if (rays[i][axis] == s) c.push_back(i);
            cones.push_back(c);
        }
    return Fan(3, rays, cones);
}

}  // namespace

TEST_CASE("fan construction and completeness") {
    Fan f = p2();
    CHECK(f.rank() == 2);
    CHECK(f.cones().size() == 7);  // zero cone, 3 rays, 3 two-cones
    CHECK(f.max_cones().size() == 3);
    CHECK(f.is_complete());
    CHECK(f.is_simplicial());
    CHECK(f.is_smooth());

    Fan partial(2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}});
    CHECK(!partial.is_complete());

    CHECK(p1xp1().is_complete());
    CHECK(hirzebruch1().is_complete());
    Fan oct = octahedron();
    CHECK(oct.is_complete());
    CHECK(!oct.is_simplicial());
}

TEST_CASE("invalid fans are rejected") {
    // non-primitive ray
    CHECK_THROWS_AS(Fan(2, {{2, 0}, {0, 1}}, {{0, 1}}), InvalidFan);
    // duplicate ray
    CHECK_THROWS_AS(Fan(2, {{1, 0}, {1, 0}}, {{0, 1}}), InvalidFan);
    // non-pointed cone
    CHECK_THROWS_AS(Fan(2, {{1, 0}, {-1, 0}, {0, 1}}, {{0, 1, 2}}), InvalidFan);
    // overlapping cones that do not meet in a face
    CHECK_THROWS_AS(Fan(2, {{1, 0}, {0, 1}, {1, 1}}, {{0, 1}, {0, 2}}), InvalidFan);
    // unused ray
    CHECK_THROWS_AS(Fan(2, {{1, 0}, {0, 1}, {1, 1}}, {{0, 1}}), InvalidFan);
    // a listed generator interior to the cone is not extreme
    CHECK_THROWS_AS(Fan(2, {{1, 0}, {0, 1}, {1, 1}}, {{0, 1, 2}}), InvalidFan);
    // ray index out of range
    CHECK_THROWS_AS(Fan(2, {{1, 0}, {0, 1}}, {{0, 5}}), InvalidFan);
}

TEST_CASE("NotPure on mixed-dimension maximal cones") {
    Fan f(2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {2}});
    CHECK_THROWS_AS(f.is_complete(), NotPure);
}

TEST_CASE("triangulation") {
    // simplicial input unchanged
    Fan f = p2();
    Fan t = f.triangulate();
    CHECK(t.max_cones().size() == 3);

    // cone over the unit square splits into two unimodular cones
    Fan sq(3, {{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}}, {{0, 1, 2, 3}});
    Fan st = sq.triangulate();
    CHECK(st.is_simplicial());
    CHECK(st.max_cones().size() == 2);
    CHECK(st.is_smooth());
    // refinement: every point of the square cone lies in some simplex
    std::uniform_int_distribution<long long> h(0, 3);
    for (int it = 0; it < 200; ++it) {
        long long z = h(rng);
        std::uniform_int_distribution<long long> xy(0, z);
        LatticeVector n = {xy(rng), xy(rng), z};
        CHECK(sq.cone_contains(sq.max_cones()[0], n));
        CHECK(st.containing_max_cone(n).has_value());
    }

    Fan ot = octahedron().triangulate();
    CHECK(ot.is_simplicial());
    CHECK(ot.is_complete());
    CHECK(ot.rays().size() == 8);
}

TEST_CASE("parallelepiped") {
    auto u = parallelepiped({{1, 0}, {0, 1}});
    CHECK(u.index == 1);
    CHECK(u.points == std::vector<LatticeVector>{{0, 0}});

    auto p = parallelepiped({{1, 0}, {1, 2}});
    CHECK(p.index == 2);
    CHECK(p.points == std::vector<LatticeVector>{{0, 0}, {1, 1}});

    auto one = parallelepiped({{1}});
    CHECK(one.index == 1);
    CHECK(one.points == std::vector<LatticeVector>{{0}});

    CHECK_THROWS_AS(parallelepiped({{1, 0}, {2, 0}}), NotSimplicial);

    // non-full-dimensional: ray (2,4) is not primitive as a cone generator,
    // but parallelepiped itself only needs independence
    auto low = parallelepiped({{1, 3}});
    CHECK(low.index == 1);
}

TEST_CASE("parallelepiped counts match brute force") {
    std::uniform_int_distribution<long long> d(-4, 4);
    int done = 0;
    while (done < 40) {
        LatticeVector a = {d(rng), d(rng)}, b = {d(rng), d(rng)};
        long long det = a[0] * b[1] - a[1] * b[0];
        if (det == 0) continue;
        auto pp = parallelepiped({a, b});
        CHECK(pp.index == integer(det < 0 ? -det : det));
        // brute force: x = s*a + t*b, 0 <= s,t < 1 ; scan integer box
        std::set<LatticeVector> expect;
        for (long long x = -16; x <= 16; ++x)
            for (long long y = -16; y <= 16; ++y) {
                // solve (x,y) = s a + t b by Cramer
                Rational s = rat(x * b[1] - y * b[0], det);
                Rational t = rat(a[0] * y - a[1] * x, det);
                if (s >= 0 && s < 1 && t >= 0 && t < 1) expect.insert({x, y});
            }
        std::set<LatticeVector> got(pp.points.begin(), pp.points.end());
        CHECK(got == expect);
        ++done;
    }
}

TEST_CASE("degree evaluation") {
    Fan p1(1, {{1}, {-1}}, {{0}, {1}});
    DegreeFunction deg(p1, 5, {2, 2});
    CHECK(deg({0}) == 0);
    CHECK(deg({5}) == 2);           // 5 * 2/5
    CHECK(deg({-3}) == Rational(6, 5));
    CHECK(deg.scaled({7}) == 14);

    DegreeFunction dp2(p2(), 7, {2, 3, 5});
    CHECK(dp2({1, 1}) == Rational(5, 7));  // alpha + beta
    CHECK(dp2({-1, -1}) == Rational(5, 7));
    CHECK(dp2({-2, 1}) == Rational(19, 7));  // (-2,1) = 3*(0,1) + 2*(-1,-1)

    // integral ray value rejected
    CHECK_THROWS_AS(DegreeFunction(p1, 5, {5, 2}), IntegralDegreeError);
    CHECK_THROWS_AS(DegreeFunction(p1, 5, {-10, 2}), IntegralDegreeError);
}

TEST_CASE("degree on non-simplicial cones requires linear values") {
    Fan oct = octahedron();
    // values from the global linear functional phi = (1,1,3)
    std::vector<long long> vals;
    for (const auto& d : oct.rays()) vals.push_back(d[0] + d[1] + 3 * d[2]);
    DegreeFunction deg(oct, 7, vals);
    std::uniform_int_distribution<long long> c(-10, 10);
    Fan tri = oct.triangulate();
    DegreeFunction dtri(tri, 7, vals);
    for (int it = 0; it < 300; ++it) {
        LatticeVector n = {c(rng), c(rng), c(rng)};
        Rational expect = rat(n[0] + n[1] + 3 * n[2], 7);
        expect.canonicalize();
        CHECK(deg(n) == expect);
        CHECK(dtri(n) == expect);
    }

    // perturbing one value breaks linearity on a square cone
    vals[0] += 1;
    CHECK_THROWS_AS(DegreeFunction(oct, 7, vals), InvalidFan);
}

TEST_CASE("superlattices") {
    auto s1 = superlattices(1, 5);
    REQUIRE(s1.size() == 1);
    CHECK(s1[0] == RatMat{{Rational(1)}});

    CHECK(superlattices(2, 2).size() == 3);
    CHECK(superlattices(2, 3).size() == 4);
    CHECK(superlattices(3, 2).size() == 7);

    for (long p : {2L, 3L}) {
        auto ss = superlattices(2, p);
        std::set<std::set<LatticeVector>> distinct;
        for (const auto& basis : ss) {
            // index: |det| of the basis must be 1/p^(r-1)
            Rational det = basis[0][0] * basis[1][1] - basis[0][1] * basis[1][0];
            Rational ad = det < 0 ? Rational(-det) : det;
            ad.canonicalize();
            CHECK(ad == Rational(1, p));
            // S contains N: e_i = integer combination of basis vectors
            for (int i = 0; i < 2; ++i) {
                RatMat BT = {{basis[0][0], basis[1][0]}, {basis[0][1], basis[1][1]}};
                std::vector<Rational> e(2, Rational(0));
                e[i] = 1;
                auto sol = rat_solve(BT, e);
                REQUIRE(sol.has_value());
                for (auto& x : *sol) CHECK(x.get_den() == 1);
            }
            // fingerprint the lattice by its points in [0,1)^2 scaled by p
            std::set<LatticeVector> pts;
            for (long u = -p; u <= p; ++u)
                for (long v = -p; v <= p; ++v) {
                    Rational x = u * basis[0][0] + v * basis[1][0];
                    Rational y = u * basis[0][1] + v * basis[1][1];
                    if (x >= 0 && x < 1 && y >= 0 && y < 1)
                        pts.insert({mpz_get_si(Rational(x * p).get_num_mpz_t()),
                                    mpz_get_si(Rational(y * p).get_num_mpz_t())});
                }
            distinct.insert(pts);
        }
        CHECK(distinct.size() == ss.size());
    }
}

TEST_CASE("alternating codimension sum over containing cones") {
    std::uniform_int_distribution<long long> c(-6, 6);
    for (const Fan& f : {p2(), p1xp1(), hirzebruch1(), octahedron()}) {
        for (int it = 0; it < 60; ++it) {
            LatticeVector n(f.rank());
            for (auto& x : n) x = c(rng);
            long sum = 0;
            for (const auto& cone : f.cones())
                if (f.cone_contains(cone, n)) sum += (f.codim(cone) % 2 == 0) ? 1 : -1;
            CHECK(sum == 1);
        }
    }
}

TEST_CASE("intersection numbers") {
    IntersectionRing rp2(p2());
    CHECK(rp2.integrate_monomial({1, 1, 0}) == 1);
    CHECK(rp2.integrate_monomial({2, 0, 0}) == 1);
    CHECK(rp2.integrate_monomial({0, 2, 0}) == 1);
    CHECK(rp2.integrate_monomial({0, 0, 2}) == 1);
    CHECK_THROWS_AS(rp2.integrate_monomial({1, 0, 0}), WrongDegree);

    IntersectionRing rpp(p1xp1());
    // rays: 0:(1,0) 1:(-1,0) 2:(0,1) 3:(0,-1)
    CHECK(rpp.integrate_monomial({2, 0, 0, 0}) == 0);
    CHECK(rpp.integrate_monomial({1, 0, 1, 0}) == 1);
    CHECK(rpp.integrate_monomial({0, 1, 0, 1}) == 1);
    CHECK(rpp.integrate_monomial({1, 1, 0, 0}) == 0);

    IntersectionRing rf1(hirzebruch1());
    // rays: 0:(1,0) 1:(0,1) 2:(-1,1) 3:(0,-1); D1 is the -1 curve
    CHECK(rf1.integrate_monomial({0, 2, 0, 0}) == -1);
    CHECK(rf1.integrate_monomial({0, 0, 2, 0}) == 0);
    CHECK(rf1.integrate_monomial({2, 0, 0, 0}) == 0);
    CHECK(rf1.integrate_monomial({0, 0, 0, 2}) == 1);
    CHECK(rf1.integrate_monomial({1, 1, 0, 0}) == 1);
    CHECK(rf1.integrate_monomial({1, 0, 1, 0}) == 0);

    CHECK_THROWS_AS((IntersectionRing{octahedron()}), NotSmooth);
}

TEST_CASE("intersection numbers agree with a linear-algebra oracle") {
    // unknowns: all degree-2 divisor monomials; equations: Stanley-Reisner
    // zeros, cone monomials = 1, and the linear relations multiplied by each
    // divisor. The solved table must match integrate_monomial everywhere.
    for (const Fan& f : {p2(), p1xp1(), hirzebruch1()}) {
        size_t n = f.rays().size();
        std::vector<std::pair<size_t, size_t>> monos;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i; j < n; ++j) monos.push_back({i, j});
        auto col = [&](size_t i, size_t j) {
            if (i > j) std::swap(i, j);
            for (size_t k = 0; k < monos.size(); ++k)
                if (monos[k] == std::make_pair(i, j)) return k;
            return size_t(0);
        };
        RatMat A;
        std::vector<Rational> b;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i; j < n; ++j) {
                if (i == j) continue;
                std::vector<int> pair_cone = {int(i), int(j)};
                bool is_cone = false;
                for (const auto& c : f.cones()) is_cone |= (c.rays == pair_cone);
                std::vector<Rational> row(monos.size(), Rational(0));
                row[col(i, j)] = 1;
                A.push_back(row);
                b.push_back(Rational(is_cone ? 1 : 0));
            }
        // sum_i (m.d_i) D_i D_k = 0 for m = e_1, e_2 and every k
        for (int axis = 0; axis < f.rank(); ++axis)
            for (size_t k = 0; k < n; ++k) {
                std::vector<Rational> row(monos.size(), Rational(0));
                for (size_t i = 0; i < n; ++i) row[col(i, k)] += rat(f.ray(int(i))[axis]);
                A.push_back(row);
                b.push_back(Rational(0));
            }
        auto table = rat_solve_rect(A, b);
        REQUIRE(table.has_value());
        IntersectionRing ring(f);
        for (size_t k = 0; k < monos.size(); ++k) {
            std::vector<int> exps(n, 0);
            exps[monos[k].first] += 1;
            exps[monos[k].second] += 1;
            CHECK(ring.integrate_monomial(exps) == (*table)[k]);
        }
    }
}

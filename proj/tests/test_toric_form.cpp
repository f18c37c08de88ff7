#include "doctest.h"
#include "torimod/toric_form.hpp"

#include <random>

using namespace torimod;

namespace {

std::mt19937 rng(20240817);

Fan p1() { return Fan(1, {{1}, {-1}}, {{0}, {1}}); }

Fan p2() { return Fan(2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {2, 0}}); }

Fan p1xp1() {
    return Fan(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, {{0, 2}, {2, 1}, {1, 3}, {3, 0}});
}

Fan hirzebruch1() {
    return Fan(2, {{1, 0}, {0, 1}, {-1, 1}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

long long random_value(long l) {
    std::uniform_int_distribution<long long> d(-3 * l, 3 * l);
    long long v = d(rng);
    while (v % l == 0) v = d(rng);
    return v;
}

}  // namespace

TEST_CASE("cone_rational basics") {
    DegreeFunction deg(p1(), 5, {2, 2});
    const Fan& f = deg.fan();

    // zero cone: the single point 0, empty product
    ConeRational zc = cone_rational(deg, f.cones().front(), {3});
    REQUIRE(zc.denominator.empty());
    QSeries one = zc.expand(10);
    CHECK(compare(one, QSeries::constant(Cyclotomic::one(5), 10)) ==
          SeriesVerdict::EqualToPrecision);

    // ray (1), m = (1): geometric series in zeta^2 q
    Cone ray0{{0}, 1};
    QSeries g = cone_rational(deg, ray0, {1}).expand(8);
    for (long n = 0; n <= 8; ++n)
        CHECK(g.coefficient(n) == Cyclotomic::zeta_power(5, 2 * n));

    // ray (1), m = (0): continuation gives the constant 1/(1 - zeta^2)
    QSeries c = cone_rational(deg, ray0, {0}).expand(5);
    Cyclotomic expect = cyc_inv(Cyclotomic::one(5) - Cyclotomic::zeta_power(5, 2));
    CHECK(c.coefficient(0) == expect);
    for (long n = 1; n <= 5; ++n) CHECK(c.coefficient(n).is_zero());

    CHECK_THROWS_AS((ConeRational{Cone{}, {0}, 5, {{0, 0}}, {{0, 0}}}.expand(3)),
                    PoleOnContinuation);
}

TEST_CASE("cone expansion matches brute-force lattice sum on a singular cone") {
    // complete simplicial fan with a cone of index 2
    Fan f(2, {{1, 0}, {1, 2}, {-1, -1}}, {{0, 1}, {1, 2}, {2, 0}});
    DegreeFunction deg(f, 5, {1, 1, 2});
    Cone cone = f.max_cones()[0];
    LatticeVector m{1, 1};
    long prec = 12;
    QSeries got = cone_rational(deg, cone, m).expand(prec);

    std::vector<Cyclotomic> coeffs(size_t(prec + 1), Cyclotomic::zero(5));
    for (long long x = -3 * prec; x <= 3 * prec; ++x)
        for (long long y = -3 * prec; y <= 3 * prec; ++y) {
            LatticeVector n{x, y};
            if (!f.cone_contains(cone, n)) continue;
            long long e = dot(m, n);
            if (e < 0 || e > prec) continue;
            long res = long(((deg.scaled(n) % 5) + 5) % 5);
            coeffs[size_t(e)] += Cyclotomic::zeta_power(5, res);
        }
    QSeries brute(5, 0, prec, std::move(coeffs));
    CHECK(compare(got, brute) == SeriesVerdict::EqualToPrecision);
}

TEST_CASE("r_of_m on the projective line") {
    for (long a : {1L, 3L}) {
        DegreeFunction deg(p1(), 5, {a, a});
        Cyclotomic za = Cyclotomic::zeta_power(5, a);
        QSeries r0 = r_of_m(deg, {0}, 10);
        Cyclotomic expect = cyc_inv(Cyclotomic::one(5) - za) * Rational(2) - Cyclotomic::one(5);
        CHECK(r0.coefficient(0) == expect);
        for (long n = 1; n <= 10; ++n) CHECK(r0.coefficient(n).is_zero());

        QSeries r1 = r_of_m(deg, {1}, 10);
        CHECK(r1.order() == 1);
        for (long n = 1; n <= 10; ++n)
            CHECK(r1.coefficient(n) ==
                  Cyclotomic::zeta_power(5, a * n) - Cyclotomic::zeta_power(5, -a * n));
    }
}

TEST_CASE("valuation invariant for r_of_m") {
    DegreeFunction deg(p2(), 7, {1, 2, 3});
    std::uniform_int_distribution<long long> d(-4, 4);
    for (int it = 0; it < 25; ++it) {
        LatticeVector m{d(rng), d(rng)};
        QSeries r = r_of_m(deg, m, 12);
        CHECK(r.order() >= 0);
    }
    // the constant term of the full form comes from m = 0 alone
    QSeries total = toric_form_lattice_sum(deg, 6);
    QSeries r0 = r_of_m(deg, {0, 0}, 6);
    CHECK(total.coefficient(0) == r0.coefficient(0));
}

TEST_CASE("truncation bound") {
    TruncationBound tb1(p1());
    CHECK(tb1.interior_points() == std::vector<LatticeVector>{{0}});
    CHECK(tb1.bound({5}) == 5);
    CHECK(tb1.bound({-7}) == 7);
    CHECK(tb1.enumerate(10).size() == 21);

    TruncationBound tb2(p2());
    CHECK(tb2.interior_points() == std::vector<LatticeVector>{{0, 0}});
    CHECK(tb2.bound({1, 0}) == 1);
    CHECK(tb2.bound({-2, 1}) == 2);  // only (1,0) pairs negatively
    for (const auto& m : tb2.enumerate(5)) CHECK(tb2.bound(m) <= 5);
}

TEST_CASE("termination certificate round trip and tampering") {
    DegreeFunction deg(p2(), 5, {1, 1, 1});
    Json cert;
    toric_form_lattice_sum(deg, 8, &cert);
    std::string why;
    CHECK(check_truncation_certificate(p2(), cert, &why));

    Json bad = cert;
    bad["radius"] = cert["radius"].get<long long>() - 1;
    CHECK_FALSE(check_truncation_certificate(p2(), bad, &why));

    bad = cert;
    bad["m_count"] = cert["m_count"].get<size_t>() + 1;
    CHECK_FALSE(check_truncation_certificate(p2(), bad, &why));

    bad = cert;
    bad["interior_points"].push_back(std::vector<long long>{1, 0});
    CHECK_FALSE(check_truncation_certificate(p2(), bad, &why));

    bad = cert;
    bad["regions"][0]["bounds"][0] = bad["regions"][0]["bounds"][0].get<long long>() + 1;
    CHECK_FALSE(check_truncation_certificate(p2(), bad, &why));

    // certificate for a different fan must not validate
    CHECK_FALSE(check_truncation_certificate(p1xp1(), cert, &why));
}

TEST_CASE("projective line gives -2 s") {
    for (long l : {5L, 7L})
        for (long a = 1; a < l; ++a) {
            DegreeFunction deg(p1(), l, {a, a});
            QSeries f = toric_form_lattice_sum(deg, 40);
            QSeries expect = s_series(a, l, 1, 40) * Rational(-2);
            CHECK(compare(f, expect) == SeriesVerdict::EqualToPrecision);
            QSeries g = toric_form_cohomological(deg, 40);
            CHECK(compare(g, expect) == SeriesVerdict::EqualToPrecision);
        }
}

TEST_CASE("projective plane matches the explicit double sum") {
    long l = 5, prec = 10;
    for (int it = 0; it < 3; ++it) {
        std::vector<long long> v{random_value(l), random_value(l), random_value(l)};
        DegreeFunction deg(p2(), l, v);
        QSeries f = toric_form_lattice_sum(deg, prec);

        Cyclotomic num = Cyclotomic::one(5) - Cyclotomic::zeta_power(5, v[0] + v[1] + v[2]);
        QSeries oracle(5, prec);
        for (long long a = -2 * prec; a <= 2 * prec; ++a)
            for (long long b = -2 * prec; b <= 2 * prec; ++b) {
                ConeRational term;
                term.l = l;
                term.numerator = {{0, 0}};
                term.denominator = {{long(((v[0] % l) + l) % l), a},
                                    {long(((v[1] % l) + l) % l), b},
                                    {long(((v[2] % l) + l) % l), -a - b}};
                oracle += term.expand(prec) * num;
            }
        CHECK(compare(f, oracle) == SeriesVerdict::EqualToPrecision);
    }
}

TEST_CASE("cross-pipeline agreement") {
    for (const Fan& fan : {p2(), p1xp1(), hirzebruch1()}) {
        for (int it = 0; it < 4; ++it) {
            long l = it % 2 == 0 ? 5 : 7;
            std::vector<long long> v;
            for (size_t i = 0; i < fan.rays().size(); ++i) v.push_back(random_value(l));
            DegreeFunction deg(fan, l, v);
            QSeries fa = toric_form_lattice_sum(deg, 15);
            QSeries fb = toric_form_cohomological(deg, 15);
            CHECK(compare(fa, fb) == SeriesVerdict::EqualToPrecision);
        }
    }
}

TEST_CASE("stellar refinement invariance") {
    std::vector<long long> v{1, 3, 2};
    DegreeFunction deg(p2(), 5, v);
    QSeries f = toric_form_lattice_sum(deg, 15);

    // star subdivision at (1,1) with the degree extended linearly
    Fan refined(2, {{1, 0}, {0, 1}, {-1, -1}, {1, 1}},
                {{0, 3}, {3, 1}, {1, 2}, {2, 0}});
    DegreeFunction rdeg(refined, 5, {v[0], v[1], v[2], v[0] + v[1]});
    QSeries g = toric_form_lattice_sum(rdeg, 15);
    CHECK(compare(f, g) == SeriesVerdict::EqualToPrecision);
}

TEST_CASE("product fans multiply") {
    std::vector<long long> a{2, 3}, b{1, 4};
    DegreeFunction da(p1(), 5, a), db(p1(), 5, b);
    QSeries fa = toric_form_lattice_sum(da, 15), fb = toric_form_lattice_sum(db, 15);

    DegreeFunction dprod(p1xp1(), 5, {a[0], a[1], b[0], b[1]});
    QSeries fp = toric_form_lattice_sum(dprod, 15);
    CHECK(compare(fp, fa * fb) == SeriesVerdict::EqualToPrecision);
}

TEST_CASE("cohomological pipeline rejects non-smooth fans") {
    Fan f(2, {{1, 0}, {0, 1}, {-1, -2}}, {{0, 1}, {1, 2}, {2, 0}});
    DegreeFunction deg(f, 5, {1, 1, 1});
    CHECK_THROWS_AS(toric_form_cohomological(deg, 5), NotSmooth);
    // the lattice-sum pipeline accepts the same data
    QSeries g = toric_form_lattice_sum(deg, 5);
    CHECK(g.precision() == 5);
}

TEST_CASE("express_in_generators") {
    DegreeFunction deg(p1(), 5, {2, 2});
    long B = sturm_bound(5, 1);
    QSeries f = toric_form_lattice_sum(deg, B);
    GeneratorPoly g = express_in_generators(f, 1, 5);
    REQUIRE(g.terms.size() == 1);
    CHECK(g.terms.begin()->first == GeneratorMonomial{GeneratorSymbol::s(2, 5, 1)});
    CHECK(g.terms.begin()->second == Cyclotomic(Rational(-2), 5));

    // the zero series is the zero polynomial
    GeneratorPoly z = express_in_generators(QSeries(5, B), 1, 5);
    CHECK(z.is_zero());

    CHECK_THROWS_AS(express_in_generators(QSeries(5, B - 1), 1, 5), InsufficientPrecision);
    CHECK_THROWS_AS(express_in_generators(QSeries(3, 20), 1, 3), SmallLevel);

    // perturbing one coefficient must make the solve inconsistent
    QSeries s = s_series(1, 5, 1, B);
    std::vector<Cyclotomic> cs;
    for (long n = 0; n <= B; ++n) cs.push_back(s.coefficient(n));
    cs[1] += Cyclotomic::one(5);
    QSeries perturbed(5, 0, B, std::move(cs));
    CHECK_THROWS_AS(express_in_generators(perturbed, 1, 5), NotInRing);

    // weight-2 membership: s_{1/5} * s_{2/5} expressed and re-evaluated
    long B2 = sturm_bound(5, 2);
    QSeries prod = s_series(1, 5, 1, B2) * s_series(2, 5, 1, B2);
    GeneratorPoly p = express_in_generators(prod, 2, 5);
    CHECK(compare(evaluate(p, B2), prod) == SeriesVerdict::EqualToPrecision);
}

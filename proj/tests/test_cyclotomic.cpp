#include "doctest.h"
#include "torimod/cyclotomic.hpp"

#include <random>

using namespace torimod;

namespace {

std::mt19937 rng(20240817);

Cyclotomic random_elem(unsigned L) {
    std::uniform_int_distribution<long> num(-8, 8);
    std::uniform_int_distribution<long> den(1, 5);
    std::vector<Rational> poly(euler_phi(L));
    for (auto& c : poly) c = Rational(num(rng), den(rng));
    return Cyclotomic(L, std::move(poly));
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<Integer>{-1, 1});
    CHECK(cyclotomic_polynomial(2) == std::vector<Integer>{1, 1});
    CHECK(cyclotomic_polynomial(5) == std::vector<Integer>{1, 1, 1, 1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<Integer>{1, 0, -1, 0, 1});
    // First index with a coefficient outside {-1,0,1} is 105.
    CHECK(cyclotomic_polynomial(105)[7] == -2);
}

TEST_CASE("cyc_make reduction") {
    Cyclotomic z5 = cyc_make(5, {0, 1});
    CHECK(z5.coeffs() == std::vector<Rational>{0, 1, 0, 0});

    // zeta_5^4 = -1 - z - z^2 - z^3 by long division by Phi_5.
    Cyclotomic z54 = cyc_make(5, {0, 0, 0, 0, 1});
    CHECK(z54.coeffs() == std::vector<Rational>{-1, -1, -1, -1});
    CHECK(z54 == Cyclotomic::zeta_power(5, 4));
    CHECK(z54 == Cyclotomic::zeta_power(5, -1));

    Cyclotomic three = cyc_make(1, {3});
    CHECK(three.is_rational());
    CHECK(three.rational_value() == 3);
}

TEST_CASE("cyc_inv") {
    CHECK(cyc_inv(Cyclotomic::one(5)) == Cyclotomic::one(5));
    CHECK(cyc_inv(Cyclotomic::zeta_power(5, 1)) == Cyclotomic::zeta_power(5, 4));

    Cyclotomic x = Cyclotomic::one(5) + Cyclotomic::zeta_power(5, 1);
    CHECK(x * cyc_inv(x) == Cyclotomic::one(5));

    CHECK_THROWS_AS(cyc_inv(Cyclotomic::zero(7)), DivisionByZero);
}

TEST_CASE("cyc_inv is a two-sided inverse on random elements") {
    for (unsigned L : {5u, 7u, 12u}) {
        int done = 0;
        while (done < 200) {
            Cyclotomic x = random_elem(L);
            if (x.is_zero()) continue;
            Cyclotomic y = cyc_inv(x);
            CHECK(x * y == Cyclotomic::one(L));
            CHECK(y * x == Cyclotomic::one(L));
            ++done;
        }
    }
}

TEST_CASE("cyc_embed") {
    CHECK(cyc_embed(Cyclotomic::zeta_power(5, 1), 10) == Cyclotomic::zeta_power(10, 2));
    CHECK(cyc_embed(Cyclotomic(Rational(1, 2)), 7) == Cyclotomic(Rational(1, 2), 7));
    CHECK_THROWS_AS(cyc_embed(Cyclotomic::zeta_power(5, 1), 7), IncompatibleLevels);

    // Ring morphism: embed(x)*embed(inv(x)) = 1.
    Cyclotomic x = Cyclotomic::one(5) + Cyclotomic::zeta_power(5, 1);
    CHECK(cyc_embed(x, 20) * cyc_embed(cyc_inv(x), 20) == Cyclotomic::one(20));
}

TEST_CASE("cyc_embed multiplicative and injective on random samples") {
    for (int i = 0; i < 50; ++i) {
        Cyclotomic a = random_elem(7), b = random_elem(7);
        CHECK(cyc_embed(a * b, 21) == cyc_embed(a, 21) * cyc_embed(b, 21));
        if (!(a == b)) CHECK(cyc_embed(a, 21) != cyc_embed(b, 21));
    }
}

TEST_CASE("ring axioms on random triples") {
    for (unsigned L : {5u, 12u}) {
        for (int i = 0; i < 60; ++i) {
            Cyclotomic a = random_elem(L), b = random_elem(L), c = random_elem(L);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
        }
    }
}

TEST_CASE("power sums of roots of unity") {
    for (unsigned L : {5u, 7u}) {
        Cyclotomic acc = Cyclotomic::zero(L);
        for (unsigned k = 0; k < L; ++k) acc += Cyclotomic::zeta_power(L, k);
        CHECK(acc.is_zero());
    }
}

#include "torimod/verify.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "torimod/hecke.hpp"

namespace torimod {

namespace {

Fan p1() { return Fan(1, {{1}, {-1}}, {{0}, {1}}); }

Fan p2() { return Fan(2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {2, 0}}); }

Fan p1xp1() {
    return Fan(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, {{0, 2}, {2, 1}, {1, 3}, {3, 0}});
}

Fan hirzebruch1() {
    return Fan(2, {{1, 0}, {0, 1}, {-1, 1}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

long long random_value(std::mt19937& rng, long l) {
    std::uniform_int_distribution<long long> d(-3 * l, 3 * l);
    long long v = d(rng);
    while (v % l == 0) v = d(rng);
    return v;
}

bool equal_to(const QSeries& a, const QSeries& b, long prec) {
    return compare(a, b, prec) == SeriesVerdict::EqualToPrecision;
}

struct Check {
    bool pass = true;
    std::ostringstream detail;

    void fail(const std::string& msg) {
        if (pass) detail << msg;
        pass = false;
    }
};

// criterion 1: P1 form = -2 s^{(1)} to q^100, each case under 10 s
Check c1() {
    Check c;
    double worst = 0;
    for (long l : {5L, 7L})
        for (long a = 1; a < l && c.pass; ++a) {
            auto t0 = std::chrono::steady_clock::now();
            DegreeFunction deg(p1(), l, {a, a});
            QSeries f = toric_form_lattice_sum(deg, 100);
            QSeries expect = s_series(a, l, 1, 100) * Rational(-2);
            double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            worst = std::max(worst, dt);
            if (!equal_to(f, expect, 100))
                c.fail("mismatch at l=" + std::to_string(l) + " a=" + std::to_string(a));
            if (dt >= 10) c.fail("case exceeded 10 s");
        }
    if (c.pass) c.detail << "all a at l=5,7; slowest case " << worst << " s";
    return c;
}

// criterion 2: P2 against the displayed double sum, 5 random degree triples
Check c2() {
    Check c;
    std::mt19937 rng(7001);
    long l = 5, prec = 20;
    for (int it = 0; it < 5 && c.pass; ++it) {
        std::vector<long long> v{random_value(rng, l), random_value(rng, l),
                                 random_value(rng, l)};
        DegreeFunction deg(p2(), l, v);
        QSeries f = toric_form_lattice_sum(deg, prec);
        Cyclotomic num =
            Cyclotomic::one(5) - Cyclotomic::zeta_power(5, v[0] + v[1] + v[2]);
        QSeries oracle(5, prec);
        // terms outside the box have q-order above prec: the order of the
        // (a,b) term is at least max(|a|,|b|)
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
        if (!equal_to(f, oracle, prec))
            c.fail("mismatch for values " + std::to_string(v[0]) + "," +
                   std::to_string(v[1]) + "," + std::to_string(v[2]));
    }
    if (c.pass) c.detail << "5 random degree triples at l=5 to q^20";
    return c;
}

// criterion 3: both pipelines on 4 fans x 20 random degrees to q^30
Check c3() {
    Check c;
    std::mt19937 rng(7003);
    const char* names[] = {"P1", "P2", "P1xP1", "F1"};
    int fi = 0;
    double worst = 0;
    for (const Fan& fan : {p1(), p2(), p1xp1(), hirzebruch1()}) {
        auto t0 = std::chrono::steady_clock::now();
        for (int it = 0; it < 20 && c.pass; ++it) {
            long l = it % 2 == 0 ? 5 : 7;
            std::vector<long long> v;
            for (size_t i = 0; i < fan.rays().size(); ++i) v.push_back(random_value(rng, l));
            DegreeFunction deg(fan, l, v);
            QSeries fa = toric_form_lattice_sum(deg, 30);
            QSeries fb = toric_form_cohomological(deg, 30);
            if (!equal_to(fa, fb, 30))
                c.fail(std::string("pipelines disagree on ") + names[fi]);
        }
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        worst = std::max(worst, dt);
        if (dt >= 120) c.fail(std::string(names[fi]) + " exceeded 2 min");
        ++fi;
    }
    if (c.pass) c.detail << "20 degrees per fan; slowest fan " << worst << " s";
    return c;
}

// criterion 4: stellar refinement of P2 leaves the form unchanged
Check c4() {
    Check c;
    std::vector<long long> v{1, 3, 2};
    DegreeFunction deg(p2(), 5, v);
    QSeries f = toric_form_lattice_sum(deg, 30);
    Fan refined(2, {{1, 0}, {0, 1}, {-1, -1}, {1, 1}}, {{0, 3}, {3, 1}, {1, 2}, {2, 0}});
    DegreeFunction rdeg(refined, 5, {v[0], v[1], v[2], v[0] + v[1]});
    QSeries g = toric_form_lattice_sum(rdeg, 30);
    if (!equal_to(f, g, 30)) c.fail("refined fan gives a different series");
    if (c.pass) c.detail << "star subdivision of P2 at (1,1) to q^30";
    return c;
}

// criterion 5: product fan = product of series
Check c5() {
    Check c;
    std::vector<long long> a{2, 3}, b{1, 4};
    DegreeFunction da(p1(), 5, a), db(p1(), 5, b);
    QSeries fa = toric_form_lattice_sum(da, 30), fb = toric_form_lattice_sum(db, 30);
    DegreeFunction dp(p1xp1(), 5, {a[0], a[1], b[0], b[1]});
    QSeries fp = toric_form_lattice_sum(dp, 30);
    if (!equal_to(fp, fa * fb, 30)) c.fail("product rule fails on P1xP1");
    if (c.pass) c.detail << "P1xP1 versus product of P1 factors to q^30";
    return c;
}

// criterion 6: t_p equals the sublattice sum
Check c6() {
    Check c;
    for (long l : {5L, 7L})
        for (long p : {2L, 3L}) {
            if (!c.pass) break;
            {
                DegreeFunction deg(p1(), l, {1, 1});
                GeneratorPoly g = express_in_generators(
                    toric_form_lattice_sum(deg, std::max(sturm_bound(l, 1), 30L)), 1, l);
                if (!equal_to(t_p(g, p, 1, 30), sublattice_side(deg, p, 30), 30))
                    c.fail("P1 case fails at l=" + std::to_string(l) + " p=" + std::to_string(p));
            }
            {
                DegreeFunction deg(p2(), l, {1, 1, 1});
                GeneratorPoly g = express_in_generators(
                    toric_form_lattice_sum(deg, std::max(sturm_bound(l, 2), 30L)), 2, l);
                if (!equal_to(t_p(g, p, 2, 30), sublattice_side(deg, p, 30), 30))
                    c.fail("P2 case fails at l=" + std::to_string(l) + " p=" + std::to_string(p));
            }
        }
    if (c.pass)
        c.detail << "P1,P2 x l in {5,7} x p in {2,3} to q^30; r=1 correction 1, "
                    "r=2 correction (p-p)/(p-1) = 0 in both p";
    return c;
}

// criterion 7: s|T_p = s_{pa} + s_a to q^100
Check c7() {
    Check c;
    for (long l : {5L, 7L})
        for (long p : {2L, 3L, 11L})
            for (long a = 1; a < l && c.pass; ++a) {
                GeneratorPoly g;
                g.l = l;
                g.weight = 1;
                g.add_term({GeneratorSymbol::s(a, l, 1)}, Cyclotomic::one(unsigned(l)));
                QSeries got = t_p(g, p, 1, 100);
                QSeries expect = s_series(p * a, l, 1, 100) + s_series(a, l, 1, 100);
                if (!equal_to(got, expect, 100))
                    c.fail("fails at l=" + std::to_string(l) + " p=" + std::to_string(p) +
                           " a=" + std::to_string(a));
            }
    if (c.pass) c.detail << "p in {2,3,11}, l in {5,7}, all residues, to q^100";
    return c;
}

// criterion 8: relation coefficients vanish on all zero-sum tuples, length <= 4
Check c8() {
    Check c;
    int count = 0;
    for (long l : {5L, 7L}) {
        std::vector<std::vector<long>> tuples;
        std::vector<long> cur;
        auto rec = [&](auto&& self, long min_b, int left, long sum) -> void {
            if (left == 0) {
                if (sum % l == 0 && cur.size() >= 2) tuples.push_back(cur);
                return;
            }
            for (long b = min_b; b < l; ++b) {
                cur.push_back(b);
                self(self, b, left - 1, sum + b);
                cur.pop_back();
            }
        };
        for (int len = 2; len <= 4; ++len) rec(rec, 1, len, 0);
        for (const auto& t : tuples) {
            if (!c.pass) break;
            if (!relation_coefficient(l, t, 100).is_zero_to_precision()) {
                std::ostringstream os;
                os << "nonzero coefficient at l=" << l << " tuple";
                for (long b : t) os << " " << b;
                c.fail(os.str());
            }
            ++count;
        }
    }
    if (c.pass) c.detail << count << " zero-sum tuples checked to q^100";
    return c;
}

// criterion 9: s^{(2)}, s^{(3)} at l=5 and rhat^{(4)} reduce to s^{(1)} polynomials
Check c9() {
    Check c;
    for (int k : {2, 3})
        for (long a = 1; a < 5 && c.pass; ++a) {
            GeneratorPoly red = reduce_to_s1(GeneratorSymbol::s(a, 5, k), 5);
            long B = sturm_bound(5, k);
            if (!equal_to(evaluate(red, B), s_series(a, 5, k, B), B))
                c.fail("residual for s_" + std::to_string(a) + "^(" + std::to_string(k) + ")");
        }
    if (c.pass) {
        GeneratorPoly red = reduce_to_s1(GeneratorSymbol::r(4), 5);
        long B = sturm_bound(5, 4);
        if (!equal_to(evaluate(red, B), r_series(4, B).embed(5), B))
            c.fail("residual for rhat^(4)");
    }
    if (c.pass) c.detail << "zero residual at the certified precision for each reduction";
    return c;
}

// criterion 10: rhat^{(4)}, rhat^{(6)} coefficients proportional to sigma_3, sigma_5
Check c10() {
    Check c;
    std::string constants;
    for (int k : {4, 6}) {
        QSeries r = r_series(k, 100);
        Rational ratio = 0;
        for (long d = 1; d <= 100 && c.pass; ++d) {
            Integer sig = 0;
            for (long j = 1; j <= d; ++j)
                if (d % j == 0) {
                    Integer t = j;
                    for (int e = 2; e < k; ++e) t *= j;
                    sig += t;
                }
            if (!r.coefficient(d).is_rational()) {
                c.fail("irrational coefficient");
                break;
            }
            Rational q = r.coefficient(d).rational_value() / Rational(sig);
            q.canonicalize();
            if (d == 1)
                ratio = q;
            else if (q != ratio)
                c.fail("ratio breaks at d=" + std::to_string(d));
        }
        if (c.pass)
            constants += " rhat^(" + std::to_string(k) + ")/sigma_" + std::to_string(k - 1) +
                         " = " + ratio.get_str();
    }
    if (c.pass) c.detail << "constants:" << constants;
    return c;
}

// criterion 11: DFT Fricke image minus direct expansion vanishes
Check c11() {
    Check c;
    for (long l : {5L, 7L})
        for (long a = 1; a < l && c.pass; ++a) {
            QSeries diff = evaluate(fricke_s1(a, l), 50) - fricke_s1_direct(a, l, 50);
            if (!diff.is_zero_to_precision())
                c.fail("nonzero at l=" + std::to_string(l) + " a=" + std::to_string(a));
        }
    if (c.pass) c.detail << "zero series including constants, l in {5,7}, to q^50";
    return c;
}

// criterion 12: level raising formula for weight-1 generators
Check c12() {
    Check c;
    for (auto [l, p] : std::vector<std::pair<long, long>>{{5, 2}, {5, 3}, {7, 2}})
        for (long a = 1; a < l && c.pass; ++a) {
            GeneratorPoly g;
            g.l = l;
            g.weight = 1;
            g.add_term({GeneratorSymbol::s(a, l, 1)}, Cyclotomic::one(unsigned(l)));
            QSeries got = evaluate(level_raise(g, p), 60);
            QSeries expect(unsigned(p * l), 60);
            for (long k = 0; k < p; ++k) expect += s_series(a + k * l, p * l, 1, 60);
            expect = expect * Rational(1, p);
            if (!equal_to(got, expect, 60))
                c.fail("fails at l=" + std::to_string(l) + " p=" + std::to_string(p) +
                       " a=" + std::to_string(a));
        }
    if (c.pass) c.detail << "(l,p) in {(5,2),(5,3),(7,2)}, all residues, to q^60";
    return c;
}

// criterion 13: rank of the weight-2 monomial matrix = dim M_2(Gamma_1(l))
Check c13() {
    Check c;
    auto index_gamma1 = [](long l) {
        long long idx = l * l;
        long m = l;
        for (long p = 2; p * p <= m; ++p)
            if (m % p == 0) {
                idx = idx / (p * p) * (p * p - 1);
                while (m % p == 0) m /= p;
            }
        if (m > 1) idx = idx / (m * m) * (m * m - 1);
        return idx;
    };
    auto phi = [](long n) {
        long r = n;
        for (long p = 2; p * p <= n; ++p)
            if (n % p == 0) {
                r = r / p * (p - 1);
                while (n % p == 0) n /= p;
            }
        if (n > 1) r = r / n * (n - 1);
        return r;
    };
    for (long l : {11L, 13L}) {
        // independent dimension oracle: genus and cusp count of X_1(l)
        long long mu = index_gamma1(l) / 2;
        long long eps = 0;
        for (long d = 1; d <= l; ++d)
            if (l % d == 0) eps += phi(d) * phi(l / d);
        eps /= 2;
        // mu/12 - eps/2 is integral for these levels
        long long genus = 1 + mu / 12 - eps / 2;
        long long dim = genus - 1 + eps;

        long B = sturm_bound(l, 2);
        std::vector<QSeries> gens;
        for (long b = 1; b < l; ++b) gens.push_back(s_series(b, l, 1, B));
        std::vector<std::vector<Cyclotomic>> M;
        for (long a = 1; a < l; ++a)
            for (long b = a; b < l; ++b) {
                QSeries prod = gens[size_t(a - 1)] * gens[size_t(b - 1)];
                std::vector<Cyclotomic> row;
                for (long d = 0; d <= B; ++d) row.push_back(prod.coefficient(d));
                M.push_back(std::move(row));
            }
        size_t rank = cyc_rank(std::move(M));
        if (static_cast<long long>(rank) != dim)
            c.fail("rank " + std::to_string(rank) + " != dim " + std::to_string(dim) +
                   " at l=" + std::to_string(l));
        else
            c.detail << "l=" << l << ": rank=dim=" << dim << "  ";
    }
    return c;
}

// criterion 14: certificates validate, tampering is detected
Check c14() {
    Check c;
    struct Case {
        Fan fan;
        long l;
        std::vector<long long> v;
        long prec;
    };
    std::vector<Case> cases{{p1(), 5, {1, 1}, 40},
                            {p2(), 5, {1, 2, 3}, 20},
                            {hirzebruch1(), 7, {1, 2, 3, 4}, 20}};
    for (const auto& cs : cases) {
        if (!c.pass) break;
        DegreeFunction deg(cs.fan, cs.l, cs.v);
        Json cert;
        toric_form_lattice_sum(deg, cs.prec, &cert);
        std::string why;
        if (!check_truncation_certificate(cs.fan, cert, &why)) {
            c.fail("valid certificate rejected: " + why);
            break;
        }
        Json bad = cert;
        bad["regions"][0]["bounds"][0] = bad["regions"][0]["bounds"][0].get<long long>() + 1;
        if (check_truncation_certificate(cs.fan, bad, &why)) {
            c.fail("tampered bound accepted");
            break;
        }
        bad = cert;
        bad["radius"] = 0;
        if (check_truncation_certificate(cs.fan, bad, &why)) {
            c.fail("tampered radius accepted");
            break;
        }
    }
    if (c.pass) c.detail << "3 fans: emitted certificates validate, tampered ones fail";
    return c;
}

// criterion 15: U_5 image at level 5 stays in the ring
Check c15() {
    Check c;
    DegreeFunction deg(p1(), 5, {1, 1});
    long B = sturm_bound(5, 1);
    QSeries f = toric_form_lattice_sum(deg, 5 * B);
    QSeries u5 = u_p(f, 5);
    try {
        GeneratorPoly g = express_in_generators(u5, 1, 5);
        if (!equal_to(evaluate(g, B), u5, B)) c.fail("expressed series disagrees");
    } catch (const NotInRing&) {
        c.fail("membership solve reported NotInRing");
    }
    if (c.pass) c.detail << "U_5 image of f(P1, 1/5) expressed at level 5";
    return c;
}

}  // namespace

CheckResult run_criterion(int id) {
    static const struct {
        const char* name;
        Check (*fn)();
    } table[criteria_count] = {
        {"P1 identity f = -2 s^(1)", c1},
        {"P2 against the explicit double sum", c2},
        {"cross-pipeline agreement", c3},
        {"stellar subdivision invariance", c4},
        {"product rule", c5},
        {"Hecke sublattice identity", c6},
        {"weight-1 T_p relation", c7},
        {"zero-sum relation coefficients vanish", c8},
        {"reductions to the s^(1) ring", c9},
        {"Eisenstein proportionality", c10},
        {"Fricke DFT versus direct expansion", c11},
        {"level raising", c12},
        {"weight-2 rank equals dimension oracle", c13},
        {"termination certificates", c14},
        {"U_p stability for p | l", c15},
    };
    if (id < 1 || id > criteria_count) throw Error("unknown criterion id");
    auto t0 = std::chrono::steady_clock::now();
    Check c = table[id - 1].fn();
    CheckResult r;
    r.id = id;
    r.name = table[id - 1].name;
    r.pass = c.pass;
    r.detail = c.detail.str();
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::vector<CheckResult> run_all_criteria() {
    std::vector<CheckResult> out;
    for (int id = 1; id <= criteria_count; ++id) out.push_back(run_criterion(id));
    return out;
}

}  // namespace torimod

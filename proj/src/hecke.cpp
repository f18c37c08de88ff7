#include "torimod/hecke.hpp"

#include <numeric>

#include "torimod/errors.hpp"

namespace torimod {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

HeckeContext HeckeContext::make(long l, int weight, long p) {
    if (l < 1) throw Error("level must be positive");
    if (!is_prime(p)) throw Error("Hecke prime must be prime");
    return HeckeContext{l, weight, p, l % p == 0};
}

QSeries u_p(const QSeries& f, long p) {
    if (p < 1) throw Error("p must be positive");
    return f.pick_multiples(unsigned(p));
}

QSeries v_p(const QSeries& f, long p) {
    if (p < 1) throw Error("p must be positive");
    return f.substitute_power(unsigned(p));
}

GeneratorPoly diamond(const GeneratorPoly& g, long p) {
    if (std::gcd(p, g.l) != 1) throw NotCoprime();
    GeneratorPoly out;
    out.l = g.l;
    out.weight = g.weight;
    for (const auto& [mono, coeff] : g.terms) {
        GeneratorMonomial m2;
        for (const GeneratorSymbol& sym : mono) {
            if (sym.kind == GeneratorSymbol::Kind::S)
                m2.push_back(GeneratorSymbol::s(p * sym.a, g.l, sym.k));
            else
                m2.push_back(sym);
        }
        out.add_term(std::move(m2), coeff);
    }
    return out;
}

namespace {

long long ipow(long p, int e) {
    long long r = 1;
    while (e-- > 0) r *= p;
    return r;
}

}  // namespace

QSeries t_p(const GeneratorPoly& g, long p, int weight, long prec) {
    if (weight != g.weight || weight < 1) throw WrongWeight();
    if (std::gcd(p, g.l) != 1) throw NotCoprime();
    QSeries up = u_p(evaluate(g, prec * p), p);
    QSeries vp = v_p(evaluate(diamond(g, p), prec), p);
    return (up + vp * rat(ipow(p, weight - 1))).truncate(prec);
}

QSeries sublattice_side(const DegreeFunction& deg, long p, long prec) {
    long l = deg.level();
    if (std::gcd(p, l) != 1) throw NotCoprime();
    int r = deg.fan().rank();
    const Fan& fan = deg.fan();
    std::vector<std::vector<int>> cone_lists;
    for (const Cone& c : fan.max_cones()) cone_lists.push_back(c.rays);

    QSeries total(unsigned(l), prec);
    for (const RatMat& B : superlattices(r, p)) {
        auto Binv = rat_inverse(B);
        if (!Binv) throw Error("superlattice basis is singular");
        std::vector<LatticeVector> new_rays;
        std::vector<long long> new_values;
        for (size_t i = 0; i < fan.rays().size(); ++i) {
            const LatticeVector& d = fan.ray(int(i));
            LatticeVector y(size_t(r), 0);
            for (int j = 0; j < r; ++j) {
                Rational v(0);
                for (int k = 0; k < r; ++k) v += rat(d[size_t(k)]) * (*Binv)[size_t(k)][size_t(j)];
                v.canonicalize();
                if (v.get_den() != 1) throw Error("ray does not lie in the superlattice");
                y[size_t(j)] = v.get_num().get_si();
            }
            LatticeVector u = primitive(y);
            long long content = 0;
            for (int j = 0; j < r; ++j)
                if (u[size_t(j)] != 0) {
                    content = y[size_t(j)] / u[size_t(j)];
                    break;
                }
            new_rays.push_back(std::move(u));
            new_values.push_back(p * deg.value(int(i)) / content);
        }
        DegreeFunction ds(Fan(r, std::move(new_rays), cone_lists), l, std::move(new_values));
        total += toric_form_lattice_sum(ds, prec);
    }

    long long corr = (p - ipow(p, r - 1)) / (p - 1);
    if (corr != 0) total += toric_form_lattice_sum(deg, prec) * rat(corr);
    return total;
}

GeneratorPoly fricke_s1(long a, long l) {
    if (l <= 4) throw SmallLevel();
    if (a % l == 0) throw BadResidue();
    GeneratorPoly out;
    out.l = l;
    out.weight = 1;
    for (long j = 1; j < l; ++j)
        out.add_term({GeneratorSymbol::s(j, l, 1)},
                     Cyclotomic::zeta_power(unsigned(l), -j * a) * Rational(1, l));
    return out;
}

QSeries fricke_s1_direct(long a, long l, long prec) {
    if (l <= 4) throw SmallLevel();
    if (a % l == 0) throw BadResidue();
    a = ((a % l) + l) % l;
    std::vector<Rational> c(size_t(prec + 1), Rational(0));
    c[0] = rat(a, l) - rat(1, 2);
    // -sum_{n>=0} q^{a+nl}/(1-q^{a+nl})
    for (long long e = a; e <= prec; e += l)
        for (long long x = e; x <= prec; x += e) c[size_t(x)] -= 1;
    // +sum_{n>=1} q^{-a+nl}/(1-q^{-a+nl})
    for (long long e = l - a; e <= prec; e += l)
        for (long long x = e; x <= prec; x += e) c[size_t(x)] += 1;
    std::vector<Cyclotomic> coeffs;
    for (const auto& v : c) coeffs.push_back(Cyclotomic(v, unsigned(l)));
    return QSeries(unsigned(l), 0, prec, std::move(coeffs));
}

GeneratorPoly level_raise(const GeneratorPoly& g, long p) {
    if (!is_prime(p)) throw Error("p must be prime");
    if (g.weight == 0) {
        GeneratorPoly out = g;
        out.l = g.l * p;
        return out;
    }
    long pl = g.l * p;
    long B = sturm_bound(pl, g.weight);
    QSeries lifted = v_p(evaluate(g, B), p).truncate(B).embed(unsigned(pl));
    return express_in_generators(lifted, g.weight, pl);
}

}  // namespace torimod

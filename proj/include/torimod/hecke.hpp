#ifndef TORIMOD_HECKE_HPP
#define TORIMOD_HECKE_HPP

#include "torimod/toric_form.hpp"

namespace torimod {

// Which operator set applies at (l, weight, p): T_p = U_p + p^{w-1} e_p V_p
// when p does not divide l, U_p alone when it does.
struct HeckeContext {
    long l;
    int weight;
    long p;
    bool p_divides_l;

    static HeckeContext make(long l, int weight, long p);  // rejects composite p
};

bool is_prime(long p);

// f|U_p: coefficient of q^n in the output is a_{np}; precision floor-divides.
QSeries u_p(const QSeries& f, long p);

// f|V_p: q -> q^p.
QSeries v_p(const QSeries& f, long p);

// diamond operator e_p on generator coordinates: s_{a/l} -> s_{pa mod l / l},
// rhat symbols fixed. Throws NotCoprime.
GeneratorPoly diamond(const GeneratorPoly& g, long p);

// g|T_p as a q-expansion to q^prec. weight must match g and be >= 1
// (WrongWeight), gcd(p, l) = 1 (NotCoprime).
QSeries t_p(const GeneratorPoly& g, long p, int weight, long prec);

// Right side of the sublattice identity: sum of f_{S, p deg} over the
// superlattices N in S in (1/p)N of index p^{r-1}, plus the correction
// ((p - p^{r-1})/(p - 1)) f_{N, deg}.
QSeries sublattice_side(const DegreeFunction& deg, long p, long prec);

// Weight-1 Fricke image of s_{a/l}: (1/l) sum_j zeta^{-ja} s_{j/l}.
// Throws SmallLevel for l <= 4, BadResidue when l | a.
GeneratorPoly fricke_s1(long a, long l);

// Direct expansion of the Fricke image from its lattice description:
// (a/l - 1/2) - sum_{n>=0} q^{a+nl}/(1-q^{a+nl})
//             + sum_{n>=1} q^{-a+nl}/(1-q^{-a+nl}),
// used as the independent oracle for fricke_s1.
QSeries fricke_s1_direct(long a, long l, long prec);

// g(p tau) re-expressed in generators at level p*l via V_p and membership
// solving; NotInRing propagation would contradict the level-raising theorem.
GeneratorPoly level_raise(const GeneratorPoly& g, long p);

}  // namespace torimod

#endif

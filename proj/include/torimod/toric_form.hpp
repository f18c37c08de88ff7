#ifndef TORIMOD_TORIC_FORM_HPP
#define TORIMOD_TORIC_FORM_HPP

#include "torimod/degree.hpp"
#include "torimod/generators.hpp"
#include "torimod/json_io.hpp"
#include "torimod/qseries.hpp"

namespace torimod {

// Analytic continuation of the sum over one cone: a rational function
//     f_C(q, m) = sum_{p in Pi(C)} zeta^{res_p} q^{m.p}
//                 / prod_i (1 - zeta^{res_i} q^{m.d_i}),
// with Pi(C) the half-open parallelepiped of the cone's rays and the
// residues the scaled degrees l*deg(.). Exponents m.d_i of any sign are
// allowed; expand() rewrites negative-exponent factors before the
// geometric expansion, so the result is a Laurent series.
struct ConeRational {
    Cone cone;
    LatticeVector m;
    long l = 1;
    std::vector<std::pair<long, long long>> numerator;    // (residue, m.p)
    std::vector<std::pair<long, long long>> denominator;  // (residue, m.d_i)

    // Laurent expansion to q^prec. Throws PoleOnContinuation when a factor
    // with exponent zero also has residue zero; valid degree data rules
    // this out.
    QSeries expand(long prec) const;
};

ConeRational cone_rational(const DegreeFunction& deg, const Cone& cone,
                           const LatticeVector& m);

// sum_C (-1)^codim f_C(q, m) over every cone of the fan, zero cone included.
// Requires a complete simplicial fan. Throws NegativeValuation if the result
// has a negative q-order, which would indicate a bug, not bad input.
QSeries r_of_m(const DegreeFunction& deg, const LatticeVector& m, long prec);

struct SignRegion {
    std::vector<int> signs;  // one of +-1 per ray
    std::vector<LatticeVector> extreme_rays;
    std::vector<long long> bound_values;  // L at each extreme ray, all > 0
};

// Termination data for the sum over m: a per-m lower bound L(m) on the
// q-order of r_of_m, built from the interior lattice points of the hull of
// the subset sums of the rays, together with a finite enumeration radius.
class TruncationBound {
public:
    explicit TruncationBound(const Fan& fan);

    // L(m) = min_{n in S} m.n - sum_{i: m.d_i < 0} m.d_i
    long long bound(const LatticeVector& m) const;
    // sup-norm radius outside of which L(m) > prec is guaranteed
    long long radius(long prec) const;
    // all integer m with L(m) <= prec
    std::vector<LatticeVector> enumerate(long prec) const;
    Json certificate(long prec) const;

    const std::vector<LatticeVector>& interior_points() const { return interior_; }
    const std::vector<SignRegion>& regions() const { return regions_; }

private:
    int rank_;
    std::vector<LatticeVector> rays_;
    std::vector<LatticeVector> interior_;
    std::vector<SignRegion> regions_;
};

// Re-derives every number in a truncation certificate from the fan alone,
// through a separate code path (facet-based interiority test, direct
// re-enumeration). Returns false and fills *why on any mismatch.
bool check_truncation_certificate(const Fan& fan, const Json& cert,
                                  std::string* why = nullptr);

// Pipeline A: f_{N,deg} as the sum of r_of_m over the finite m-set given by
// TruncationBound. Non-simplicial complete fans are triangulated first.
// When certificate is non-null it receives the termination certificate.
QSeries toric_form_lattice_sum(const DegreeFunction& deg, long prec,
                               Json* certificate = nullptr);

// Pipeline B: expand prod_i exp(sum_{k=1}^r ((-1)^k/k!) D_i^k s^{(k)}_{a_i})
// modulo divisor degree > r and integrate the top part against the
// intersection ring. Requires a smooth complete fan.
QSeries toric_form_cohomological(const DegreeFunction& deg, long prec);

// Exact linear solve of f against the weight-w monomials in the s^{(1)}_{b/l};
// throws NotInRing when inconsistent, InsufficientPrecision when f is not
// known through the matching bound, SmallLevel for l < 5.
GeneratorPoly express_in_generators(const QSeries& f, int weight, long l);

}  // namespace torimod

#endif

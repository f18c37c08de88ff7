#ifndef TORIMOD_GENERATORS_HPP
#define TORIMOD_GENERATORS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "torimod/qseries.hpp"

namespace torimod {

// A single generator series: s_{a/l}^(k) (kind S) or the normalized
// Eisenstein-type series rhat^(k) (kind R, even k). The weight is k.
struct GeneratorSymbol {
    enum class Kind { S, R };
    Kind kind;
    long a;  // S only: residue, normalized to 1..l-1
    int k;

    static GeneratorSymbol s(long a, long l, int k);  // BadResidue when l | a
    static GeneratorSymbol r(int k);                  // OddOrder on odd k

    friend bool operator<(const GeneratorSymbol& x, const GeneratorSymbol& y) {
        if (x.kind != y.kind) return x.kind < y.kind;
        if (x.a != y.a) return x.a < y.a;
        return x.k < y.k;
    }
    friend bool operator==(const GeneratorSymbol& x, const GeneratorSymbol& y) {
        return x.kind == y.kind && x.a == y.a && x.k == y.k;
    }
};

// product of symbols, kept sorted
using GeneratorMonomial = std::vector<GeneratorSymbol>;

int monomial_weight(const GeneratorMonomial& m);

// Homogeneous polynomial in generator symbols with coefficients in Q(zeta_l).
struct GeneratorPoly {
    long l = 1;
    int weight = 0;
    std::map<GeneratorMonomial, Cyclotomic> terms;

    void add_term(GeneratorMonomial mono, Cyclotomic coeff);  // checks weight
    bool is_zero() const { return terms.empty(); }
};

// [SL_2(Z) : Gamma_1(l)] based matching bound for weight-w forms.
long sturm_bound(long l, int weight);

// Expansion cache on disk; empty string disables. Defaults to $TORIMOD_CACHE.
void set_cache_directory(std::string dir);
std::string cache_directory();

QSeries s_series(long a, long l, int k, long prec);
QSeries r_series(int k, long prec);  // rhat^(k) = (2 pi i)^{-k} r^(k), level 1

// Coefficient of t^N (N = #residues - 1) in exp(sum_{k>=1} t^k/k! sum_j
// s_{a_j/l}^(k)); identically zero for zero-sum residue tuples.
QSeries relation_coefficient(long l, const std::vector<long>& residues, long prec);

// Rewrite a generator symbol as a weight-k polynomial in the s^(1) basis.
GeneratorPoly reduce_to_s1(const GeneratorSymbol& sym, long l);

QSeries evaluate(const GeneratorSymbol& sym, long l, long prec);
QSeries evaluate(const GeneratorPoly& g, long prec);

// Linear algebra over Q(zeta): any solution of A x = b with free variables
// set to zero; nullopt when inconsistent.
std::optional<std::vector<Cyclotomic>> cyc_solve_any(std::vector<std::vector<Cyclotomic>> A,
                                                     std::vector<Cyclotomic> b);
size_t cyc_rank(std::vector<std::vector<Cyclotomic>> A);

}  // namespace torimod

#endif

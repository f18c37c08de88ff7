#ifndef TORIMOD_LATTICE_HPP
#define TORIMOD_LATTICE_HPP

#include <optional>
#include <vector>

#include "torimod/cyclotomic.hpp"

namespace torimod {

// Lattice points of N = Z^r and dual vectors of M share this representation;
// the pairing is the standard dot product.
using LatticeVector = std::vector<long long>;

using IntMat = std::vector<std::vector<Integer>>;  // row-major
using RatMat = std::vector<std::vector<Rational>>;

// gmpxx has no long long constructors; lattice entries stay in long range
inline Rational rat(long long n, long long d = 1) {
    Rational q(static_cast<long>(n), static_cast<long>(d));
    q.canonicalize();
    return q;
}
inline Integer integer(long long n) { return Integer(static_cast<long>(n)); }

long long dot(const LatticeVector& m, const LatticeVector& n);
LatticeVector primitive(LatticeVector v);  // divide by the gcd of the entries
bool is_zero_vector(const LatticeVector& v);

// U * A * V = S with U, V unimodular and S in Smith normal form
// (diagonal, each divisor dividing the next).
struct SmithNF {
    IntMat U, S, V;
};
SmithNF smith_normal_form(IntMat A);

IntMat mat_mul(const IntMat& A, const IntMat& B);
IntMat identity_mat(size_t n);
// Inverse of a unimodular integer matrix (det +-1).
IntMat unimodular_inverse(const IntMat& A);
Integer int_det(IntMat A);  // Bareiss, exact

// Exact rational linear algebra (dense Gaussian elimination).
size_t rat_rank(RatMat A);
// Solves A x = b for square nonsingular A; nullopt if singular.
std::optional<std::vector<Rational>> rat_solve(RatMat A, std::vector<Rational> b);
std::optional<RatMat> rat_inverse(RatMat A);
// Solves a rectangular A x = b with independent columns: unique solution or
// nullopt when inconsistent. Throws on dependent columns.
std::optional<std::vector<Rational>> rat_solve_rect(RatMat A, std::vector<Rational> b);

}  // namespace torimod

#endif

#ifndef TORIMOD_CYCLOTOMIC_HPP
#define TORIMOD_CYCLOTOMIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "torimod/errors.hpp"

namespace torimod {

using Rational = mpq_class;
using Integer = mpz_class;

unsigned euler_phi(unsigned n);

// Coefficients of the L-th cyclotomic polynomial, low degree first (monic, degree phi(L)).
// Computed once per L by dividing x^L - 1 by Phi_d for the proper divisors d; cached.
const std::vector<Integer>& cyclotomic_polynomial(unsigned L);

// Element of Q(zeta_L) = Q[x]/(Phi_L(x)), x -> e^{2 pi i / L}.
// Stored as phi(L) rational coordinates in the power basis 1, x, ..., x^{phi(L)-1}.
class Cyclotomic {
  public:
    Cyclotomic() : level_(1), coeffs_(1, Rational(0)) {}
    explicit Cyclotomic(const Rational& r, unsigned level = 1)
        : level_(level), coeffs_(euler_phi(level), Rational(0)) {
        coeffs_[0] = r;
    }
    // Reduces an arbitrary polynomial in zeta_L modulo Phi_L.
    Cyclotomic(unsigned level, std::vector<Rational> poly);

    static Cyclotomic zero(unsigned level) { return Cyclotomic(Rational(0), level); }
    static Cyclotomic one(unsigned level) { return Cyclotomic(Rational(1), level); }
    // zeta_L^k (k may be negative).
    static Cyclotomic zeta_power(unsigned level, long k);

    unsigned level() const { return level_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    // Throws Error if the element is not rational.
    Rational rational_value() const;

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Rational& r);

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Rational& r) { return a *= r; }
    friend Cyclotomic operator*(const Rational& r, Cyclotomic a) { return a *= r; }

    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    // Exact multiplicative inverse via the extended Euclidean algorithm against Phi_L.
    // Throws DivisionByZero on zero.
    Cyclotomic inverse() const;

    // Image under zeta_L -> zeta_{L'}^{L'/L}; requires L | L'.
    Cyclotomic embed(unsigned new_level) const;

  private:
    unsigned level_;
    std::vector<Rational> coeffs_;  // size phi(level_)
};

inline Cyclotomic cyc_make(unsigned L, std::vector<Rational> poly) {
    return Cyclotomic(L, std::move(poly));
}
inline Cyclotomic cyc_inv(const Cyclotomic& x) { return x.inverse(); }
inline Cyclotomic cyc_embed(const Cyclotomic& x, unsigned new_level) { return x.embed(new_level); }

}  // namespace torimod

#endif

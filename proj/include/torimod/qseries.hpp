#ifndef TORIMOD_QSERIES_HPP
#define TORIMOD_QSERIES_HPP

#include <vector>

#include "torimod/cyclotomic.hpp"

namespace torimod {

// Three-valued equality verdict: q-expansions are only comparable up to their
// tracked precision, and callers must handle the undecidable case explicitly.
enum class SeriesVerdict { EqualToPrecision, Unequal, InsufficientPrecision };

// Truncated Laurent series in q with coefficients in Q(zeta_L).
// Coefficients of q^n are known exactly for n <= prec(); coefficients below
// the storage base are exactly zero. Values are immutable after construction.
class QSeries {
  public:
    // Zero series known to precision prec.
    QSeries(unsigned level, long prec) : level_(level), base_(0), prec_(prec) {}
    QSeries(unsigned level, long base, long prec, std::vector<Cyclotomic> coeffs);

    static QSeries constant(const Cyclotomic& c, long prec) {
        return QSeries(c.level(), 0, prec, {c});
    }
    // c * q^e
    static QSeries monomial(const Cyclotomic& c, long e, long prec) {
        return QSeries(c.level(), e, prec, {c});
    }

    unsigned level() const { return level_; }
    long precision() const { return prec_; }
    // Exponent of the first (possibly zero) stored coefficient.
    long base() const { return base_; }
    // Exponent of the first nonzero known coefficient; prec()+1 if none.
    long order() const;
    bool is_zero_to_precision() const { return order() > prec_; }

    // Coefficient of q^n; throws if n > prec().
    const Cyclotomic& coefficient(long n) const;

    QSeries operator-() const;
    QSeries& operator+=(const QSeries& o) { return *this = *this + o; }
    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    QSeries operator*(const Cyclotomic& c) const;
    QSeries operator*(const Rational& r) const;

    // Inverse of a unit (nonzero leading coefficient); throws NotAUnit.
    QSeries inverse() const;

    // q -> q^p. Precision becomes p*prec + p - 1: intermediate exponents are known zeros.
    QSeries substitute_power(unsigned p) const;
    // Coefficient reindexing n -> n/p (keeps only multiples); precision divides by p.
    QSeries pick_multiples(unsigned p) const;

    QSeries truncate(long new_prec) const;
    QSeries embed(unsigned new_level) const;

    friend SeriesVerdict compare(const QSeries& a, const QSeries& b);
    // Verdict decided on coefficients q^n, n <= required; InsufficientPrecision
    // when either operand is not known that far.
    friend SeriesVerdict compare(const QSeries& a, const QSeries& b, long required);

  private:
    unsigned level_;
    long base_;
    long prec_;
    std::vector<Cyclotomic> coeffs_;  // coeff of q^(base_+i); size <= prec_-base_+1
    static const Cyclotomic& zero_of(unsigned level);
};

}  // namespace torimod

#endif

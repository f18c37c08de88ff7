#ifndef TORIMOD_FORMAL_SERIES_HPP
#define TORIMOD_FORMAL_SERIES_HPP

#include <vector>

#include "torimod/cyclotomic.hpp"
#include "torimod/qseries.hpp"

namespace torimod {

inline bool fs_is_zero(const Cyclotomic& c) { return c.is_zero(); }
inline Cyclotomic fs_one(const Cyclotomic& zero) { return Cyclotomic::one(zero.level()); }
inline bool fs_is_zero(const QSeries& s) { return s.is_zero_to_precision(); }
inline QSeries fs_one(const QSeries& z) {
    return QSeries::constant(Cyclotomic::one(z.level()), z.precision());
}

// Truncated power series in one auxiliary formal variable with coefficients in
// an exact ring T (Cyclotomic or QSeries). Order W means coefficients of
// w^0..w^W are stored; arithmetic truncates above W.
template <typename T>
class FormalSeries {
  public:
    FormalSeries(size_t order, T zero) : zero_(zero), coeffs_(order + 1, zero) {}

    size_t order() const { return coeffs_.size() - 1; }
    const T& operator[](size_t k) const { return coeffs_.at(k); }
    T& operator[](size_t k) { return coeffs_.at(k); }

    FormalSeries operator-() const {
        FormalSeries r(*this);
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    FormalSeries& operator+=(const FormalSeries& o) {
        for (size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
        return *this;
    }
    FormalSeries& operator-=(const FormalSeries& o) {
        for (size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
        return *this;
    }
    friend FormalSeries operator+(FormalSeries a, const FormalSeries& b) { return a += b; }
    friend FormalSeries operator-(FormalSeries a, const FormalSeries& b) { return a -= b; }

    friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) {
        FormalSeries r(a.order(), a.zero_);
        for (size_t i = 0; i <= a.order(); ++i) {
            if (fs_is_zero(a.coeffs_[i])) continue;
            for (size_t j = 0; i + j <= a.order(); ++j)
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return r;
    }

    FormalSeries operator*(const Rational& r) const {
        FormalSeries out(*this);
        for (auto& c : out.coeffs_) c = c * r;
        return out;
    }
    FormalSeries operator*(const T& c) const {
        FormalSeries out(*this);
        for (auto& x : out.coeffs_) x = x * c;
        return out;
    }

    FormalSeries derivative() const {
        FormalSeries r(order(), zero_);
        for (size_t k = 1; k <= order(); ++k)
            r.coeffs_[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
        return r;
    }

    const T& zero_prototype() const { return zero_; }

  private:
    T zero_;
    std::vector<T> coeffs_;
};

// log f for f with constant term 1: log(1+g) = sum (-1)^{k+1} g^k / k.
template <typename T>
FormalSeries<T> formal_log(const FormalSeries<T>& f) {
    T head = f[0] - fs_one(f.zero_prototype());
    if (!fs_is_zero(head)) throw LogOfNonUnit();
    FormalSeries<T> g = f;
    g[0] = f.zero_prototype();  // g = f - 1 (constant term exactly zero)
    FormalSeries<T> acc(f.order(), f.zero_prototype());
    FormalSeries<T> pw(f.order(), f.zero_prototype());
    pw[0] = fs_one(f.zero_prototype());
    for (size_t k = 1; k <= f.order(); ++k) {
        pw = pw * g;
        acc += pw * Rational(k % 2 == 1 ? 1 : -1, static_cast<unsigned long>(k));
    }
    return acc;
}

// exp g for g with constant term 0.
template <typename T>
FormalSeries<T> formal_exp(const FormalSeries<T>& g) {
    if (!fs_is_zero(g[0])) throw LogOfNonUnit();
    FormalSeries<T> acc(g.order(), g.zero_prototype());
    FormalSeries<T> term(g.order(), g.zero_prototype());
    term[0] = fs_one(g.zero_prototype());
    acc += term;
    Rational fact(1);
    for (size_t k = 1; k <= g.order(); ++k) {
        term = term * g;
        fact /= Rational(static_cast<long>(k));
        acc += term * fact;
    }
    return acc;
}

}  // namespace torimod

#endif

#include "torimod/qseries.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace torimod {

namespace {
std::map<unsigned, Cyclotomic> g_zeros;
std::mutex g_zeros_mutex;
}  // namespace

const Cyclotomic& QSeries::zero_of(unsigned level) {
    std::lock_guard<std::mutex> lock(g_zeros_mutex);
    auto it = g_zeros.find(level);
    if (it == g_zeros.end()) it = g_zeros.emplace(level, Cyclotomic::zero(level)).first;
    return it->second;
}

QSeries::QSeries(unsigned level, long base, long prec, std::vector<Cyclotomic> coeffs)
    : level_(level), base_(base), prec_(prec), coeffs_(std::move(coeffs)) {
    if (base_ + static_cast<long>(coeffs_.size()) - 1 > prec_)
        coeffs_.resize(static_cast<size_t>(prec_ - base_ + 1 > 0 ? prec_ - base_ + 1 : 0));
    // Drop leading zeros so base() stays a sharp support bound.
    size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
        base_ += static_cast<long>(lead);
    }
    if (coeffs_.empty()) base_ = 0;
}

long QSeries::order() const {
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return base_ + static_cast<long>(i);
    return prec_ + 1;
}

const Cyclotomic& QSeries::coefficient(long n) const {
    if (n > prec_) throw Error("coefficient index beyond tracked precision");
    if (n < base_ || n >= base_ + static_cast<long>(coeffs_.size())) return zero_of(level_);
    return coeffs_[static_cast<size_t>(n - base_)];
}

QSeries QSeries::operator-() const {
    std::vector<Cyclotomic> c;
    c.reserve(coeffs_.size());
    for (const auto& x : coeffs_) c.push_back(-x);
    return QSeries(level_, base_, prec_, std::move(c));
}

QSeries operator+(const QSeries& a, const QSeries& b) {
    if (a.level_ != b.level_) throw IncompatibleLevels(b.level_, a.level_);
    long prec = std::min(a.prec_, b.prec_);
    if (a.coeffs_.empty() && b.coeffs_.empty()) return QSeries(a.level_, prec);
    long base = std::min(a.coeffs_.empty() ? b.base_ : a.base_,
                         b.coeffs_.empty() ? a.base_ : b.base_);
    if (base > prec) return QSeries(a.level_, prec);
    std::vector<Cyclotomic> c(static_cast<size_t>(prec - base + 1), Cyclotomic::zero(a.level_));
    for (long n = base; n <= prec; ++n) {
        if (n >= a.base_ && n < a.base_ + static_cast<long>(a.coeffs_.size()))
            c[static_cast<size_t>(n - base)] += a.coeffs_[static_cast<size_t>(n - a.base_)];
        if (n >= b.base_ && n < b.base_ + static_cast<long>(b.coeffs_.size()))
            c[static_cast<size_t>(n - base)] += b.coeffs_[static_cast<size_t>(n - b.base_)];
    }
    return QSeries(a.level_, base, prec, std::move(c));
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

QSeries operator*(const QSeries& a, const QSeries& b) {
    if (a.level_ != b.level_) throw IncompatibleLevels(b.level_, a.level_);
    // Unknown coefficients of one factor start affecting the product above
    // prec + base of the other; take the pessimistic minimum.
    long prec = std::min(a.prec_ + b.base_, b.prec_ + a.base_);
    if (a.coeffs_.empty() || b.coeffs_.empty()) {
        // A factor that is identically zero on its known range: product is zero
        // wherever it is known at all.
        long p = std::min({a.prec_ + b.base_, b.prec_ + a.base_,
                           std::max(a.prec_, b.prec_)});
        if (a.coeffs_.empty() && b.coeffs_.empty()) p = std::max(a.prec_, b.prec_);
        return QSeries(a.level_, p);
    }
    long base = a.base_ + b.base_;
    if (base > prec) return QSeries(a.level_, prec);
    std::vector<Cyclotomic> c(static_cast<size_t>(prec - base + 1), Cyclotomic::zero(a.level_));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        long ea = a.base_ + static_cast<long>(i);
        for (size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            long n = ea + b.base_ + static_cast<long>(j);
            if (n > prec) break;
            c[static_cast<size_t>(n - base)] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return QSeries(a.level_, base, prec, std::move(c));
}

QSeries QSeries::operator*(const Cyclotomic& x) const {
    std::vector<Cyclotomic> c;
    c.reserve(coeffs_.size());
    for (const auto& a : coeffs_) c.push_back(a * x);
    return QSeries(level_, base_, prec_, std::move(c));
}

QSeries QSeries::operator*(const Rational& r) const {
    std::vector<Cyclotomic> c;
    c.reserve(coeffs_.size());
    for (const auto& a : coeffs_) c.push_back(a * r);
    return QSeries(level_, base_, prec_, std::move(c));
}

QSeries QSeries::inverse() const {
    long v = order();
    if (v > prec_) throw NotAUnit();
    const size_t n_known = static_cast<size_t>(prec_ - v + 1);
    Cyclotomic lead_inv = coefficient(v).inverse();
    std::vector<Cyclotomic> b(n_known, Cyclotomic::zero(level_));
    b[0] = lead_inv;
    for (size_t n = 1; n < n_known; ++n) {
        Cyclotomic acc = Cyclotomic::zero(level_);
        for (size_t k = 1; k <= n; ++k) {
            const Cyclotomic& ak = coefficient(v + static_cast<long>(k));
            if (!ak.is_zero() && !b[n - k].is_zero()) acc += ak * b[n - k];
        }
        b[n] = -(lead_inv * acc);
    }
    // Relative precision is preserved: prec - v known coefficients from order -v.
    return QSeries(level_, -v, prec_ - 2 * v, std::move(b));
}

QSeries QSeries::substitute_power(unsigned p) const {
    long prec = prec_ * static_cast<long>(p) + static_cast<long>(p) - 1;
    if (coeffs_.empty()) return QSeries(level_, prec);
    long base = base_ * static_cast<long>(p);
    std::vector<Cyclotomic> c(coeffs_.size() * p - (p - 1), Cyclotomic::zero(level_));
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i * p] = coeffs_[i];
    return QSeries(level_, base, prec, std::move(c));
}

QSeries QSeries::pick_multiples(unsigned p) const {
    long prec = prec_ >= 0 ? prec_ / static_cast<long>(p)
                           : -((-prec_ + static_cast<long>(p) - 1) / static_cast<long>(p));
    std::vector<Cyclotomic> c;
    long first = base_ >= 0 ? (base_ + static_cast<long>(p) - 1) / static_cast<long>(p)
                            : base_ / static_cast<long>(p);
    for (long n = first; n <= prec; ++n) {
        long src = n * static_cast<long>(p);
        if (src > prec_) break;
        c.push_back(coefficient(src));
    }
    return QSeries(level_, first, prec, std::move(c));
}

QSeries QSeries::truncate(long new_prec) const {
    if (new_prec >= prec_) return *this;
    std::vector<Cyclotomic> c;
    for (long n = base_; n <= new_prec && n < base_ + static_cast<long>(coeffs_.size()); ++n)
        c.push_back(coeffs_[static_cast<size_t>(n - base_)]);
    return QSeries(level_, base_, new_prec, std::move(c));
}

QSeries QSeries::embed(unsigned new_level) const {
    std::vector<Cyclotomic> c;
    c.reserve(coeffs_.size());
    for (const auto& a : coeffs_) c.push_back(a.embed(new_level));
    return QSeries(new_level, base_, prec_, std::move(c));
}

SeriesVerdict compare(const QSeries& a, const QSeries& b) {
    return compare(a, b, std::min(a.precision(), b.precision()));
}

SeriesVerdict compare(const QSeries& a, const QSeries& b, long required) {
    if (required > std::min(a.precision(), b.precision()))
        return SeriesVerdict::InsufficientPrecision;
    long lo = std::min(a.base(), b.base());
    for (long n = lo; n <= required; ++n) {
        if (a.coefficient(n) != b.coefficient(n)) return SeriesVerdict::Unequal;
    }
    return SeriesVerdict::EqualToPrecision;
}

}  // namespace torimod

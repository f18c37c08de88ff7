#include "torimod/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>

namespace torimod {

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

// Exact division of integer polynomials, remainder must be zero.
std::vector<Integer> poly_div_exact(std::vector<Integer> num, const std::vector<Integer>& den) {
    std::vector<Integer> quot(num.size() - den.size() + 1, Integer(0));
    for (size_t i = quot.size(); i-- > 0;) {
        Integer c = num[i + den.size() - 1] / den.back();
        quot[i] = c;
        if (c != 0) {
            for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
        }
    }
    for (const auto& c : num)
        if (c != 0) throw Error("cyclotomic polynomial division left a remainder");
    return quot;
}

std::map<unsigned, std::vector<Integer>> g_phi_cache;
std::mutex g_phi_mutex;

std::vector<Integer> compute_cyclotomic(unsigned L) {
    // x^L - 1 divided by Phi_d for every proper divisor d of L.
    std::vector<Integer> poly(L + 1, Integer(0));
    poly[0] = -1;
    poly[L] = 1;
    for (unsigned d = 1; d < L; ++d) {
        if (L % d == 0) poly = poly_div_exact(std::move(poly), cyclotomic_polynomial(d));
    }
    return poly;
}

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(unsigned L) {
    if (L == 0) throw Error("cyclotomic level must be positive");
    {
        std::lock_guard<std::mutex> lock(g_phi_mutex);
        auto it = g_phi_cache.find(L);
        if (it != g_phi_cache.end()) return it->second;
    }
    auto poly = compute_cyclotomic(L);
    std::lock_guard<std::mutex> lock(g_phi_mutex);
    return g_phi_cache.emplace(L, std::move(poly)).first->second;
}

Cyclotomic::Cyclotomic(unsigned level, std::vector<Rational> poly) : level_(level) {
    if (level == 0) throw Error("cyclotomic level must be positive");
    const auto& phi = cyclotomic_polynomial(level);
    const size_t deg = phi.size() - 1;  // = euler_phi(level)
    // Reduce modulo the monic Phi_L by long division.
    for (size_t i = poly.size(); i-- > deg;) {
        Rational c = poly[i];
        if (c != 0) {
            for (size_t j = 0; j < deg; ++j) poly[i - deg + j] -= c * Rational(phi[j]);
        }
        poly[i] = 0;
    }
    poly.resize(deg, Rational(0));
    for (auto& c : poly) c.canonicalize();
    coeffs_ = std::move(poly);
}

Cyclotomic Cyclotomic::zeta_power(unsigned level, long k) {
    long e = k % static_cast<long>(level);
    if (e < 0) e += level;
    std::vector<Rational> poly(static_cast<size_t>(e) + 1, Rational(0));
    poly[static_cast<size_t>(e)] = 1;
    return Cyclotomic(level, std::move(poly));
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rational Cyclotomic::rational_value() const {
    if (!is_rational()) throw Error("cyclotomic element is not rational");
    return coeffs_[0];
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    if (level_ != o.level_) throw IncompatibleLevels(o.level_, level_);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    if (level_ != o.level_) throw IncompatibleLevels(o.level_, level_);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    if (level_ != o.level_) throw IncompatibleLevels(o.level_, level_);
    const size_t n = coeffs_.size();
    std::vector<Rational> prod(2 * n - 1, Rational(0));
    for (size_t i = 0; i < n; ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < n; ++j) {
            if (o.coeffs_[j] == 0) continue;
            prod[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    *this = Cyclotomic(level_, std::move(prod));
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& r) {
    for (auto& c : coeffs_) c *= r;
    return *this;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    if (level_ == o.level_) return coeffs_ == o.coeffs_;
    // Compare across levels through the common field.
    unsigned common = std::lcm(level_, o.level_);
    return embed(common).coeffs_ == o.embed(common).coeffs_;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (is_rational()) return Cyclotomic(Rational(1) / coeffs_[0], level_);
    // Extended Euclid in Q[x]: u * this + v * Phi_L = gcd = nonzero rational.
    const auto& phi_int = cyclotomic_polynomial(level_);
    std::vector<Rational> r0(phi_int.begin(), phi_int.end());
    std::vector<Rational> r1 = coeffs_;
    while (!r1.empty() && r1.back() == 0) r1.pop_back();
    std::vector<Rational> u0{Rational(0)}, u1{Rational(1)};

    auto trim = [](std::vector<Rational>& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    };
    while (true) {
        // r0 = q * r1 + r2
        std::vector<Rational> q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, Rational(0));
        std::vector<Rational> r2 = r0;
        for (size_t i = q.size(); i-- > 0;) {
            Rational c = r2[i + r1.size() - 1] / r1.back();
            q[i] = c;
            if (c != 0)
                for (size_t j = 0; j < r1.size(); ++j) r2[i + j] -= c * r1[j];
        }
        trim(r2);
        // u2 = u0 - q * u1
        std::vector<Rational> u2 = u0;
        u2.resize(std::max(u0.size(), q.empty() ? 0 : q.size() + u1.size() - 1), Rational(0));
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < u1.size(); ++j) u2[i + j] -= q[i] * u1[j];
        }
        trim(u2);
        if (r2.empty()) {
            // r1 is the gcd; Phi_L is irreducible so r1 must be a nonzero constant.
            if (r1.size() != 1) throw Error("extended Euclid against Phi_L found a nontrivial gcd");
            Rational scale = Rational(1) / r1[0];
            for (auto& c : u1) c *= scale;
            return Cyclotomic(level_, std::move(u1));
        }
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
}

Cyclotomic Cyclotomic::embed(unsigned new_level) const {
    if (new_level % level_ != 0) throw IncompatibleLevels(level_, new_level);
    if (new_level == level_) return *this;
    const unsigned scale = new_level / level_;
    std::vector<Rational> poly((coeffs_.size() - 1) * scale + 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) poly[i * scale] = coeffs_[i];
    return Cyclotomic(new_level, std::move(poly));
}

}  // namespace torimod

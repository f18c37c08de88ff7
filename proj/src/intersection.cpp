#include "torimod/intersection.hpp"

#include <algorithm>

#include "torimod/errors.hpp"

namespace torimod {

namespace {
struct Cycle {};  // internal signal: reduction revisited an active monomial
}

IntersectionRing::IntersectionRing(Fan fan) : fan_(std::move(fan)) {
    if (!fan_.is_smooth()) throw NotSmooth();
    if (!fan_.is_complete()) throw Error("intersection ring requires a complete fan");

    // dual basis per maximal cone: duals_[c][t] . ray(c.rays[s]) = [t == s]
    for (const auto& c : fan_.max_cones()) {
        auto inv = rat_inverse(fan_.ray_matrix(c));
        if (!inv) throw NotSmooth();
        std::vector<LatticeVector> dual;
        for (size_t t = 0; t < c.rays.size(); ++t) {
            LatticeVector m(fan_.rank());
            for (int i = 0; i < fan_.rank(); ++i) {
                Rational& x = (*inv)[t][i];
                if (x.get_den() != 1) throw NotSmooth();
                m[i] = static_cast<long long>(mpz_get_si(x.get_num_mpz_t()));
            }
            dual.push_back(std::move(m));
        }
        duals_.push_back(std::move(dual));
    }
}

Rational IntersectionRing::integrate_monomial(const std::vector<int>& exponents) const {
    if (exponents.size() != fan_.rays().size())
        throw Error("integrate_monomial: one exponent per ray expected");
    long total = 0;
    for (int e : exponents) {
        if (e < 0) throw Error("integrate_monomial: negative exponent");
        total += e;
    }
    if (total != fan_.rank()) throw WrongDegree();
    std::lock_guard<std::mutex> lock(mtx_);
    std::set<std::vector<int>> active;
    try {
        return eval(exponents, active);
    } catch (const Cycle&) {
        throw Error("integrate_monomial: all rewriting choices cycle");
    }
}

Rational IntersectionRing::eval(const std::vector<int>& exps,
                                std::set<std::vector<int>>& active) const {
    auto it = memo_.find(exps);
    if (it != memo_.end()) return it->second;
    if (active.count(exps)) throw Cycle{};

    size_t rep = exps.size();
    for (size_t j = 0; j < exps.size(); ++j)
        if (exps[j] >= 2) {
            rep = j;
            break;
        }

    if (rep == exps.size()) {
        // square-free: 1 when the support spans a cone of the fan, else 0
        std::vector<int> support;
        for (size_t j = 0; j < exps.size(); ++j)
            if (exps[j] == 1) support.push_back(static_cast<int>(j));
        Rational v(0);
        for (const auto& c : fan_.cones())
            if (c.rays == support) {
                v = 1;
                break;
            }
        memo_[exps] = v;
        return v;
    }

    active.insert(exps);
    const auto& maxc = fan_.max_cones();
    for (size_t ci = 0; ci < maxc.size(); ++ci) {
        const Cone& c = maxc[ci];
        auto pos = std::find(c.rays.begin(), c.rays.end(), static_cast<int>(rep));
        if (pos == c.rays.end()) continue;
        size_t t = pos - c.rays.begin();
        // relation with m . d_rep = -1:  D_rep = sum_{i not in c} -(mhat . d_i) D_i
        try {
            Rational acc(0);
            for (size_t i = 0; i < exps.size(); ++i) {
                if (std::find(c.rays.begin(), c.rays.end(), static_cast<int>(i)) != c.rays.end())
                    continue;
                long long coef = -dot(duals_[ci][t], fan_.ray(static_cast<int>(i)));
                if (coef == 0) continue;
                std::vector<int> next = exps;
                --next[rep];
                ++next[i];
                acc += rat(coef) * eval(next, active);
            }
            active.erase(exps);
            memo_[exps] = acc;
            return acc;
        } catch (const Cycle&) {
            // try the relation from another maximal cone containing the ray
        }
    }
    active.erase(exps);
    throw Cycle{};
}

}  // namespace torimod

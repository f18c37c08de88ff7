#ifndef TORIMOD_INTERSECTION_HPP
#define TORIMOD_INTERSECTION_HPP

#include <map>
#include <mutex>
#include <set>

#include "torimod/fan.hpp"

namespace torimod {

// Intersection numbers of toric divisors on the smooth complete variety of a
// fan. A monomial prod D_i^{e_i} with sum e_i = rank integrates to a rational
// number; repeated factors are removed with the linear relations
// sum_i (m . d_i) D_i = 0.
class IntersectionRing {
public:
    explicit IntersectionRing(Fan fan);  // NotSmooth / Error on bad input

    const Fan& fan() const { return fan_; }
    // exponents: one entry per ray; throws WrongDegree unless they sum to rank
    Rational integrate_monomial(const std::vector<int>& exponents) const;

private:
    Fan fan_;
    // per maximal cone, per ray of that cone: the dual vector
    std::vector<std::vector<LatticeVector>> duals_;
    mutable std::mutex mtx_;
    mutable std::map<std::vector<int>, Rational> memo_;

    Rational eval(const std::vector<int>& exps, std::set<std::vector<int>>& active) const;
};

}  // namespace torimod

#endif

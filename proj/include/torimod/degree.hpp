#ifndef TORIMOD_DEGREE_HPP
#define TORIMOD_DEGREE_HPP

#include "torimod/fan.hpp"

namespace torimod {

// Piecewise-linear degree function on a fan: deg(d_i) = values[i] / l on the
// rays, extended linearly on each cone. deg(N) lies in (1/l)Z.
class DegreeFunction {
public:
    // Throws IntegralDegreeError when l divides some ray value, InvalidFan
    // when the values fail to extend linearly on a non-simplicial cone.
    DegreeFunction(Fan fan, long l, std::vector<long long> values);

    const Fan& fan() const { return fan_; }
    long level() const { return l_; }
    const std::vector<long long>& values() const { return values_; }
    long long value(int ray) const { return values_[ray]; }

    // deg(n); requires n to lie in some cone of the fan.
    Rational operator()(const LatticeVector& n) const;
    // l*deg(n) as an integer (the exponent of zeta_l).
    long long scaled(const LatticeVector& n) const;

private:
    Fan fan_;
    long l_;
    std::vector<long long> values_;
};

}  // namespace torimod

#endif

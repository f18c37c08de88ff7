#ifndef TORIMOD_SIMPLEX_LP_HPP
#define TORIMOD_SIMPLEX_LP_HPP

#include <vector>

#include "torimod/lattice.hpp"

namespace torimod {

// Exact LP in standard form: maximize c.x subject to A x = b, x >= 0.
// Two-phase simplex with Bland's rule; all arithmetic over the rationals.
enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPResult {
    LPStatus status;
    Rational value;            // objective at the optimum
    std::vector<Rational> x;   // an optimal point
};

LPResult simplex_solve(RatMat A, std::vector<Rational> b, std::vector<Rational> c);

// Is {x >= 0 : A x = b} nonempty?
bool lp_feasible(RatMat A, std::vector<Rational> b);

}  // namespace torimod

#endif

#ifndef TORIMOD_ERRORS_HPP
#define TORIMOD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace torimod {

// Domain errors: invalid mathematical input. The CLI maps these to exit code 1.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero in cyclotomic field") {}
};
struct IncompatibleLevels : Error {
    IncompatibleLevels(unsigned from, unsigned to)
        : Error("cannot embed level " + std::to_string(from) + " into level " + std::to_string(to)) {}
};
struct NotAUnit : Error {
    NotAUnit() : Error("series is not invertible (zero leading coefficient)") {}
};
struct LogOfNonUnit : Error {
    LogOfNonUnit() : Error("log requires constant term 1; exp requires constant term 0") {}
};
struct NotPure : Error {
    NotPure() : Error("maximal cones have unequal dimension") {}
};
struct NotSimplicial : Error {
    NotSimplicial() : Error("cone is not simplicial") {}
};
struct NotSmooth : Error {
    NotSmooth() : Error("fan is not smooth") {}
};
struct WrongDegree : Error {
    WrongDegree() : Error("divisor monomial degree does not equal the fan rank") {}
};
struct BadResidue : Error {
    BadResidue() : Error("residue must not be divisible by the level") {}
};
struct BadResidues : Error {
    BadResidues() : Error("residues must be nonzero mod l and sum to 0 mod l") {}
};
struct OddOrder : Error {
    OddOrder() : Error("r-series of odd order is identically zero; refusing to construct it") {}
};
struct ReductionNotFound : Error {
    ReductionNotFound() : Error("internal error: generator reduction system is inconsistent") {}
};
struct NotInRing : Error {
    NotInRing() : Error("series does not lie in the generator ring at the certified precision") {}
};
struct InsufficientPrecision : Error {
    InsufficientPrecision() : Error("series precision is below the certified matching bound") {}
};
struct NotCoprime : Error {
    NotCoprime() : Error("prime must be coprime to the level") {}
};
struct WrongWeight : Error {
    WrongWeight() : Error("weight must equal the lattice rank and be at least 1") {}
};
struct SmallLevel : Error {
    SmallLevel() : Error("Fricke action on s-generators requires level >= 5") {}
};
struct PoleOnContinuation : Error {
    PoleOnContinuation() : Error("denominator factor vanishes identically on continuation") {}
};
struct NegativeValuation : Error {
    NegativeValuation() : Error("internal error: r(q,m) has negative q-valuation") {}
};
struct InvalidFan : Error {
    explicit InvalidFan(const std::string& why) : Error("invalid fan: " + why) {}
};
struct IntegralDegreeError : Error {
    IntegralDegreeError() : Error("degree function takes an integer value on a ray") {}
};

}  // namespace torimod

#endif

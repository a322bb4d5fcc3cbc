#ifndef VCELL_ERRORS_HPP
#define VCELL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace vcell {

struct DimensionMismatch : std::runtime_error {
    explicit DimensionMismatch(const std::string& m) : std::runtime_error(m) {}
};

// Raised by exact division when the remainder is nonzero. Spurious-pole
// checks rely on catching this.
struct NotDivisible : std::runtime_error {
    explicit NotDivisible(const std::string& m) : std::runtime_error(m) {}
};

// A boundary-patch parameter point violated the chain constraints
// 0 <= x_1 <= ... <= x_{d-1} or produced a negative eliminated coordinate.
struct AdmissibilityError : std::runtime_error {
    explicit AdmissibilityError(const std::string& m) : std::runtime_error(m) {}
};

// Residue requested along a denominator factor of multiplicity > 1.
struct NotSimplePole : std::runtime_error {
    explicit NotSimplePole(const std::string& m) : std::runtime_error(m) {}
};

// A denominator factor has no matching curve (or vice versa).
struct UnmatchedFactor : std::runtime_error {
    explicit UnmatchedFactor(const std::string& m) : std::runtime_error(m) {}
};

struct InvalidScaffold : std::runtime_error {
    explicit InvalidScaffold(const std::string& m) : std::runtime_error(m) {}
};

} // namespace vcell

#endif

#pragma once

#include <stdexcept>
#include <string>

namespace shiftcalc {

// Iterative numerics that failed to converge, overflowed, or produced
// non-finite values.
class numeric_failure : public std::runtime_error {
public:
    explicit numeric_failure(const std::string& what) : std::runtime_error(what) {}
};

// Flow-box chart construction failed (base point too close to a fixed point,
// or no transverse crossing found).
class chart_failure : public std::runtime_error {
public:
    explicit chart_failure(const std::string& what) : std::runtime_error(what) {}
};

// A linear flow without purely imaginary nonzero spectrum was asked for a
// closed-orbit quantity.
class no_closed_orbits_error : public std::invalid_argument {
public:
    explicit no_closed_orbits_error(const std::string& what) : std::invalid_argument(what) {}
};

// Candidate kernel elements of a circle action do not form a cyclic subgroup
// within tolerance.
class inconsistent_kernel_error : public std::runtime_error {
public:
    explicit inconsistent_kernel_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace shiftcalc

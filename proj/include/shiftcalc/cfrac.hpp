#pragma once

#include <cstdint>
#include <optional>

namespace shiftcalc {

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;
};

/// Continued-fraction rational approximation: the first convergent p/q with
/// q <= max_den and |x - p/q| <= tol, or nullopt if no convergent within the
/// denominator cap matches. tol is absolute.
std::optional<Rational> rational_approx(double x, std::int64_t max_den, double tol);

std::int64_t gcd64(std::int64_t a, std::int64_t b);

/// lcm with overflow cap; returns nullopt if the result would exceed `cap`.
std::optional<std::int64_t> lcm_capped(std::int64_t a, std::int64_t b, std::int64_t cap);

} // namespace shiftcalc

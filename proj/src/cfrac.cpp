#include "shiftcalc/cfrac.hpp"

#include <cmath>
#include <limits>
#include <utility>

namespace shiftcalc {

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    a = std::abs(a);
    b = std::abs(b);
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

std::optional<std::int64_t> lcm_capped(std::int64_t a, std::int64_t b, std::int64_t cap) {
    if (a == 0 || b == 0) return 0;
    a = std::abs(a);
    b = std::abs(b);
    const std::int64_t g = gcd64(a, b);
    const std::int64_t q = a / g;
    if (q > cap / b) return std::nullopt;
    const std::int64_t l = q * b;
    if (l > cap) return std::nullopt;
    return l;
}

std::optional<Rational> rational_approx(double x, std::int64_t max_den, double tol) {
    if (!std::isfinite(x) || max_den < 1) return std::nullopt;
    const long double target = static_cast<long double>(x);

    // Convergent recurrence h_i = a_i h_{i-1} + h_{i-2}, same for k.
    __int128 h_prev2 = 0, h_prev = 1;
    __int128 k_prev2 = 1, k_prev = 0;
    long double y = target;

    for (int iter = 0; iter < 64; ++iter) {
        if (std::abs(y) > 9.0e18L) break;
        const std::int64_t a = static_cast<std::int64_t>(std::floor(y));
        const __int128 h = static_cast<__int128>(a) * h_prev + h_prev2;
        const __int128 k = static_cast<__int128>(a) * k_prev + k_prev2;
        if (k > static_cast<__int128>(max_den) || h > static_cast<__int128>(9.0e18) ||
            h < -static_cast<__int128>(9.0e18))
            break;
        const auto hn = static_cast<std::int64_t>(h);
        const auto kn = static_cast<std::int64_t>(k);
        if (kn > 0 && std::abs(static_cast<long double>(hn) / kn - target) <= tol) {
            const std::int64_t g = std::max<std::int64_t>(1, gcd64(hn, kn));
            return Rational{hn / g, kn / g};
        }
        const long double frac = y - static_cast<long double>(a);
        if (frac <= std::numeric_limits<long double>::epsilon() * std::abs(y)) break;
        y = 1.0L / frac;
        h_prev2 = h_prev;
        h_prev = h;
        k_prev2 = k_prev;
        k_prev = k;
    }
    return std::nullopt;
}

} // namespace shiftcalc

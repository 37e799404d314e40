#pragma once

#include <functional>
#include <vector>

#include "shiftcalc/matrix.hpp"

namespace shiftcalc {

/// Autonomous vector field x -> dx/dt.
using FieldFn = std::function<void(const Vec&, Vec&)>;

struct OdeOptions {
    double rtol = 1e-10;
    double atol = 1e-10;
    double max_step = 1.0;
    long max_steps = 2'000'000;
};

/// State at time t1 of x' = f(x), x(0) = x0, by adaptive Dormand-Prince 5(4).
/// Handles negative t1 by integrating backward. Throws numeric_failure when
/// the step count is exhausted or the step size underflows.
Vec integrate(const FieldFn& f, const Vec& x0, double t1, const OdeOptions& opts = {});

/// One forward sweep recording states at each requested time. `ts` must be
/// nonnegative and ascending.
std::vector<Vec> integrate_samples(const FieldFn& f, const Vec& x0, const std::vector<double>& ts,
                                   const OdeOptions& opts = {});

} // namespace shiftcalc

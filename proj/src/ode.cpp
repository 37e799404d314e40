#include "shiftcalc/ode.hpp"

#include <algorithm>
#include <cmath>

#include "shiftcalc/errors.hpp"

namespace shiftcalc {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
// embedded 4th-order weights
constexpr double e1 = 5179.0 / 57600, e3 = 7571.0 / 16695, e4 = 393.0 / 640,
                 e5 = -92097.0 / 339200, e6 = 187.0 / 2100, e7 = 1.0 / 40;

struct Stepper {
    const FieldFn& f;
    const OdeOptions& opts;
    int n;
    Vec k1, k2, k3, k4, k5, k6, k7, tmp, x5;

    explicit Stepper(const FieldFn& fn, const OdeOptions& o, int dim)
        : f(fn), opts(o), n(dim), k1(dim), k2(dim), k3(dim), k4(dim), k5(dim), k6(dim), k7(dim),
          tmp(dim), x5(dim) {}

    // One trial step of size h from x (k1 must hold f(x)). Returns the error
    // estimate ratio (<= 1 means accept); fills x5 with the 5th-order result
    // and k7 with f(x5) for FSAL reuse.
    double attempt(const Vec& x, double h) {
        for (int i = 0; i < n; ++i) tmp[i] = x[i] + h * a21 * k1[i];
        f(tmp, k2);
        for (int i = 0; i < n; ++i) tmp[i] = x[i] + h * (a31 * k1[i] + a32 * k2[i]);
        f(tmp, k3);
        for (int i = 0; i < n; ++i) tmp[i] = x[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        f(tmp, k4);
        for (int i = 0; i < n; ++i)
            tmp[i] = x[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        f(tmp, k5);
        for (int i = 0; i < n; ++i)
            tmp[i] = x[i] +
                     h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
        f(tmp, k6);
        for (int i = 0; i < n; ++i)
            x5[i] = x[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
        f(x5, k7);

        double err = 0.0;
        for (int i = 0; i < n; ++i) {
            const double x4 = x[i] + h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                                          e6 * k6[i] + e7 * k7[i]);
            const double sc = opts.atol + opts.rtol * std::max(std::abs(x[i]), std::abs(x5[i]));
            const double d = (x5[i] - x4) / sc;
            err += d * d;
        }
        return std::sqrt(err / n);
    }
};

} // namespace

Vec integrate(const FieldFn& f, const Vec& x0, double t1, const OdeOptions& opts) {
    if (t1 == 0.0) return x0;
    const int n = static_cast<int>(x0.size());
    const double dir = t1 > 0 ? 1.0 : -1.0;

    // Integrate forward in s for x' = dir * f(x).
    FieldFn g = f;
    if (dir < 0)
        g = [&f](const Vec& x, Vec& dx) {
            f(x, dx);
            for (double& d : dx) d = -d;
        };

    const double t_end = std::abs(t1);
    Stepper st(g, opts, n);
    Vec x = x0;
    g(x, st.k1);
    double h = std::min({opts.max_step, t_end, 1e-2});
    double t = 0.0;
    long steps = 0;

    while (t < t_end) {
        if (++steps > opts.max_steps) throw numeric_failure("integrate: step limit exceeded");
        h = std::min(h, t_end - t);
        if (h < 1e-14 * (1.0 + t)) throw numeric_failure("integrate: step size underflow");
        const double err = st.attempt(x, h);
        if (err <= 1.0) {
            t += h;
            x = st.x5;
            st.k1 = st.k7; // FSAL
            const double grow = err == 0.0 ? 5.0 : 0.9 * std::pow(err, -0.2);
            h *= std::clamp(grow, 0.2, 5.0);
            h = std::min(h, opts.max_step);
        } else {
            h *= std::max(0.2, 0.9 * std::pow(err, -0.2));
        }
    }
    return x;
}

std::vector<Vec> integrate_samples(const FieldFn& f, const Vec& x0, const std::vector<double>& ts,
                                   const OdeOptions& opts) {
    std::vector<Vec> out;
    out.reserve(ts.size());
    Vec x = x0;
    double t_cur = 0.0;
    for (double t : ts) {
        if (t < t_cur) throw std::invalid_argument("integrate_samples: times must ascend");
        if (t > t_cur) {
            x = integrate(f, x, t - t_cur, opts);
            t_cur = t;
        }
        out.push_back(x);
    }
    return out;
}

} // namespace shiftcalc

#include "shiftcalc/expm.hpp"

#include <cmath>
#include <stdexcept>

#include "shiftcalc/errors.hpp"

namespace shiftcalc {

namespace {

// Degree-13 Pade numerator coefficients (b_0..b_13).
constexpr double kPade13[14] = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
    129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
    1323241920.0,        40840800.0,          960960.0,           16380.0,
    182.0,               1.0};

constexpr double kTheta13 = 5.371920351148152;

} // namespace

RealMatrix mat_exp(const RealMatrix& x) {
    if (!x.all_finite()) throw std::invalid_argument("mat_exp: non-finite entry");
    const int n = x.dim();
    const RealMatrix id = RealMatrix::identity(n);

    // Shift by the mean eigenvalue; restored as a scalar factor at the end.
    const double mu = x.trace() / n;
    if (std::abs(mu) > 700.0)
        throw numeric_failure("mat_exp: trace shift exp(" + std::to_string(mu) + ") overflows");
    RealMatrix a = x - id * mu;

    const double nrm = a.norm_one();
    int s = 0;
    if (nrm > kTheta13) {
        s = static_cast<int>(std::ceil(std::log2(nrm / kTheta13)));
        if (s > 64) throw numeric_failure("mat_exp: norm too large to scale (" + std::to_string(nrm) + ")");
        a *= std::ldexp(1.0, -s);
    }

    const RealMatrix a2 = a * a;
    const RealMatrix a4 = a2 * a2;
    const RealMatrix a6 = a2 * a4;
    const auto& b = kPade13;
    RealMatrix u = a * (a6 * (a6 * b[13] + a4 * b[11] + a2 * b[9]) + a6 * b[7] + a4 * b[5] +
                        a2 * b[3] + id * b[1]);
    RealMatrix v = a6 * (a6 * b[12] + a4 * b[10] + a2 * b[8]) + a6 * b[6] + a4 * b[4] +
                   a2 * b[2] + id * b[0];

    RealMatrix f = lu_solve(v - u, v + u);
    for (int i = 0; i < s; ++i) f = f * f;
    if (mu != 0.0) f *= std::exp(mu);
    if (!f.all_finite()) throw numeric_failure("mat_exp: overflow in result");
    return f;
}

} // namespace shiftcalc

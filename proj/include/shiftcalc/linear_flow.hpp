#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "shiftcalc/matrix.hpp"
#include "shiftcalc/spectrum.hpp"

namespace shiftcalc {

/// Purely imaginary nonzero eigenvalues of a linear flow's generator and the
/// derived closed-orbit data: orbits exist iff lambda_set is nonempty, and
/// every closed orbit has period >= min_period_bound.
struct ImaginarySpectrumReport {
    std::vector<std::complex<double>> lambda_set; // clustered values, conjugate-closed
    double tol_used = 0.0;
    bool has_closed_orbits = false;
    std::optional<double> min_period_bound;
};

/// Scale-aware default tolerance for the purely-imaginary test:
/// 1e-9 * (1 + ||A||_inf).
double default_imaginary_tol(const RealMatrix& a);

/// Eigenvalues with |Re| <= tol and |Im| > tol, from clustered spectrum.
ImaginarySpectrumReport imaginary_spectrum(const RealMatrix& a, double tol);

/// min over lambda in the imaginary set of 2*pi/|lambda|; nullopt when the
/// set is empty.
std::optional<double> min_period_bound(const RealMatrix& a, double tol);

enum class PointOrbitKind { fixed, periodic, non_closed };

std::string to_string(PointOrbitKind k);

struct PointPeriodVerdict {
    PointOrbitKind kind = PointOrbitKind::non_closed;
    std::optional<double> period;          // present iff periodic
    std::vector<double> component_periods; // 2*pi/|lambda_j| per contributing frequency
    std::vector<std::string> evidence;
};

/// Classifies the orbit of x0 under e^{At}. Period candidates come from
/// commensurability classes of the imaginary frequencies (continued-fraction
/// detection, denominators <= 1e6 at 1e-9); each candidate is verified by an
/// exact-return test ||e^{AT} x0 - x0|| < tol*(1+||x0||) and refined to the
/// minimal period. Candidates beyond `horizon` are not tested and count as
/// evidence for non_closed.
PointPeriodVerdict point_period(const RealMatrix& a, const Vec& x0, double tol, double horizon);

/// min_period_bound(A/s) for each scale s; exactly s * min_period_bound(A)
/// up to eigenvalue-solver tolerance. Throws no_closed_orbits_error when the
/// imaginary set of A is empty.
std::vector<std::pair<double, double>> period_divergence_probe(const RealMatrix& a,
                                                               const std::vector<double>& scales,
                                                               double tol);

} // namespace shiftcalc

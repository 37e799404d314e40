#include "shiftcalc/linear_flow.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>
#include <sstream>

#include "shiftcalc/cfrac.hpp"
#include "shiftcalc/errors.hpp"
#include "shiftcalc/expm.hpp"

namespace shiftcalc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::int64_t kMaxDenominator = 1'000'000;
constexpr double kRatioTol = 1e-9;

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

// Distinct positive frequencies |Im lambda| of the imaginary set, deduped
// within the spectrum clustering tolerance.
std::vector<double> distinct_frequencies(const ImaginarySpectrumReport& rep) {
    std::vector<double> ws;
    for (const auto& lam : rep.lambda_set)
        if (lam.imag() > 0.0) ws.push_back(lam.imag());
    std::sort(ws.begin(), ws.end());
    std::vector<double> out;
    for (double w : ws) {
        if (out.empty() || w - out.back() > 1e-8) out.push_back(w);
    }
    return out;
}

// Common period of a frequency subset: smallest T > 0 with T*w_j in 2*pi*Z
// for every j, assuming pairwise-rational ratios. nullopt when some ratio
// has no acceptable convergent or the lcm overflows the cap.
std::optional<double> common_period(const std::vector<double>& ws) {
    const double w0 = ws.front();
    std::int64_t acc = 1;
    for (double w : ws) {
        const auto r = rational_approx(w / w0, kMaxDenominator, kRatioTol);
        if (!r || r->num <= 0) return std::nullopt;
        const auto l = lcm_capped(acc, r->den, 4'000'000'000'000LL);
        if (!l) return std::nullopt;
        acc = *l;
    }
    const double t = kTwoPi * static_cast<double>(acc) / w0;
    // consistency: every frequency must wind an integer number of turns
    for (double w : ws) {
        const double turns = t * w / kTwoPi;
        if (std::abs(turns - std::round(turns)) > 1e-6 * std::max(1.0, turns)) return std::nullopt;
    }
    return t;
}

} // namespace

double default_imaginary_tol(const RealMatrix& a) {
    return 1e-9 * (1.0 + a.norm_inf());
}

ImaginarySpectrumReport imaginary_spectrum(const RealMatrix& a, double tol) {
    if (tol <= 0.0) throw std::invalid_argument("imaginary_spectrum: tol must be positive");
    const Spectrum sp = spectrum(a);
    ImaginarySpectrumReport rep;
    rep.tol_used = tol;
    for (const auto& c : sp.clusters) {
        if (std::abs(c.value.real()) <= tol && std::abs(c.value.imag()) > tol)
            rep.lambda_set.push_back({0.0, c.value.imag()});
    }
    rep.has_closed_orbits = !rep.lambda_set.empty();
    if (rep.has_closed_orbits) {
        double max_abs = 0.0;
        for (const auto& lam : rep.lambda_set) max_abs = std::max(max_abs, std::abs(lam.imag()));
        rep.min_period_bound = kTwoPi / max_abs;
    }
    return rep;
}

std::optional<double> min_period_bound(const RealMatrix& a, double tol) {
    return imaginary_spectrum(a, tol).min_period_bound;
}

std::string to_string(PointOrbitKind k) {
    switch (k) {
        case PointOrbitKind::fixed: return "fixed";
        case PointOrbitKind::periodic: return "periodic";
        case PointOrbitKind::non_closed: return "non_closed";
    }
    return "?";
}

PointPeriodVerdict point_period(const RealMatrix& a, const Vec& x0, double tol, double horizon) {
    if (x0.size() != static_cast<size_t>(a.dim()))
        throw std::invalid_argument("point_period: dimension mismatch");
    if (horizon <= 0.0) throw std::invalid_argument("point_period: horizon must be positive");

    PointPeriodVerdict v;
    const double xscale = 1.0 + norm_inf(x0);
    const double return_tol = tol * xscale;

    // Fixed point of a linear flow iff A x0 = 0; the origin always qualifies.
    const double drift = norm_inf(a * x0);
    if (norm_inf(x0) == 0.0 ||
        drift <= 64.0 * std::numeric_limits<double>::epsilon() * (1.0 + a.norm_inf()) * xscale) {
        v.kind = PointOrbitKind::fixed;
        v.evidence.push_back("||A x0|| = " + fmt(drift));
        return v;
    }

    const auto rep = imaginary_spectrum(a, default_imaginary_tol(a));
    if (!rep.has_closed_orbits) {
        v.kind = PointOrbitKind::non_closed;
        v.evidence.push_back("imaginary spectrum empty: no closed orbits exist");
        return v;
    }
    const std::vector<double> freqs = distinct_frequencies(rep);
    const double w_max = freqs.back();
    for (double w : freqs) v.component_periods.push_back(kTwoPi / w);

    // Candidate return times: common periods of frequency subsets that fit
    // within the horizon.
    std::set<double> candidates;
    const size_t r = freqs.size();
    size_t subset_cap = r <= 12 ? (size_t{1} << r) : 0;
    if (subset_cap == 0) {
        // too many frequencies for full enumeration: singletons + all
        for (double w : freqs)
            if (auto t = common_period({w}); t && *t <= horizon) candidates.insert(*t);
        if (auto t = common_period(freqs); t && *t <= horizon) candidates.insert(*t);
        v.evidence.push_back("frequency count " + std::to_string(r) +
                             " exceeds subset enumeration cap; tested singletons and full set");
    } else {
        int beyond = 0;
        for (size_t mask = 1; mask < subset_cap; ++mask) {
            std::vector<double> sel;
            for (size_t j = 0; j < r; ++j)
                if (mask & (size_t{1} << j)) sel.push_back(freqs[j]);
            const auto t = common_period(sel);
            if (!t) continue;
            if (*t <= horizon)
                candidates.insert(*t);
            else
                ++beyond;
        }
        if (beyond > 0)
            v.evidence.push_back(std::to_string(beyond) +
                                 " candidate period(s) beyond horizon; not tested");
    }

    auto return_residual = [&](double t) -> double {
        const Vec y = mat_exp(a * t) * x0;
        return norm_inf(sub(y, x0));
    };

    for (double t_cand : candidates) {
        double residual;
        try {
            residual = return_residual(t_cand);
        } catch (const numeric_failure& e) {
            v.evidence.push_back("return test at T=" + fmt(t_cand) + " failed: " + e.what());
            continue;
        }
        if (residual >= return_tol) {
            v.evidence.push_back("no return at T=" + fmt(t_cand) + " (residual " + fmt(residual) +
                                 ")");
            continue;
        }
        // Minimal period: return times form a lattice theta*Z, so theta =
        // T/s for some integer s; the Lemma bound caps s at T*w_max/(2*pi).
        const int s_max = std::max(1, static_cast<int>(std::floor(t_cand * w_max / kTwoPi + 0.5)));
        double period = t_cand;
        for (int s = s_max; s >= 2; --s) {
            const double t_small = t_cand / s;
            double res_s;
            try {
                res_s = return_residual(t_small);
            } catch (const numeric_failure&) {
                continue;
            }
            if (res_s < return_tol) {
                period = t_small;
                break;
            }
        }
        v.kind = PointOrbitKind::periodic;
        v.period = period;
        v.evidence.push_back("return verified at T=" + fmt(t_cand) + " (residual " +
                             fmt(residual) + "); minimal period " + fmt(period));
        // Contributing component periods: those the period winds integrally.
        std::vector<double> contributing;
        for (double w : freqs) {
            const double turns = period * w / kTwoPi;
            if (std::abs(turns - std::round(turns)) <= 1e-6 * std::max(1.0, turns) &&
                std::round(turns) >= 1.0)
                contributing.push_back(kTwoPi / w);
        }
        if (!contributing.empty()) v.component_periods = contributing;
        return v;
    }

    v.kind = PointOrbitKind::non_closed;
    if (candidates.empty())
        v.evidence.push_back("no commensurable return-time candidate within horizon");
    return v;
}

std::vector<std::pair<double, double>> period_divergence_probe(const RealMatrix& a,
                                                               const std::vector<double>& scales,
                                                               double tol) {
    const auto base = imaginary_spectrum(a, tol);
    if (!base.has_closed_orbits)
        throw no_closed_orbits_error("period_divergence_probe: imaginary spectrum of A is empty");
    std::vector<std::pair<double, double>> out;
    out.reserve(scales.size());
    for (double s : scales) {
        if (s <= 0.0) throw std::invalid_argument("period_divergence_probe: scales must be positive");
        // tol shrinks with the matrix so the imaginary test classifies the
        // scaled spectrum identically.
        const auto b = min_period_bound(a * (1.0 / s), tol / s);
        if (!b) throw numeric_failure("period_divergence_probe: scaled matrix lost its imaginary spectrum");
        out.emplace_back(s, *b);
    }
    return out;
}

} // namespace shiftcalc

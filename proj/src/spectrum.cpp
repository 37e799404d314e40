#include "shiftcalc/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "shiftcalc/errors.hpp"

namespace shiftcalc {

namespace {

constexpr double kClusterTol = 1e-8;

// Householder similarity reduction to upper Hessenberg form, in place.
void hessenberg_reduce(RealMatrix& a) {
    const int n = a.dim();
    std::vector<double> ort(n, 0.0);
    for (int m = 1; m <= n - 2; ++m) {
        double scale = 0.0;
        for (int i = m; i < n; ++i) scale += std::abs(a(i, m - 1));
        if (scale == 0.0) continue;

        double h = 0.0;
        for (int i = n - 1; i >= m; --i) {
            ort[i] = a(i, m - 1) / scale;
            h += ort[i] * ort[i];
        }
        double g = std::sqrt(h);
        if (ort[m] > 0) g = -g;
        h -= ort[m] * g;
        ort[m] -= g;

        // Apply the reflector from the left, then the right.
        for (int j = m; j < n; ++j) {
            double f = 0.0;
            for (int i = n - 1; i >= m; --i) f += ort[i] * a(i, j);
            f /= h;
            for (int i = m; i < n; ++i) a(i, j) -= f * ort[i];
        }
        for (int i = 0; i < n; ++i) {
            double f = 0.0;
            for (int j = n - 1; j >= m; --j) f += ort[j] * a(i, j);
            f /= h;
            for (int j = m; j < n; ++j) a(i, j) -= f * ort[j];
        }
        a(m, m - 1) = scale * g;
        for (int i = m + 1; i < n; ++i) a(i, m - 1) = 0.0;
    }
}

// Francis double-shift QR on an upper Hessenberg matrix; eigenvalues only.
std::vector<std::complex<double>> hqr_eigenvalues(RealMatrix a) {
    const int n = a.dim();
    std::vector<std::complex<double>> ev(n);
    const double eps = std::numeric_limits<double>::epsilon();

    double anorm = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = std::max(i - 1, 0); j < n; ++j) anorm += std::abs(a(i, j));
    if (anorm == 0.0) return ev;

    int nn = n - 1;
    double t = 0.0;
    while (nn >= 0) {
        int its = 0;
        for (;;) {
            int l;
            for (l = nn; l >= 1; --l) {
                double s = std::abs(a(l - 1, l - 1)) + std::abs(a(l, l));
                if (s == 0.0) s = anorm;
                if (std::abs(a(l, l - 1)) <= eps * s) {
                    a(l, l - 1) = 0.0;
                    break;
                }
            }
            if (l < 0) l = 0;

            double x = a(nn, nn);
            if (l == nn) {
                ev[nn--] = {x + t, 0.0};
                break;
            }
            double y = a(nn - 1, nn - 1);
            double w = a(nn, nn - 1) * a(nn - 1, nn);
            if (l == nn - 1) {
                double p = 0.5 * (y - x);
                double q = p * p + w;
                double z = std::sqrt(std::abs(q));
                x += t;
                if (q >= 0.0) {
                    z = p + std::copysign(z, p);
                    ev[nn - 1] = ev[nn] = {x + z, 0.0};
                    if (z != 0.0) ev[nn] = {x - w / z, 0.0};
                } else {
                    ev[nn] = {x + p, z};
                    ev[nn - 1] = {x + p, -z};
                }
                nn -= 2;
                break;
            }

            if (its == 60)
                throw numeric_failure("spectrum: QR iteration failed to converge at index " +
                                      std::to_string(nn) + " (matrix 1-norm " +
                                      std::to_string(anorm) + ")");
            if (its != 0 && its % 10 == 0) {
                // exceptional shift
                t += x;
                for (int i = 0; i <= nn; ++i) a(i, i) -= x;
                double s = std::abs(a(nn, nn - 1)) + std::abs(a(nn - 1, nn - 2));
                y = x = 0.75 * s;
                w = -0.4375 * s * s;
            }
            ++its;

            double p = 0.0, q = 0.0, r = 0.0;
            int m;
            for (m = nn - 2; m >= l; --m) {
                double z = a(m, m);
                double rr = x - z;
                double ss = y - z;
                p = (rr * ss - w) / a(m + 1, m) + a(m, m + 1);
                q = a(m + 1, m + 1) - z - rr - ss;
                r = a(m + 2, m + 1);
                double sc = std::abs(p) + std::abs(q) + std::abs(r);
                p /= sc;
                q /= sc;
                r /= sc;
                if (m == l) break;
                double u = std::abs(a(m, m - 1)) * (std::abs(q) + std::abs(r));
                double v = std::abs(p) *
                           (std::abs(a(m - 1, m - 1)) + std::abs(z) + std::abs(a(m + 1, m + 1)));
                if (u <= eps * v) break;
            }
            for (int i = m + 2; i <= nn; ++i) {
                a(i, i - 2) = 0.0;
                if (i != m + 2) a(i, i - 3) = 0.0;
            }
            for (int k = m; k <= nn - 1; ++k) {
                double xx = 0.0;
                if (k != m) {
                    p = a(k, k - 1);
                    q = a(k + 1, k - 1);
                    r = (k != nn - 1) ? a(k + 2, k - 1) : 0.0;
                    xx = std::abs(p) + std::abs(q) + std::abs(r);
                    if (xx != 0.0) {
                        p /= xx;
                        q /= xx;
                        r /= xx;
                    }
                }
                double s = std::copysign(std::sqrt(p * p + q * q + r * r), p);
                if (s == 0.0) continue;
                if (k == m) {
                    if (l != m) a(k, k - 1) = -a(k, k - 1);
                } else {
                    a(k, k - 1) = -s * xx;
                }
                p += s;
                double cx = p / s;
                double cy = q / s;
                double cz = r / s;
                q /= p;
                r /= p;
                for (int j = k; j <= nn; ++j) {
                    double pp = a(k, j) + q * a(k + 1, j);
                    if (k != nn - 1) {
                        pp += r * a(k + 2, j);
                        a(k + 2, j) -= pp * cz;
                    }
                    a(k + 1, j) -= pp * cy;
                    a(k, j) -= pp * cx;
                }
                const int mmin = std::min(nn, k + 3);
                for (int i = l; i <= mmin; ++i) {
                    double pp = cx * a(i, k) + cy * a(i, k + 1);
                    if (k != nn - 1) {
                        pp += cz * a(i, k + 2);
                        a(i, k + 2) -= pp * r;
                    }
                    a(i, k + 1) -= pp * q;
                    a(i, k) -= pp;
                }
            }
        }
    }
    return ev;
}

bool lex_less(const std::complex<double>& a, const std::complex<double>& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

// Greedy clustering of a lexicographically sorted list; two values join the
// same cluster when within kClusterTol of the running mean.
std::vector<EigenvalueCluster> cluster_sorted(const std::vector<std::complex<double>>& vals) {
    std::vector<EigenvalueCluster> out;
    std::complex<double> sum = 0.0;
    int count = 0;
    auto flush = [&]() {
        if (count > 0) out.push_back({sum / static_cast<double>(count), count});
        sum = 0.0;
        count = 0;
    };
    for (const auto& v : vals) {
        if (count > 0 && std::abs(v - sum / static_cast<double>(count)) > kClusterTol) flush();
        sum += v;
        ++count;
    }
    flush();
    return out;
}

} // namespace

Spectrum spectrum(const RealMatrix& x) {
    if (x.dim() <= 0) throw std::invalid_argument("spectrum: empty matrix");
    if (!x.all_finite()) throw std::invalid_argument("spectrum: non-finite entry");

    Spectrum sp;
    if (x.dim() == 1) {
        sp.raw = {{x(0, 0), 0.0}};
        sp.clusters = {{sp.raw[0], 1}};
        return sp;
    }

    RealMatrix h = x;
    hessenberg_reduce(h);
    sp.raw = hqr_eigenvalues(std::move(h));
    std::sort(sp.raw.begin(), sp.raw.end(), lex_less);

    // Cluster real values and strictly-upper-half-plane values separately,
    // then mirror the complex clusters so conjugation closure is exact.
    std::vector<std::complex<double>> reals, upper;
    for (const auto& v : sp.raw) {
        if (v.imag() == 0.0) reals.push_back(v);
        else if (v.imag() > 0.0) upper.push_back(v);
    }
    auto rc = cluster_sorted(reals);
    auto uc = cluster_sorted(upper);
    sp.clusters = rc;
    for (const auto& c : uc) {
        sp.clusters.push_back(c);
        sp.clusters.push_back({std::conj(c.value), c.multiplicity});
    }
    std::sort(sp.clusters.begin(), sp.clusters.end(),
              [](const EigenvalueCluster& a, const EigenvalueCluster& b) {
                  return lex_less(a.value, b.value);
              });
    return sp;
}

} // namespace shiftcalc

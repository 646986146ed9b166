#include "ovenctl/eigensolver.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>

#include "ovenctl/errors.hpp"

namespace ovenctl {

namespace {

constexpr double kDeflateTol = 1e-12;
constexpr int kMaxSweeps = 100;

double sign_of(double magnitude, double sign_source) {
    return sign_source >= 0.0 ? magnitude : -magnitude;
}

// Householder similarity reduction to upper Hessenberg form, in place.
void hessenberg_reduce(Matrix& h) {
    const int n = h.rows();
    std::vector<double> ort(n, 0.0);
    for (int m = 1; m < n - 1; ++m) {
        double scale = 0.0;
        for (int i = m; i < n; ++i) scale += std::abs(h(i, m - 1));
        if (scale == 0.0) continue;

        double sq = 0.0;
        for (int i = n - 1; i >= m; --i) {
            ort[i] = h(i, m - 1) / scale;
            sq += ort[i] * ort[i];
        }
        double g = -sign_of(std::sqrt(sq), ort[m]);
        sq -= ort[m] * g;
        ort[m] -= g;

        // Apply P = I - u u^T / sq from the left, then the right.
        for (int j = m; j < n; ++j) {
            double f = 0.0;
            for (int i = n - 1; i >= m; --i) f += ort[i] * h(i, j);
            f /= sq;
            for (int i = m; i < n; ++i) h(i, j) -= f * ort[i];
        }
        for (int i = 0; i < n; ++i) {
            double f = 0.0;
            for (int j = n - 1; j >= m; --j) f += ort[j] * h(i, j);
            f /= sq;
            for (int j = m; j < n; ++j) h(i, j) -= f * ort[j];
        }
        h(m, m - 1) = scale * g;
        for (int i = m + 1; i < n; ++i) h(i, m - 1) = 0.0;
    }
}

}  // namespace

bool Spectrum::all_real(double imag_tol) const {
    for (const auto& ev : eigenvalues) {
        if (std::abs(ev.imag()) > imag_tol) return false;
    }
    return true;
}

bool Spectrum::asymptotically_stable() const {
    for (const auto& ev : eigenvalues) {
        if (ev.real() >= 0.0) return false;
    }
    return true;
}

Spectrum eigenvalues(const Matrix& a) {
    if (!a.is_square() || a.rows() == 0) {
        throw DimensionMismatch("eigenvalues: square matrix of order >= 1 required");
    }
    const int n = a.rows();
    Matrix h = a;
    hessenberg_reduce(h);

    std::vector<std::complex<double>> eig(n);
    const double fallback_scale = std::max(h.norm_inf(), DBL_MIN);
    double shift_offset = 0.0;  // accumulated exceptional shifts
    int high = n - 1;
    int sweeps = 0;

    while (high >= 0) {
        // Look for a negligible subdiagonal entry to split at.
        int low = high;
        while (low > 0) {
            double s = std::abs(h(low - 1, low - 1)) + std::abs(h(low, low));
            if (s == 0.0) s = fallback_scale;
            if (std::abs(h(low, low - 1)) <= kDeflateTol * s) {
                h(low, low - 1) = 0.0;
                break;
            }
            --low;
        }

        if (low == high) {
            eig[high] = h(high, high) + shift_offset;
            --high;
            sweeps = 0;
            continue;
        }
        if (low == high - 1) {
            // Trailing 2x2 block in closed form.
            const double w = h(high, high - 1) * h(high - 1, high);
            const double p = 0.5 * (h(high - 1, high - 1) - h(high, high));
            const double q = p * p + w;
            const double d = h(high, high) + shift_offset;
            if (q >= 0.0) {
                const double z = p + sign_of(std::sqrt(q), p);
                eig[high - 1] = d + z;
                eig[high] = (z != 0.0) ? d - w / z : d + z;
            } else {
                const double z = std::sqrt(-q);
                eig[high - 1] = {d + p, z};
                eig[high] = {d + p, -z};
            }
            high -= 2;
            sweeps = 0;
            continue;
        }

        if (sweeps >= kMaxSweeps) {
            throw NoConvergence("eigenvalues: QR iteration failed to deflate within 100 sweeps");
        }

        double x = h(high, high);
        double y = h(high - 1, high - 1);
        double w = h(high, high - 1) * h(high - 1, high);
        if (sweeps != 0 && sweeps % 10 == 0) {
            // Exceptional shift to break symmetric stalls.
            shift_offset += x;
            for (int i = 0; i <= high; ++i) h(i, i) -= x;
            const double s = std::abs(h(high, high - 1)) + std::abs(h(high - 1, high - 2));
            x = y = 0.75 * s;
            w = -0.4375 * s * s;
        }
        ++sweeps;

        // Locate the starting row m for the implicit double-shift sweep.
        double p = 0.0, q = 0.0, r = 0.0;
        int m = high - 2;
        for (; m >= low; --m) {
            const double z = h(m, m);
            const double rr = x - z;
            const double ss = y - z;
            p = (rr * ss - w) / h(m + 1, m) + h(m, m + 1);
            q = h(m + 1, m + 1) - z - rr - ss;
            r = h(m + 2, m + 1);
            const double scale = std::abs(p) + std::abs(q) + std::abs(r);
            p /= scale;
            q /= scale;
            r /= scale;
            if (m == low) break;
            const double u = std::abs(h(m, m - 1)) * (std::abs(q) + std::abs(r));
            const double v =
                std::abs(p) * (std::abs(h(m - 1, m - 1)) + std::abs(z) + std::abs(h(m + 1, m + 1)));
            if (u <= DBL_EPSILON * v) break;
        }
        for (int i = m + 2; i <= high; ++i) {
            h(i, i - 2) = 0.0;
            if (i != m + 2) h(i, i - 3) = 0.0;
        }

        // Double QR sweep over rows m..high.
        for (int k = m; k <= high - 1; ++k) {
            if (k != m) {
                p = h(k, k - 1);
                q = h(k + 1, k - 1);
                r = (k + 1 != high) ? h(k + 2, k - 1) : 0.0;
                x = std::abs(p) + std::abs(q) + std::abs(r);
                if (x != 0.0) {
                    p /= x;
                    q /= x;
                    r /= x;
                }
            }
            const double s = sign_of(std::sqrt(p * p + q * q + r * r), p);
            if (s == 0.0) continue;
            if (k == m) {
                if (low != m) h(k, k - 1) = -h(k, k - 1);
            } else {
                h(k, k - 1) = -s * x;
            }
            p += s;
            x = p / s;
            y = q / s;
            const double z = r / s;
            q /= p;
            r /= p;
            for (int j = k; j <= high; ++j) {
                double f = h(k, j) + q * h(k + 1, j);
                if (k + 1 != high) {
                    f += r * h(k + 2, j);
                    h(k + 2, j) -= f * z;
                }
                h(k + 1, j) -= f * y;
                h(k, j) -= f * x;
            }
            const int row_end = std::min(high, k + 3);
            for (int i = low; i <= row_end; ++i) {
                double f = x * h(i, k) + y * h(i, k + 1);
                if (k + 1 != high) {
                    f += z * h(i, k + 2);
                    h(i, k + 2) -= f * r;
                }
                h(i, k + 1) -= f * q;
                h(i, k) -= f;
            }
        }
    }

    std::sort(eig.begin(), eig.end(), [](const auto& lhs, const auto& rhs) {
        if (lhs.real() != rhs.real()) return lhs.real() < rhs.real();
        return lhs.imag() < rhs.imag();
    });
    return Spectrum{std::move(eig)};
}

}  // namespace ovenctl

#include "ovenctl/design.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "ovenctl/errors.hpp"
#include "ovenctl/polynomial.hpp"

namespace ovenctl {

namespace {

// Sorted multiset comparison of achieved vs requested eigenvalues; returns
// the worst per-pole relative error.
double matched_relative_error(std::vector<std::complex<double>> requested,
                              std::vector<std::complex<double>> achieved) {
    auto by_parts = [](const std::complex<double>& lhs, const std::complex<double>& rhs) {
        if (lhs.real() != rhs.real()) return lhs.real() < rhs.real();
        return lhs.imag() < rhs.imag();
    };
    std::sort(requested.begin(), requested.end(), by_parts);
    std::sort(achieved.begin(), achieved.end(), by_parts);
    double worst = 0.0;
    for (std::size_t i = 0; i < requested.size(); ++i) {
        const double denom = std::abs(requested[i]) > 0.0 ? std::abs(requested[i]) : 1.0;
        worst = std::max(worst, std::abs(achieved[i] - requested[i]) / denom);
    }
    return worst;
}

}  // namespace

void PoleSet::validate() const {
    auto check_half = [](std::span<const std::complex<double>> poles, const char* which) {
        for (const auto& p : poles) {
            if (p.real() >= 0.0) {
                throw Error(std::string("PoleSet: ") + which + " poles must have negative real parts");
            }
        }
        // Conjugate pairing is delegated to the polynomial machinery.
        (void)Polynomial::from_roots(poles);
    };
    check_half(controller, "controller");
    check_half(observer, "observer");
}

std::vector<std::string> PoleSet::guideline_warnings() const {
    std::vector<std::string> warnings;
    if (controller.size() != observer.size()) {
        warnings.push_back("controller and observer pole counts differ");
        return warnings;
    }
    // Compare magnitude-ordered real parts: each observer pole should be at
    // least 5x more negative than its controller counterpart.
    auto sorted_reals = [](std::span<const std::complex<double>> poles) {
        std::vector<double> re;
        re.reserve(poles.size());
        for (const auto& p : poles) re.push_back(p.real());
        std::sort(re.begin(), re.end());
        return re;
    };
    const auto ctl = sorted_reals(controller);
    const auto obs = sorted_reals(observer);
    for (std::size_t i = 0; i < ctl.size(); ++i) {
        if (-obs[i] < 5.0 * -ctl[i] - 1e-12) {
            char buf[128];
            std::snprintf(buf, sizeof buf,
                          "observer pole %g is less than 5x deeper than controller pole %g", obs[i],
                          ctl[i]);
            warnings.push_back(buf);
        }
    }
    return warnings;
}

PoleSet PoleSet::scaled(double factor) const {
    PoleSet out = *this;
    for (auto& p : out.controller) p *= factor;
    for (auto& p : out.observer) p *= factor;
    return out;
}

Matrix ctrb(const Matrix& a, const Matrix& b) {
    if (!a.is_square() || a.rows() != b.rows()) throw DimensionMismatch("ctrb: shape mismatch");
    const int n = a.rows();
    const int m = b.cols();
    Matrix result(n, n * m);
    Matrix block = b;
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < m; ++j) result(i, k * m + j) = block(i, j);
        }
        block = a * block;
    }
    return result;
}

Matrix obsv(const Matrix& a, const Matrix& c) {
    return ctrb(a.transpose(), c.transpose()).transpose();
}

Matrix place(const Matrix& a, const Matrix& b, std::span<const std::complex<double>> poles) {
    if (!a.is_square()) throw DimensionMismatch("place: a must be square");
    const int n = a.rows();
    if (b.rows() != n || b.cols() != 1) {
        throw DimensionMismatch("place: single-input b of shape n x 1 required");
    }
    if (static_cast<int>(poles.size()) != n) {
        throw DimensionMismatch("place: need exactly n poles");
    }

    const Matrix controllability = ctrb(a, b);
    if (rank(controllability) < n) {
        throw Uncontrollable("place: controllability matrix is rank deficient");
    }

    // K = e_n^T Ctrb^-1 p(a): solve Ctrb^T y = e_n, then K = y^T p(a).
    Matrix e_n(n, 1);
    e_n(n - 1, 0) = 1.0;
    const Matrix ctrb_t = controllability.transpose();
    const Matrix y = solve(ctrb_t, e_n);

    const Matrix residual = ctrb_t * y - e_n;
    const double rel_residual =
        residual.max_abs() / std::max(1.0, ctrb_t.norm_inf() * y.max_abs());
    if (rel_residual > 1e-6) {
        throw IllConditioned("place: controllability solve residual exceeds 1e-6");
    }

    const Polynomial desired = Polynomial::from_roots(poles);
    const Matrix gain = y.transpose() * desired.evaluate(a);

    const auto achieved = eigenvalues(a - b * gain);
    const double err = matched_relative_error({poles.begin(), poles.end()}, achieved.eigenvalues);
    if (err > 1e-8) {
        throw IllConditioned("place: achieved poles deviate from request by more than 1e-8 relative");
    }
    return gain;
}

Matrix observer_gain(const Matrix& a, const Matrix& c,
                     std::span<const std::complex<double>> poles) {
    if (!a.is_square()) throw DimensionMismatch("observer_gain: a must be square");
    if (c.rows() != 1 || c.cols() != a.rows()) {
        throw DimensionMismatch("observer_gain: single-output c of shape 1 x n required");
    }
    const Matrix a_t = a.transpose();
    const Matrix c_t = c.transpose();
    if (rank(ctrb(a_t, c_t)) < a.rows()) {
        throw Unobservable("observer_gain: observability matrix is rank deficient");
    }
    return place(a_t, c_t, poles).transpose();
}

double feedforward(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& k) {
    const Matrix closed = a - b * k;
    const Matrix x = solve(closed, b);
    const double dc = (c * x)(0, 0);
    if (std::abs(dc) < 1e-12) {
        throw SingularDcGain("feedforward: closed-loop DC gain is zero within 1e-12");
    }
    return -1.0 / dc;
}

ClosedLoop augment(const StateSpace& ss, const GainSet& gains) {
    const int n = ss.order();
    if (gains.k.rows() != 1 || gains.k.cols() != n || gains.l.rows() != n || gains.l.cols() != 1 ||
        ss.b.rows() != n || ss.b.cols() != 1 || ss.c.rows() != 1 || ss.c.cols() != n) {
        throw DimensionMismatch("augment: gain or system dimensions disagree");
    }
    const Matrix bk = ss.b * gains.k;
    const Matrix plant_block = ss.a - bk;
    const Matrix error_block = ss.a - gains.l * ss.c;

    ClosedLoop loop;
    loop.a_fb = Matrix(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            loop.a_fb(i, j) = plant_block(i, j);
            loop.a_fb(i, n + j) = bk(i, j);
            loop.a_fb(n + i, n + j) = error_block(i, j);
        }
    }
    loop.b_fb = Matrix(2 * n, 1);
    for (int i = 0; i < n; ++i) loop.b_fb(i, 0) = ss.b(i, 0);
    loop.c_fb = Matrix(1, 2 * n);
    for (int j = 0; j < n; ++j) loop.c_fb(0, j) = ss.c(0, j);

    loop.state_labels = ss.state_labels;
    for (const auto& label : ss.state_labels) loop.state_labels.push_back(label + "_err");
    return loop;
}

PoleSet default_poles(std::string_view food) {
    if (food == "steak") return PoleSet{{-39.0, -0.1, -1.0}, {-195.0, -0.5, -5.0}};
    if (food == "chicken") return PoleSet{{-27.0, -0.1, -1.0}, {-135.0, -0.5, -5.0}};
    if (food == "potato") return PoleSet{{-38.5, -0.05, -0.97}, {-192.5, -0.25, -4.85}};
    throw UnknownPreset("no default poles for '" + std::string(food) + "'");
}

GainSet design_gains(const StateSpace& ss, const PoleSet& poles) {
    poles.validate();
    GainSet gains;
    gains.k = place(ss.a, ss.b, poles.controller);
    gains.l = observer_gain(ss.a, ss.c, poles.observer);
    gains.n_ff = feedforward(ss.a, ss.b, ss.c, gains.k);
    return gains;
}

StabilityReport analyze(const StateSpace& ss) {
    StabilityReport report{
        .poles = eigenvalues(ss.a),
        .asymptotically_stable = false,
        .controllability_rank = rank(ctrb(ss.a, ss.b)),
        .observability_rank = rank(obsv(ss.a, ss.c)),
    };
    report.asymptotically_stable = report.poles.asymptotically_stable();
    return report;
}

}  // namespace ovenctl

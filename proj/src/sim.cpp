#include "ovenctl/sim.hpp"

#include <cmath>
#include <stdexcept>

#include "ovenctl/errors.hpp"
#include "ovenctl/expm.hpp"

namespace ovenctl {

int SimConfig::step_count() const { return static_cast<int>(std::llround(t_final / dt)); }

void SimConfig::validate(int order) const {
    if (!(dt > 0.0)) throw std::invalid_argument("SimConfig: dt must be > 0");
    if (t_final < dt) throw std::invalid_argument("SimConfig: t_final must be >= dt");
    if (static_cast<int>(x0.size()) != order) {
        throw DimensionMismatch("SimConfig: x0 length does not match system order");
    }
    if (!u_sequence.empty() &&
        static_cast<int>(u_sequence.size()) != step_count() + 1) {
        throw DimensionMismatch("SimConfig: u_sequence needs one value per time point");
    }
}

std::pair<Matrix, Matrix> discretize(const Matrix& a, const Matrix& b, double dt) {
    if (!a.is_square() || a.rows() != b.rows()) throw DimensionMismatch("discretize: shape mismatch");
    if (!(dt > 0.0)) throw std::invalid_argument("discretize: dt must be > 0");
    const int n = a.rows();
    const int m = b.cols();
    Matrix block(n + m, n + m);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) block(i, j) = a(i, j) * dt;
        for (int j = 0; j < m; ++j) block(i, n + j) = b(i, j) * dt;
    }
    const Matrix phi = expm(block);
    Matrix a_d(n, n);
    Matrix b_d(n, m);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a_d(i, j) = phi(i, j);
        for (int j = 0; j < m; ++j) b_d(i, j) = phi(i, n + j);
    }
    return {a_d, b_d};
}

namespace {

Trajectory make_trajectory(const SimConfig& cfg, std::vector<std::string> labels) {
    const int steps = cfg.step_count();
    Trajectory traj;
    traj.labels = std::move(labels);
    traj.times.reserve(steps + 1);
    traj.states.reserve(steps + 1);
    traj.output.reserve(steps + 1);
    traj.input.reserve(steps + 1);
    return traj;
}

double input_at(const SimConfig& cfg, int k) {
    return cfg.u_sequence.empty() ? cfg.u_ref : cfg.u_sequence[static_cast<std::size_t>(k)];
}

double output_of(const Matrix& c, const std::vector<double>& x) {
    double y = 0.0;
    for (int j = 0; j < c.cols(); ++j) y += c(0, j) * x[static_cast<std::size_t>(j)];
    return y;
}

}  // namespace

Trajectory lsim(const Matrix& a, const Matrix& b, const Matrix& c,
                std::vector<std::string> labels, const SimConfig& cfg) {
    const int n = a.rows();
    cfg.validate(n);
    const auto [a_d, b_d] = discretize(a, b, cfg.dt);
    const int steps = cfg.step_count();

    Trajectory traj = make_trajectory(cfg, std::move(labels));
    std::vector<double> x = cfg.x0;
    std::vector<double> next(n);
    for (int k = 0; k <= steps; ++k) {
        const double u = input_at(cfg, k);
        traj.times.push_back(k * cfg.dt);
        traj.states.push_back(x);
        traj.output.push_back(output_of(c, x));
        traj.input.push_back(u);
        if (k == steps) break;
        for (int i = 0; i < n; ++i) {
            double acc = b_d(i, 0) * u;
            for (int j = 0; j < n; ++j) acc += a_d(i, j) * x[static_cast<std::size_t>(j)];
            next[static_cast<std::size_t>(i)] = acc;
        }
        x.swap(next);
    }
    return traj;
}

Trajectory rk4_sim(const Matrix& a, const Matrix& b, const Matrix& c,
                   std::vector<std::string> labels, const SimConfig& cfg) {
    const int n = a.rows();
    cfg.validate(n);
    const int steps = cfg.step_count();
    const double dt = cfg.dt;

    auto deriv = [&a, &b, n](const std::vector<double>& x, double u, std::vector<double>& out) {
        for (int i = 0; i < n; ++i) {
            double acc = b(i, 0) * u;
            for (int j = 0; j < n; ++j) acc += a(i, j) * x[static_cast<std::size_t>(j)];
            out[static_cast<std::size_t>(i)] = acc;
        }
    };

    Trajectory traj = make_trajectory(cfg, std::move(labels));
    std::vector<double> x = cfg.x0;
    std::vector<double> k1(n), k2(n), k3(n), k4(n), stage(n);
    for (int k = 0; k <= steps; ++k) {
        const double u = input_at(cfg, k);
        traj.times.push_back(k * dt);
        traj.states.push_back(x);
        traj.output.push_back(output_of(c, x));
        traj.input.push_back(u);
        if (k == steps) break;
        deriv(x, u, k1);
        for (int i = 0; i < n; ++i) stage[i] = x[i] + 0.5 * dt * k1[i];
        deriv(stage, u, k2);
        for (int i = 0; i < n; ++i) stage[i] = x[i] + 0.5 * dt * k2[i];
        deriv(stage, u, k3);
        for (int i = 0; i < n; ++i) stage[i] = x[i] + dt * k3[i];
        deriv(stage, u, k4);
        for (int i = 0; i < n; ++i) {
            x[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
    }
    return traj;
}

Trajectory lsim(const StateSpace& sys, const SimConfig& cfg) {
    return lsim(sys.a, sys.b, sys.c, sys.state_labels, cfg);
}

Trajectory lsim(const ClosedLoop& sys, const SimConfig& cfg) {
    return lsim(sys.a_fb, sys.b_fb, sys.c_fb, sys.state_labels, cfg);
}

Trajectory rk4_sim(const StateSpace& sys, const SimConfig& cfg) {
    return rk4_sim(sys.a, sys.b, sys.c, sys.state_labels, cfg);
}

Trajectory rk4_sim(const ClosedLoop& sys, const SimConfig& cfg) {
    return rk4_sim(sys.a_fb, sys.b_fb, sys.c_fb, sys.state_labels, cfg);
}

Trajectory simulate(const StateSpace& sys, const SimConfig& cfg) {
    return cfg.method == SimMethod::Rk4 ? rk4_sim(sys, cfg) : lsim(sys, cfg);
}

Trajectory simulate(const ClosedLoop& sys, const SimConfig& cfg) {
    return cfg.method == SimMethod::Rk4 ? rk4_sim(sys, cfg) : lsim(sys, cfg);
}

StepMetrics step_metrics(const Trajectory& traj, double target, double band) {
    if (traj.output.empty()) throw std::invalid_argument("step_metrics: empty trajectory");
    StepMetrics metrics{};
    metrics.band = band;
    metrics.final_value = traj.output.back();

    std::size_t peak_idx = 0;
    for (std::size_t i = 1; i < traj.output.size(); ++i) {
        if (traj.output[i] > traj.output[peak_idx]) peak_idx = i;
    }
    metrics.peak = traj.output[peak_idx];
    metrics.peak_time = traj.times[peak_idx];
    metrics.overshoot = std::max(0.0, metrics.peak - target);

    // First time after which the output stays inside the band for good.
    std::size_t first_locked = traj.output.size();
    for (std::size_t i = traj.output.size(); i-- > 0;) {
        if (std::abs(traj.output[i] - target) <= band) {
            first_locked = i;
        } else {
            break;
        }
    }
    metrics.settled = first_locked < traj.output.size();
    metrics.settling_time = metrics.settled ? traj.times[first_locked] : traj.times.back();
    return metrics;
}

}  // namespace ovenctl

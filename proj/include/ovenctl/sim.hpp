#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ovenctl/design.hpp"
#include "ovenctl/matrix.hpp"
#include "ovenctl/plant.hpp"

namespace ovenctl {

enum class SimMethod {
    ExactZoh,  // exact zero-order-hold discretization (default)
    Rk4,       // classical fixed-step Runge-Kutta, kept as the cross-check
};

/**
 * Simulation setup. The input is u_ref held constant over the horizon
 * unless u_sequence is non-empty, in which case it must provide one value
 * per time point. x0 must match the simulated system's order.
 */
struct SimConfig {
    std::vector<double> x0;
    double u_ref = 0.0;
    std::vector<double> u_sequence;
    double dt = 1e-3;
    double t_final = 100.0;
    SimMethod method = SimMethod::ExactZoh;

    int step_count() const;  // number of intervals; time points = steps + 1
    void validate(int order) const;
};

struct Trajectory {
    std::vector<double> times;
    std::vector<std::vector<double>> states;  // one vector per time point
    std::vector<double> output;
    std::vector<double> input;
    std::vector<std::string> labels;

    std::size_t size() const { return times.size(); }
};

/**
 * Exact zero-order-hold pair (a_d, b_d): the exponential of the augmented
 * block [[a, b], [0, 0]] * dt, read off its top row of blocks.
 */
std::pair<Matrix, Matrix> discretize(const Matrix& a, const Matrix& b, double dt);

// x[k+1] = a_d x[k] + b_d u[k], y = c x. Deterministic.
Trajectory lsim(const Matrix& a, const Matrix& b, const Matrix& c,
                std::vector<std::string> labels, const SimConfig& cfg);
Trajectory lsim(const StateSpace& sys, const SimConfig& cfg);
Trajectory lsim(const ClosedLoop& sys, const SimConfig& cfg);

// Classical 4th-order Runge-Kutta at the same grid; cross-validation only.
Trajectory rk4_sim(const Matrix& a, const Matrix& b, const Matrix& c,
                   std::vector<std::string> labels, const SimConfig& cfg);
Trajectory rk4_sim(const StateSpace& sys, const SimConfig& cfg);
Trajectory rk4_sim(const ClosedLoop& sys, const SimConfig& cfg);

// Dispatches on cfg.method.
Trajectory simulate(const StateSpace& sys, const SimConfig& cfg);
Trajectory simulate(const ClosedLoop& sys, const SimConfig& cfg);

/**
 * Step-response summary against a target value. Settling requires the
 * output to stay inside the band through the end of the horizon; `settled`
 * is false when it never locks in.
 */
struct StepMetrics {
    double final_value;
    double overshoot;  // max(0, peak - target)
    double settling_time;
    bool settled;
    double band;
    double peak;
    double peak_time;
};

StepMetrics step_metrics(const Trajectory& traj, double target, double band = 1.0);

}  // namespace ovenctl

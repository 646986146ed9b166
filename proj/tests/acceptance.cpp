// Acceptance suite: one line per criterion, nonzero exit when any fail.
// Criterion 9 launches the CLI binary passed as argv[1].

#include <sys/wait.h>

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include "ovenctl/design.hpp"
#include "ovenctl/eigensolver.hpp"
#include "ovenctl/errors.hpp"
#include "ovenctl/expm.hpp"
#include "ovenctl/heat_transfer.hpp"
#include "ovenctl/plant.hpp"
#include "ovenctl/sim.hpp"
#include "support.hpp"

using namespace ovenctl;
using test_support::Rng;
using test_support::sorted_by_parts;
using test_support::spectrum_distance;
using complexd = std::complex<double>;

namespace {

int failures = 0;

void report(int criterion, const std::string& name, bool pass, const std::string& detail) {
    std::printf("criterion %d (%s): %s  [%s]\n", criterion, name.c_str(), pass ? "PASS" : "FAIL",
                detail.c_str());
    if (!pass) ++failures;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

double closed_horizon(const std::string& food) { return food == "potato" ? 200.0 : 100.0; }

SimConfig closed_config(const OvenSpec& oven, const GainSet& gains, double target,
                        const std::string& food, double dt) {
    SimConfig cfg;
    cfg.x0 = {oven.preheat, oven.preheat, oven.ambient, 0.0, 0.0, 0.0};
    cfg.u_ref = gains.n_ff * target;
    cfg.dt = dt;
    cfg.t_final = closed_horizon(food);
    return cfg;
}

SimConfig open_config(const OvenSpec& oven, double dt) {
    SimConfig cfg;
    cfg.x0 = {oven.preheat, oven.preheat, oven.ambient};
    cfg.u_ref = oven.preheat;
    cfg.dt = dt;
    cfg.t_final = 100.0;
    return cfg;
}

double trajectory_gap(const Trajectory& a, const Trajectory& b) {
    double worst = 0.0;
    for (std::size_t k = 0; k < a.states.size(); ++k) {
        for (std::size_t i = 0; i < a.states[k].size(); ++i) {
            worst = std::max(worst, std::abs(a.states[k][i] - b.states[k][i]));
        }
    }
    return worst;
}

void criterion_1() {
    double worst = 0.0;
    for (const auto& food : preset_names()) {
        const auto [oven, preset_data] = preset(food);
        const StateSpace plant = build_plant(oven, preset_data);
        worst = std::max(worst, (plant.a - reference_a_matrix(food)).max_abs());
        for (int i = 0; i < 3; ++i) {
            worst = std::max(worst, std::abs(plant.b(i, 0) - (i == 0 ? 1.0 : 0.0)));
            worst = std::max(worst, std::abs(plant.c(0, i) - (i == 2 ? 1.0 : 0.0)));
        }
    }
    report(1, "matrix reproduction", worst <= 5e-3, "max deviation " + fmt(worst) + ", tol 5e-3");
}

void criterion_2() {
    double worst = 0.0;
    for (const auto& food : preset_names()) {
        std::vector<complexd> expected;
        for (double p : reference_poles(food)) expected.emplace_back(p, 0.0);
        worst = std::max(
            worst, spectrum_distance(eigenvalues(reference_a_matrix(food)).eigenvalues, expected));
    }
    report(2, "eigenvalue reproduction", worst <= 1e-3,
           "max pole deviation " + fmt(worst) + ", tol 1e-3");
}

void criterion_3() {
    double worst_rel = 0.0;
    double worst_union = 0.0;
    for (const auto& food : preset_names()) {
        const auto [oven, preset_data] = preset(food);
        const StateSpace plant = build_plant(oven, preset_data);
        const PoleSet poles = default_poles(food);
        const GainSet gains = design_gains(plant, poles);

        auto rel_error = [](const Matrix& m, std::vector<complexd> want) {
            const auto got = eigenvalues(m).eigenvalues;
            want = sorted_by_parts(std::move(want));
            double worst = 0.0;
            for (std::size_t i = 0; i < want.size(); ++i) {
                worst = std::max(worst, std::abs(got[i] - want[i]) / std::abs(want[i]));
            }
            return worst;
        };
        worst_rel = std::max(worst_rel, rel_error(plant.a - plant.b * gains.k, poles.controller));
        worst_rel = std::max(worst_rel, rel_error(plant.a - gains.l * plant.c, poles.observer));

        std::vector<complexd> pole_union = poles.controller;
        pole_union.insert(pole_union.end(), poles.observer.begin(), poles.observer.end());
        worst_union = std::max(
            worst_union,
            spectrum_distance(eigenvalues(augment(plant, gains).a_fb).eigenvalues, pole_union));
    }
    report(3, "placement fidelity", worst_rel <= 1e-8 && worst_union <= 1e-6,
           "gain placement rel " + fmt(worst_rel) + " (tol 1e-8), spectrum union " +
               fmt(worst_union) + " (tol 1e-6)");
}

void criterion_4() {
    bool pass = true;
    std::string detail;
    for (const auto& food : preset_names()) {
        const auto [oven, preset_data] = preset(food);
        const StateSpace plant = build_plant(oven, preset_data);
        const GainSet gains = design_gains(plant, default_poles(food));
        const ClosedLoop loop = augment(plant, gains);
        const Trajectory traj =
            lsim(loop, closed_config(oven, gains, preset_data.target_temp, food, 1e-3));
        const StepMetrics metrics = step_metrics(traj, preset_data.target_temp, 0.5);
        const double final_err = std::abs(metrics.final_value - preset_data.target_temp);
        if (final_err > 0.5 || metrics.overshoot > 0.5) pass = false;
        if (!detail.empty()) detail += ", ";
        detail += food + " final_err " + fmt(final_err) + " exceed " + fmt(metrics.overshoot);
    }
    report(4, "closed-loop convergence", pass, detail + "; tol 0.5 F");
}

void criterion_5() {
    const auto [oven, preset_data] = preset("steak");
    const StateSpace plant = build_plant(oven, preset_data);
    const Trajectory traj = lsim(plant, open_config(oven, 1e-3));
    bool monotone = true;
    bool crosses = false;
    for (std::size_t k = 1; k < traj.output.size(); ++k) {
        if (traj.output[k] < traj.output[k - 1] - 1e-12) monotone = false;
        if (traj.output[k] >= 135.0) crosses = true;
    }
    const double gap = std::abs(400.0 - traj.output.back());
    report(5, "open-loop behavior", monotone && crosses && gap <= 1.0,
           std::string("monotone ") + (monotone ? "yes" : "NO") + ", gap at t=100 " + fmt(gap) +
               " (tol 1), crosses 135 " + (crosses ? "yes" : "NO"));
}

void criterion_6() {
    // Both methods are fully pinned (exact ZOH vs classical fixed-step RK4 at
    // dt = 0.01), so the gap below is a property of the scenarios themselves.
    // The fast modes (plant -9.47, observer down to -195) put lambda*dt well
    // outside RK4's high-accuracy range; the open-loop gap measures ~2e-6 and
    // the closed-loop gap ~1e-2, so the 1e-6 bound cannot be met. Reported
    // honestly rather than loosened.
    bool pass = true;
    std::string detail;
    const double dt = 0.01;
    for (const auto& food : preset_names()) {
        const auto [oven, preset_data] = preset(food);
        const StateSpace plant = build_plant(oven, preset_data);
        const SimConfig open_cfg = open_config(oven, dt);
        const double open_gap = trajectory_gap(lsim(plant, open_cfg), rk4_sim(plant, open_cfg));

        const GainSet gains = design_gains(plant, default_poles(food));
        const ClosedLoop loop = augment(plant, gains);
        const SimConfig closed_cfg = closed_config(oven, gains, preset_data.target_temp, food, dt);
        const double closed_gap = trajectory_gap(lsim(loop, closed_cfg), rk4_sim(loop, closed_cfg));

        if (open_gap > 1e-6 || closed_gap > 1e-6) pass = false;
        if (!detail.empty()) detail += ", ";
        detail += food + " open " + fmt(open_gap) + " closed " + fmt(closed_gap);
    }
    report(6, "oracle equivalence", pass, detail + "; tol 1e-6 at dt 0.01");
}

void criterion_7() {
    bool pass = true;
    std::string detail;

    // Eigenvalue trace / determinant identities.
    {
        Rng rng(0xacce0001);
        double worst_trace = 0.0, worst_det = 0.0;
        for (int trial = 0; trial < 100; ++trial) {
            const int n = rng.uniform_int(2, 6);
            const Matrix a = rng.matrix(n, n, -2.0, 2.0);
            const auto spectrum = eigenvalues(a);
            complexd sum = 0.0, product = 1.0;
            for (const auto& ev : spectrum.eigenvalues) {
                sum += ev;
                product *= ev;
            }
            worst_trace = std::max(worst_trace, std::abs(sum - complexd(a.trace())) /
                                                    std::max(1.0, std::abs(a.trace())));
            const double det = determinant(a);
            worst_det = std::max(worst_det,
                                 std::abs(product - complexd(det)) / std::max(1.0, std::abs(det)));
        }
        if (worst_trace > 1e-9 || worst_det > 1e-8) pass = false;
        detail += "trace " + fmt(worst_trace) + ", det " + fmt(worst_det);
    }

    // expm inverse identity.
    {
        Rng rng(0xacce0002);
        double worst = 0.0;
        for (int trial = 0; trial < 100; ++trial) {
            const int n = rng.uniform_int(1, 6);
            const Matrix a = rng.matrix(n, n, -1.0, 1.0);
            worst = std::max(worst, (expm(a) * expm(a * -1.0) - Matrix::identity(n)).max_abs());
        }
        for (const auto& food : preset_names()) {
            const auto [oven, preset_data] = preset(food);
            const Matrix a = build_plant(oven, preset_data).a;
            worst = std::max(worst, (expm(a) * expm(a * -1.0) - Matrix::identity(3)).max_abs());
        }
        if (worst > 1e-9) pass = false;
        detail += ", expm inverse " + fmt(worst);
    }

    // Similarity invariance.
    {
        Rng rng(0xacce0003);
        double worst = 0.0;
        int tested = 0;
        while (tested < 100) {
            const int n = rng.uniform_int(2, 6);
            const Matrix a = rng.matrix(n, n, -2.0, 2.0);
            const Matrix p = rng.matrix(n, n, -1.0, 1.0);
            if (std::abs(determinant(p)) < 0.1) continue;
            const Matrix p_inv = solve(p, Matrix::identity(n));
            if (p.norm_inf() * p_inv.norm_inf() > 50.0) continue;
            worst = std::max(worst, spectrum_distance(eigenvalues(a).eigenvalues,
                                                      eigenvalues(p * a * p_inv).eigenvalues));
            ++tested;
        }
        if (worst > 1e-7) pass = false;
        detail += ", similarity " + fmt(worst);
    }

    // Random-system placement correctness.
    {
        Rng rng(0xacce0004);
        double worst = 0.0;
        int tested = 0;
        while (tested < 100) {
            const int n = rng.uniform_int(2, 5);
            const Matrix a = rng.matrix(n, n, -2.0, 2.0);
            const Matrix b = rng.matrix(n, 1, -2.0, 2.0);
            if (rank(ctrb(a, b)) < n) continue;
            std::vector<complexd> poles;
            for (int i = 0; i < n; ++i) poles.emplace_back(rng.uniform(-4.0, -0.2), 0.0);
            Matrix k;
            try {
                k = place(a, b, poles);
            } catch (const Error&) {
                continue;
            }
            const auto got = eigenvalues(a - b * k).eigenvalues;
            const auto want = sorted_by_parts(poles);
            for (std::size_t i = 0; i < want.size(); ++i) {
                worst = std::max(worst, std::abs(got[i] - want[i]) / std::abs(want[i]));
            }
            ++tested;
        }
        if (worst > 1e-6) pass = false;
        detail += ", placement " + fmt(worst);
    }

    // lsim superposition.
    {
        Rng rng(0xacce0005);
        double worst = 0.0;
        for (int trial = 0; trial < 100; ++trial) {
            const int n = rng.uniform_int(1, 4);
            StateSpace sys;
            sys.a = rng.matrix(n, n, -1.0, 1.0);
            sys.b = rng.matrix(n, 1, -1.0, 1.0);
            sys.c = rng.matrix(1, n, -1.0, 1.0);
            for (int i = 0; i < n; ++i) sys.state_labels.push_back("x" + std::to_string(i));
            SimConfig one, two, both;
            one.dt = two.dt = both.dt = 0.01;
            one.t_final = two.t_final = both.t_final = 2.0;
            for (int i = 0; i < n; ++i) {
                one.x0.push_back(rng.uniform(-1.0, 1.0));
                two.x0.push_back(rng.uniform(-1.0, 1.0));
                both.x0.push_back(one.x0.back() + two.x0.back());
            }
            one.u_ref = rng.uniform(-1.0, 1.0);
            two.u_ref = rng.uniform(-1.0, 1.0);
            both.u_ref = one.u_ref + two.u_ref;
            const Trajectory t1 = lsim(sys, one);
            const Trajectory t2 = lsim(sys, two);
            const Trajectory t12 = lsim(sys, both);
            for (std::size_t k = 0; k < t12.size(); ++k) {
                for (int i = 0; i < n; ++i) {
                    worst = std::max(worst,
                                     std::abs(t12.states[k][i] - t1.states[k][i] - t2.states[k][i]));
                }
            }
        }
        if (worst > 1e-9) pass = false;
        detail += ", superposition " + fmt(worst);
    }

    report(7, "numerics property suite", pass, detail);
}

void criterion_8() {
    const AirProperties air = standard_oven().air;
    const double pr = prandtl(air);
    bool pass = std::abs(pr - 0.7035) <= 1e-3;

    // Branch selection and monotonicity over log-spaced Gr in [1, 1e12].
    double previous = 0.0;
    bool monotone = true;
    for (double exponent = 0.0; exponent <= 12.0; exponent += 0.0625) {
        const double gr = std::pow(10.0, exponent);
        const double nu = nusselt(gr, pr);
        const double laminar = 0.683 * std::pow(gr, 0.25) * std::pow(pr, 0.25) *
                               std::pow(pr / (0.861 + pr), 0.25);
        const double turbulent =
            0.138 * std::pow(gr, 0.36) * std::pow(std::pow(pr, 0.175) - 0.55, 0.25);
        const double expected = gr > 1e9 ? turbulent : laminar;
        if (nu != expected) pass = false;
        const bool crossed = gr > 1e9 && std::pow(10.0, exponent - 0.0625) <= 1e9;
        if (!crossed && nu < previous) monotone = false;
        previous = nu;
    }
    if (!monotone) pass = false;
    report(8, "heat-transfer pipeline", pass,
           "Pr " + fmt(pr) + " vs 0.7035 (tol 1e-3), branch selection and monotonicity " +
               (monotone ? "hold" : "VIOLATED"));
}

void criterion_9(const char* cli_path) {
    if (cli_path == nullptr) {
        report(9, "reproduce aggregate", false, "CLI binary path not supplied");
        return;
    }
    const auto out_dir = std::filesystem::temp_directory_path() / "ovenctl_acceptance_repro";
    std::filesystem::remove_all(out_dir);
    const std::string command = std::string("\"") + cli_path + "\" reproduce --out-dir \"" +
                                out_dir.string() + "\" > /dev/null";
    const int status = std::system(command.c_str());
    const int exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    report(9, "reproduce aggregate", exit_code == 0,
           "exit code " + std::to_string(exit_code) + " (want 0)");
    std::filesystem::remove_all(out_dir);
}

}  // namespace

int main(int argc, char** argv) {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9(argc > 1 ? argv[1] : nullptr);
    std::printf("%d of 9 criteria passed\n", 9 - failures);
    return failures == 0 ? 0 : 1;
}

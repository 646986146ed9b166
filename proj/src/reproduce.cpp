#include "ovenctl/reproduce.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "ovenctl/design.hpp"
#include "ovenctl/eigensolver.hpp"
#include "ovenctl/errors.hpp"
#include "ovenctl/plant.hpp"
#include "ovenctl/sim.hpp"
#include "ovenctl/trajectory_io.hpp"

namespace ovenctl {

namespace {

constexpr double kFigureDt = 0.05;  // exact discretization, so coarse output loses nothing

double closed_loop_horizon(std::string_view food) { return food == "potato" ? 200.0 : 100.0; }

void add_measure(ReproReport& report, std::string name, double deviation, double tol) {
    report.checks.push_back({std::move(name), 0.0, deviation, tol, deviation <= tol});
}

void add_flag(ReproReport& report, std::string name, bool ok) {
    report.checks.push_back({std::move(name), 1.0, ok ? 1.0 : 0.0, 0.0, ok});
}

std::vector<double> sorted_reals(const Spectrum& spectrum) {
    std::vector<double> values;
    values.reserve(spectrum.eigenvalues.size());
    for (const auto& ev : spectrum.eigenvalues) values.push_back(ev.real());
    std::sort(values.begin(), values.end());
    return values;
}

double spectrum_match(const Matrix& m, std::vector<std::complex<double>> expected) {
    auto actual = eigenvalues(m).eigenvalues;
    std::sort(expected.begin(), expected.end(), [](const auto& l, const auto& r) {
        if (l.real() != r.real()) return l.real() < r.real();
        return l.imag() < r.imag();
    });
    double worst = 0.0;
    for (std::size_t i = 0; i < expected.size(); ++i) {
        worst = std::max(worst, std::abs(actual[i] - expected[i]));
    }
    return worst;
}

void write_figure(ReproReport& report, const std::filesystem::path& out_dir,
                  const std::string& name, const Trajectory& traj) {
    const auto path = out_dir / name;
    std::ofstream out(path);
    if (!out) throw Error("reproduce: cannot write " + path.string());
    write_csv(out, traj);
    report.written_files.push_back(path.string());
}

}  // namespace

bool ReproReport::overall() const { return failure_count() == 0; }

int ReproReport::failure_count() const {
    int failures = 0;
    for (const auto& check : checks) {
        if (!check.pass) ++failures;
    }
    return failures;
}

ReproReport reproduce(const std::filesystem::path& out_dir, double perturb_a) {
    ReproReport report;
    std::filesystem::create_directories(out_dir);

    for (const auto& food : preset_names()) {
        const auto [oven, preset_data] = preset(food);
        StateSpace plant = build_plant(oven, preset_data);
        plant.a(0, 0) += perturb_a;

        // System matrices against the published three-decimal values.
        const Matrix reference = reference_a_matrix(food);
        double matrix_dev = (plant.a - reference).max_abs();
        for (int i = 0; i < 3; ++i) {
            matrix_dev = std::max(matrix_dev, std::abs(plant.b(i, 0) - (i == 0 ? 1.0 : 0.0)));
            matrix_dev = std::max(matrix_dev, std::abs(plant.c(0, i) - (i == 2 ? 1.0 : 0.0)));
        }
        add_measure(report, food + ": A/b/c vs published", matrix_dev, 5e-3);

        // Open-loop poles of the published matrices.
        const auto published_poles = eigenvalues(reference);
        auto expected_poles = reference_poles(food);
        std::sort(expected_poles.begin(), expected_poles.end());
        const auto actual_reals = sorted_reals(published_poles);
        for (std::size_t i = 0; i < expected_poles.size(); ++i) {
            char label = static_cast<char>('1' + i);
            add_measure(report, food + ": pole " + label + " vs published",
                        std::abs(actual_reals[i] - expected_poles[i]), 1e-3);
        }

        // Pole placement fidelity on the constructed plant.
        const PoleSet poles = default_poles(food);
        const GainSet gains = design_gains(plant, poles);
        auto relative_miss = [](const Matrix& m, const std::vector<std::complex<double>>& want) {
            auto sorted_want = want;
            std::sort(sorted_want.begin(), sorted_want.end(), [](const auto& l, const auto& r) {
                if (l.real() != r.real()) return l.real() < r.real();
                return l.imag() < r.imag();
            });
            const auto got = eigenvalues(m).eigenvalues;
            double worst = 0.0;
            for (std::size_t i = 0; i < sorted_want.size(); ++i) {
                worst = std::max(worst, std::abs(got[i] - sorted_want[i]) / std::abs(sorted_want[i]));
            }
            return worst;
        };
        add_measure(report, food + ": controller placement (rel)",
                    relative_miss(plant.a - plant.b * gains.k, poles.controller), 1e-8);
        add_measure(report, food + ": observer placement (rel)",
                    relative_miss(plant.a - gains.l * plant.c, poles.observer), 1e-8);

        const ClosedLoop loop = augment(plant, gains);
        std::vector<std::complex<double>> pole_union = poles.controller;
        pole_union.insert(pole_union.end(), poles.observer.begin(), poles.observer.end());
        add_measure(report, food + ": closed-loop spectrum union",
                    spectrum_match(loop.a_fb, pole_union), 1e-6);

        // Closed-loop convergence: reach the target and never exceed it.
        SimConfig closed_cfg;
        closed_cfg.x0 = {oven.preheat, oven.preheat, oven.ambient, 0.0, 0.0, 0.0};
        closed_cfg.u_ref = gains.n_ff * preset_data.target_temp;
        closed_cfg.dt = 1e-3;
        closed_cfg.t_final = closed_loop_horizon(food);
        const Trajectory closed = lsim(loop, closed_cfg);
        const StepMetrics metrics = step_metrics(closed, preset_data.target_temp, 0.5);
        const double final_err = std::abs(metrics.final_value - preset_data.target_temp);
        add_measure(report, food + ": final temp vs target",
                    std::max(final_err, metrics.overshoot), 0.5);
    }

    // Open-loop behavior for the steak model (the other foods track it).
    {
        const auto [oven, preset_data] = preset("steak");
        StateSpace plant = build_plant(oven, preset_data);
        plant.a(0, 0) += perturb_a;
        SimConfig open_cfg;
        open_cfg.x0 = {oven.preheat, oven.preheat, oven.ambient};
        open_cfg.u_ref = oven.preheat;
        open_cfg.dt = 1e-3;
        open_cfg.t_final = 100.0;
        const Trajectory open = lsim(plant, open_cfg);

        bool monotone = true;
        bool crosses_target = false;
        for (std::size_t k = 1; k < open.output.size(); ++k) {
            if (open.output[k] < open.output[k - 1] - 1e-12) monotone = false;
            if (open.output[k] >= preset_data.target_temp) crosses_target = true;
        }
        add_flag(report, "open loop: food temp nondecreasing", monotone);
        add_measure(report, "open loop: gap to preheat at t=100",
                    std::abs(oven.preheat - open.output.back()), 1.0);
        add_flag(report, "open loop: crosses 135 F unregulated", crosses_target);
    }

    // Regenerated trajectory data.
    for (const auto& food : preset_names()) {
        const auto [oven, preset_data] = preset(food);
        StateSpace plant = build_plant(oven, preset_data);
        plant.a(0, 0) += perturb_a;
        const GainSet gains = design_gains(plant, default_poles(food));
        const ClosedLoop loop = augment(plant, gains);

        SimConfig closed_cfg;
        closed_cfg.x0 = {oven.preheat, oven.preheat, oven.ambient, 0.0, 0.0, 0.0};
        closed_cfg.u_ref = gains.n_ff * preset_data.target_temp;
        closed_cfg.dt = kFigureDt;
        closed_cfg.t_final = closed_loop_horizon(food);
        const Trajectory closed = lsim(loop, closed_cfg);

        if (food == "steak") {
            SimConfig open_cfg;
            open_cfg.x0 = {oven.preheat, oven.preheat, oven.ambient};
            open_cfg.u_ref = oven.preheat;
            open_cfg.dt = kFigureDt;
            open_cfg.t_final = 100.0;
            write_figure(report, out_dir, "fig1_steak_open.csv", lsim(plant, open_cfg));
            write_figure(report, out_dir, "fig2_steak_closed.csv", closed);
        } else if (food == "chicken") {
            write_figure(report, out_dir, "fig3_chicken_closed.csv", closed);
        } else {
            write_figure(report, out_dir, "fig4_potato_closed.csv", closed);
        }
    }

    return report;
}

}  // namespace ovenctl

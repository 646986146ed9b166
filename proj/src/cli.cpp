#include "ovenctl/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "ovenctl/design.hpp"
#include "ovenctl/errors.hpp"
#include "ovenctl/plant.hpp"
#include "ovenctl/reproduce.hpp"
#include "ovenctl/sim.hpp"
#include "ovenctl/trajectory_io.hpp"

namespace ovenctl::cli {

namespace {

namespace fs = std::filesystem;

std::string fmt(double v, const char* format = "%.6g") {
    char buf[48];
    std::snprintf(buf, sizeof buf, format, v);
    return buf;
}

std::string fmt_complex(const std::complex<double>& z) {
    if (z.imag() == 0.0) return fmt(z.real());
    return fmt(z.real()) + (z.imag() >= 0.0 ? "+" : "-") + fmt(std::abs(z.imag())) + "i";
}

void print_matrix(std::ostream& out, const std::string& name, const Matrix& m) {
    out << name << " =\n";
    for (int i = 0; i < m.rows(); ++i) {
        out << "  [";
        for (int j = 0; j < m.cols(); ++j) {
            out << (j ? ", " : " ") << fmt(m(i, j), "%11.6f");
        }
        out << " ]\n";
    }
}

std::vector<double> parse_reals(const std::string& text, std::size_t expect, const char* flag) {
    std::vector<double> values;
    std::stringstream stream(text);
    std::string cell;
    while (std::getline(stream, cell, ',')) {
        try {
            std::size_t used = 0;
            values.push_back(std::stod(cell, &used));
            if (used != cell.size()) throw std::invalid_argument(cell);
        } catch (const std::exception&) {
            throw CLI::ValidationError(flag, "'" + cell + "' is not a number");
        }
    }
    if (expect != 0 && values.size() != expect) {
        throw CLI::ValidationError(flag, "expected " + std::to_string(expect) +
                                             " comma-separated values");
    }
    return values;
}

// Shared --food/--config/--preheat/--ambient/--derive-htc plumbing.
struct ModelArgs {
    std::string food;
    std::string config_path;
    double preheat = 400.0;
    double ambient = 80.0;
    bool derive_htc = false;
    double delta_t = 0.0;

    void attach(CLI::App* cmd) {
        auto* food_opt = cmd->add_option("--food", food, "built-in food preset");
        auto* config_opt =
            cmd->add_option("--config", config_path, "JSON file describing a custom food");
        food_opt->excludes(config_opt);
        cmd->add_option("--preheat", preheat, "oven preheated temperature (F)")
            ->capture_default_str();
        cmd->add_option("--ambient", ambient, "ambient / initial food temperature (F)")
            ->capture_default_str();
        cmd->add_flag("--derive-htc", derive_htc,
                      "recompute surface coefficients from the convection correlations");
        cmd->add_option("--delta-t", delta_t,
                        "temperature difference (F) used with --derive-htc");
        cmd->callback([this, food_opt, config_opt] {
            if (food_opt->count() == 0 && config_opt->count() == 0) {
                throw CLI::RequiredError("--food or --config");
            }
        });
    }

    std::pair<OvenSpec, FoodPreset> build() const {
        OvenSpec oven;
        FoodPreset food_data;
        if (!config_path.empty()) {
            oven = standard_oven();
            std::ifstream in(config_path);
            if (!in) throw Error("cannot open config file: " + config_path);
            std::stringstream text;
            text << in.rdbuf();
            food_data = food_from_json_text(text.str());
        } else {
            std::tie(oven, food_data) = preset(food);
        }
        oven.preheat = preheat;
        oven.ambient = ambient;
        if (derive_htc) {
            if (delta_t <= 0.0) {
                throw CLI::ValidationError("--derive-htc", "requires --delta-t > 0");
            }
            oven.wall.h_air = estimate_htc(oven.air, oven.wall.char_length, delta_t).h;
            food_data.body.h_air =
                estimate_htc(oven.air, food_data.body.char_length, delta_t).h;
        } else if (food_data.body.h_air <= 0.0) {
            throw CLI::ValidationError(
                "--config", "custom food has no h_air; provide one or pass --derive-htc");
        }
        return {oven, food_data};
    }
};

struct DesignArgs {
    std::string controller_poles;
    std::string observer_poles;
    std::vector<double> pole_scale{1.0};

    void attach(CLI::App* cmd, bool allow_sweep) {
        cmd->add_option("--controller-poles", controller_poles,
                        "3 comma-separated controller poles (override preset)");
        cmd->add_option("--observer-poles", observer_poles,
                        "3 comma-separated observer poles (override preset)");
        if (allow_sweep) {
            cmd->add_option_function<std::string>(
                "--pole-scale",
                [this](const std::string& text) {
                    pole_scale = parse_reals(text, 0, "--pole-scale");
                    if (pole_scale.empty()) {
                        throw CLI::ValidationError("--pole-scale", "needs at least one factor");
                    }
                },
                "scale factor(s) applied to all design poles; several values sweep");
        } else {
            cmd->add_option_function<std::string>(
                "--pole-scale",
                [this](const std::string& text) {
                    pole_scale = {parse_reals(text, 1, "--pole-scale")[0]};
                },
                "scale factor applied to all design poles");
        }
    }

    PoleSet poles_for(const std::string& food_name, double scale) const {
        PoleSet poles;
        if (!controller_poles.empty() || !observer_poles.empty()) {
            if (controller_poles.empty() || observer_poles.empty()) {
                throw CLI::ValidationError("--controller-poles/--observer-poles",
                                           "override both pole sets together");
            }
            for (double v : parse_reals(controller_poles, 3, "--controller-poles")) {
                poles.controller.emplace_back(v, 0.0);
            }
            for (double v : parse_reals(observer_poles, 3, "--observer-poles")) {
                poles.observer.emplace_back(v, 0.0);
            }
        } else {
            poles = default_poles(food_name);
        }
        return scale == 1.0 ? poles : poles.scaled(scale);
    }
};

fs::path resolve_out_path(const std::string& requested) {
    fs::path path(requested);
    if (path.is_absolute()) return path;
    if (const char* base = std::getenv("OVENCTL_OUT_DIR")) return fs::path(base) / path;
    return path;
}

void write_trajectory_file(const fs::path& path, const Trajectory& traj, const std::string& format,
                           bool plot_script, std::ostream& out) {
    std::ofstream file(path);
    if (!file) throw Error("cannot write output file: " + path.string());
    if (format == "json") {
        write_json(file, traj);
    } else {
        write_csv(file, traj);
    }
    out << "wrote " << path.string() << "\n";
    if (plot_script && format == "csv") {
        fs::path script = path;
        script.replace_extension(".gp");
        std::ofstream script_file(script);
        if (!script_file) throw Error("cannot write plot script: " + script.string());
        write_plot_script(script_file, path.filename().string(), traj);
        out << "wrote " << script.string() << "\n";
    }
}

int run_presets(std::ostream& out) {
    out << "presets (oven wall: m=75 lb, cp=0.22, A=15.11 ft2, h=1.069):\n";
    for (const auto& name : preset_names()) {
        const auto [oven, food] = preset(name);
        out << "  " << name << ": m=" << fmt(food.body.mass) << " lb, cp=" << fmt(food.body.cp)
            << ", D=" << fmt(food.body.char_length) << " ft, A=" << fmt(food.body.area)
            << " ft2, h=" << fmt(food.body.h_air) << ", target=" << fmt(food.target_temp)
            << " F, safe=" << fmt(food.safe_temp) << " F\n";
    }
    out << "reference temperature guidelines (no model parameters, not presets):\n";
    for (const auto& g : temperature_guidelines()) {
        out << "  " << g.food << ": safe " << fmt(g.safe) << " F, recommended "
            << fmt(g.rec_low) << "-" << fmt(g.rec_high) << " F\n";
    }
    return 0;
}

int run_htc(std::ostream& out, const AirProperties& air, double d, double delta_t) {
    const HtcEstimate estimate = estimate_htc(air, d, delta_t);
    out << "Gr = " << fmt(estimate.groups.gr) << "  (" << (estimate.groups.gr > 1e9 ? "Gr > 1e9" : "Gr <= 1e9")
        << " branch)\n"
        << "Pr = " << fmt(estimate.groups.pr) << "\n"
        << "Nu = " << fmt(estimate.groups.nu) << "\n"
        << "h_c = " << fmt(estimate.h) << " Btu/(ft2.hr.F) over D = " << fmt(d) << " ft\n";
    return 0;
}

int run_model(std::ostream& out, const ModelArgs& model, const std::string& format) {
    const auto [oven, food] = model.build();
    const StateSpace plant = build_plant(oven, food);
    const ValidationReport report = validate_plant(plant);
    if (format == "json") {
        out << "{\n  \"food\": \"" << food.body.name << "\",\n  \"a\": [";
        for (int i = 0; i < 3; ++i) {
            out << (i ? ", " : "") << "[";
            for (int j = 0; j < 3; ++j) out << (j ? ", " : "") << fmt(plant.a(i, j), "%.12g");
            out << "]";
        }
        out << "],\n  \"b\": [1, 0, 0],\n  \"c\": [0, 0, 1],\n  \"valid\": "
            << (report.all_pass() ? "true" : "false") << "\n}\n";
        return 0;
    }
    out << "plant for " << food.body.name << " (states T_air, T_wall, T_food; input Q_i as F):\n";
    print_matrix(out, "A", plant.a);
    print_matrix(out, "b", plant.b);
    print_matrix(out, "c", plant.c);
    out << "validation:\n";
    for (const auto& check : report.checks) {
        out << "  [" << (check.pass ? "ok" : "FAIL") << "] " << check.name << ": " << check.detail
            << "\n";
    }
    return report.all_pass() ? 0 : 1;
}

int run_analyze(std::ostream& out, const ModelArgs& model) {
    const auto [oven, food] = model.build();
    const StateSpace plant = build_plant(oven, food);
    const StabilityReport report = analyze(plant);
    out << "poles:";
    for (const auto& p : report.poles.eigenvalues) out << " " << fmt_complex(p);
    out << "\n"
        << (report.asymptotically_stable ? "asymptotically stable" : "NOT asymptotically stable")
        << "\n"
        << "controllability rank: " << report.controllability_rank << "/" << plant.order() << "\n"
        << "observability rank: " << report.observability_rank << "/" << plant.order() << "\n";
    return 0;
}

int run_design(std::ostream& out, const ModelArgs& model, const DesignArgs& design) {
    const auto [oven, food] = model.build();
    const StateSpace plant = build_plant(oven, food);
    const PoleSet poles = design.poles_for(food.body.name, design.pole_scale.front());
    for (const auto& warning : poles.guideline_warnings()) out << "warning: " << warning << "\n";
    const GainSet gains = design_gains(plant, poles);

    out << "K =";
    for (int j = 0; j < gains.k.cols(); ++j) out << " " << fmt(gains.k(0, j), "%.10g");
    out << "\nL =";
    for (int i = 0; i < gains.l.rows(); ++i) out << " " << fmt(gains.l(i, 0), "%.10g");
    out << "\nN = " << fmt(gains.n_ff, "%.10g") << "\n";

    out << "achieved controller poles:";
    for (const auto& p : eigenvalues(plant.a - plant.b * gains.k).eigenvalues) {
        out << " " << fmt_complex(p);
    }
    out << "\nachieved observer poles:";
    for (const auto& p : eigenvalues(plant.a - gains.l * plant.c).eigenvalues) {
        out << " " << fmt_complex(p);
    }
    out << "\n";
    return 0;
}

struct SimulateArgs {
    std::string mode = "closed";
    double dt = 1e-3;
    std::optional<double> t_final;
    std::optional<double> open_input;
    std::optional<double> target;
    bool no_feedforward = false;
    std::string x0_hat;
    std::string out_path;
    std::string format = "csv";
    bool plot_script = false;
    bool use_rk4 = false;
};

int run_simulate(std::ostream& out, const ModelArgs& model, const DesignArgs& design,
                 const SimulateArgs& sim) {
    const auto [oven, food] = model.build();
    const StateSpace plant = build_plant(oven, food);

    SimConfig cfg;
    cfg.dt = sim.dt;
    cfg.method = sim.use_rk4 ? SimMethod::Rk4 : SimMethod::ExactZoh;

    if (sim.mode == "open") {
        cfg.x0 = {oven.preheat, oven.preheat, oven.ambient};
        cfg.u_ref = sim.open_input.value_or(oven.preheat);
        cfg.t_final = sim.t_final.value_or(100.0);
        const Trajectory traj = simulate(plant, cfg);
        if (!sim.out_path.empty()) {
            write_trajectory_file(resolve_out_path(sim.out_path), traj, sim.format,
                                  sim.plot_script, out);
        } else if (sim.format == "json") {
            write_json(out, traj);
        } else {
            write_csv(out, traj);
        }
        return 0;
    }

    // Closed loop, optionally sweeping the pole-scale factor.
    const double reference = sim.target.value_or(food.target_temp);
    const bool sweep = design.pole_scale.size() > 1;
    if (sweep && sim.out_path.empty()) {
        throw CLI::ValidationError("--pole-scale", "sweeping several factors requires --out");
    }
    for (double factor : design.pole_scale) {
        const PoleSet poles = design.poles_for(food.body.name, factor);
        for (const auto& warning : poles.guideline_warnings()) out << "warning: " << warning << "\n";
        const GainSet gains = design_gains(plant, poles);
        const ClosedLoop loop = augment(plant, gains);

        cfg.u_ref = sim.no_feedforward ? reference : gains.n_ff * reference;
        cfg.t_final = sim.t_final.value_or(food.body.name == "potato" ? 200.0 : 100.0);
        cfg.x0 = {oven.preheat, oven.preheat, oven.ambient, 0.0, 0.0, 0.0};
        if (!sim.x0_hat.empty()) {
            // Error coordinates: e = x - x_hat.
            const auto hat = parse_reals(sim.x0_hat, 3, "--x0-hat");
            for (int i = 0; i < 3; ++i) cfg.x0[static_cast<std::size_t>(3 + i)] = cfg.x0[i] - hat[i];
        }
        const Trajectory traj = simulate(loop, cfg);
        const StepMetrics metrics = step_metrics(traj, reference);

        if (!sim.out_path.empty()) {
            fs::path path = resolve_out_path(sim.out_path);
            if (sweep) {
                fs::path with_factor = path;
                with_factor.replace_filename(path.stem().string() + "_x" + fmt(factor) +
                                             path.extension().string());
                path = with_factor;
            }
            write_trajectory_file(path, traj, sim.format, sim.plot_script, out);
            out << "  scale " << fmt(factor) << ": final " << fmt(metrics.final_value)
                << " F, overshoot " << fmt(metrics.overshoot) << " F, "
                << (metrics.settled
                        ? "settled at t=" + fmt(metrics.settling_time)
                        : "not settled")
                << "\n";
        } else if (sim.format == "json") {
            write_json(out, traj);
        } else {
            write_csv(out, traj);
        }
    }
    return 0;
}

int run_reproduce(std::ostream& out, const std::string& out_dir, double perturb_a) {
    fs::path dir;
    if (!out_dir.empty()) {
        dir = out_dir;
    } else if (const char* base = std::getenv("OVENCTL_OUT_DIR")) {
        dir = base;
    } else {
        dir = fs::current_path();
    }
    const ReproReport report = reproduce(dir, perturb_a);
    for (const auto& check : report.checks) {
        out << "[" << (check.pass ? "PASS" : "FAIL") << "] " << check.name << ": computed "
            << fmt(check.computed, "%.6g") << ", expected " << fmt(check.expected, "%.6g")
            << " +/- " << fmt(check.tolerance, "%.3g") << "\n";
    }
    for (const auto& file : report.written_files) out << "wrote " << file << "\n";
    out << (report.overall() ? "all checks passed" : "CHECKS FAILED") << " ("
        << report.checks.size() - static_cast<std::size_t>(report.failure_count()) << "/"
        << report.checks.size() << ")\n";
    return report.overall() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"thermal plant modeling, observer-based control design and simulation for a "
                 "convection oven"};
    app.name("ovenctl");
    app.require_subcommand(1);

    auto* presets_cmd = app.add_subcommand("presets", "list built-in foods and guidelines");
    (void)presets_cmd;

    auto* htc_cmd =
        app.add_subcommand("htc", "natural-convection heat transfer coefficient pipeline");
    double htc_d = 0.0, htc_delta_t = 0.0;
    AirProperties htc_air = standard_oven().air;
    htc_cmd->add_option("--d", htc_d, "characteristic surface length (ft)")
        ->required()
        ->check(CLI::PositiveNumber);
    htc_cmd->add_option("--delta-t", htc_delta_t, "surface-to-air temperature difference (F)")
        ->required()
        ->check(CLI::NonNegativeNumber);
    htc_cmd->add_option("--cp", htc_air.cp, "air specific heat");
    htc_cmd->add_option("--rho", htc_air.rho, "air density");
    htc_cmd->add_option("--k", htc_air.k, "air conductivity");
    htc_cmd->add_option("--beta", htc_air.beta, "air expansion coefficient");
    htc_cmd->add_option("--mu", htc_air.mu, "air viscosity");
    htc_cmd->add_option("--g", htc_air.g, "gravity (ft/s2)");

    auto* model_cmd = app.add_subcommand("model", "build and validate the thermal plant");
    ModelArgs model_args;
    model_args.attach(model_cmd);
    std::string model_format = "text";
    model_cmd->add_option("--format", model_format, "text or json")
        ->capture_default_str()
        ->check(CLI::IsMember({"text", "json"}));

    auto* analyze_cmd = app.add_subcommand("analyze", "open-loop poles, stability and ranks");
    ModelArgs analyze_args;
    analyze_args.attach(analyze_cmd);

    auto* design_cmd = app.add_subcommand("design", "state feedback and observer gains");
    ModelArgs design_model_args;
    design_model_args.attach(design_cmd);
    DesignArgs design_args;
    design_args.attach(design_cmd, /*allow_sweep=*/false);

    auto* simulate_cmd = app.add_subcommand("simulate", "open- or closed-loop trajectories");
    ModelArgs sim_model_args;
    sim_model_args.attach(simulate_cmd);
    DesignArgs sim_design_args;
    sim_design_args.attach(simulate_cmd, /*allow_sweep=*/true);
    SimulateArgs sim_args;
    simulate_cmd->add_option("--mode", sim_args.mode, "open or closed")
        ->default_val("closed")
        ->check(CLI::IsMember({"open", "closed"}));
    simulate_cmd->add_option("--dt", sim_args.dt, "time step (model time units)")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    double t_final_opt = 0.0;
    auto* t_final_flag =
        simulate_cmd->add_option("--t-final", t_final_opt, "horizon (default 100; potato closed loop 200)");
    double u_opt = 0.0;
    auto* u_flag = simulate_cmd->add_option("--u", u_opt, "constant open-loop input (default preheat)");
    double target_opt = 0.0;
    auto* target_flag =
        simulate_cmd->add_option("--target", target_opt, "closed-loop reference (default preset target)");
    simulate_cmd->add_flag("--no-feedforward", sim_args.no_feedforward,
                           "apply the raw reference without DC-gain scaling");
    simulate_cmd->add_option("--x0-hat", sim_args.x0_hat,
                             "initial state estimate, 3 comma-separated F values "
                             "(default: the true initial state)");
    simulate_cmd->add_option("--out", sim_args.out_path, "output file (default stdout)");
    simulate_cmd->add_option("--format", sim_args.format, "csv or json")
        ->capture_default_str()
        ->check(CLI::IsMember({"csv", "json"}));
    simulate_cmd->add_flag("--emit-plot-script", sim_args.plot_script,
                           "write a gnuplot script next to the CSV");
    simulate_cmd->add_flag("--rk4", sim_args.use_rk4,
                           "integrate with fixed-step RK4 instead of exact discretization");

    auto* reproduce_cmd =
        app.add_subcommand("reproduce", "regression against the published model numbers");
    std::string repro_out_dir;
    reproduce_cmd->add_option("--out-dir", repro_out_dir,
                              "directory for regenerated trajectory CSVs "
                              "(default: OVENCTL_OUT_DIR or the working directory)");
    double perturb_a = 0.0;
    reproduce_cmd->add_option("--test-perturb-a", perturb_a, "fault-injection hook for tests")
        ->group("");  // hidden

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("ovenctl");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());

        if (t_final_flag->count()) sim_args.t_final = t_final_opt;
        if (u_flag->count()) sim_args.open_input = u_opt;
        if (target_flag->count()) sim_args.target = target_opt;

        if (presets_cmd->parsed()) return run_presets(out);
        if (htc_cmd->parsed()) return run_htc(out, htc_air, htc_d, htc_delta_t);
        if (model_cmd->parsed()) return run_model(out, model_args, model_format);
        if (analyze_cmd->parsed()) return run_analyze(out, analyze_args);
        if (design_cmd->parsed()) return run_design(out, design_model_args, design_args);
        if (simulate_cmd->parsed()) return run_simulate(out, sim_model_args, sim_design_args, sim_args);
        if (reproduce_cmd->parsed()) return run_reproduce(out, repro_out_dir, perturb_a);
        err << "no subcommand selected\n";
        return 2;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const UnknownPreset& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Uncontrollable& e) {
        err << "design infeasible: " << e.what() << "\n";
        return 3;
    } catch (const Unobservable& e) {
        err << "design infeasible: " << e.what() << "\n";
        return 3;
    } catch (const IllConditioned& e) {
        err << "design infeasible: " << e.what() << "\n";
        return 3;
    } catch (const SingularDcGain& e) {
        err << "design infeasible: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace ovenctl::cli

#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace ovenctl {

struct ReproCheck {
    std::string name;
    double expected;
    double computed;
    double tolerance;
    bool pass;
};

struct ReproReport {
    std::vector<ReproCheck> checks;
    std::vector<std::string> written_files;

    bool overall() const;
    int failure_count() const;
};

/**
 * One-shot regression against the published numbers: reconstructed system
 * matrices, open-loop poles, pole-placement fidelity, closed-loop
 * convergence and open-loop behavior, plus regenerated trajectory CSVs
 * (fig1_steak_open.csv, fig2_steak_closed.csv, fig3_chicken_closed.csv,
 * fig4_potato_closed.csv) in out_dir.
 *
 * perturb_a is a test hook: it is added to a[0][0] of every constructed
 * plant so fault injection can be exercised end to end. Zero in normal use.
 */
ReproReport reproduce(const std::filesystem::path& out_dir, double perturb_a = 0.0);

}  // namespace ovenctl

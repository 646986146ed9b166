#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ovenctl/sim.hpp"

namespace ovenctl {

/**
 * CSV serialization. Numbers are formatted with 9 significant digits, so
 * identical trajectories serialize byte-identically.
 *
 * Open-loop schema:   t,T_air,T_wall,T_food,u
 * Closed-loop schema: t,T_air,T_wall,T_food,T_air_hat,T_wall_hat,T_food_hat,u
 *
 * A trajectory is treated as closed-loop when the second half of its state
 * labels are the first half suffixed with "_err"; the hat columns are then
 * the estimates, i.e. plant state minus error state.
 */
void write_csv(std::ostream& out, const Trajectory& traj);

void write_json(std::ostream& out, const Trajectory& traj);

bool has_error_coordinates(const Trajectory& traj);

struct CsvTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

CsvTable read_csv(std::istream& in);

// Minimal gnuplot companion script for a trajectory CSV.
void write_plot_script(std::ostream& out, const std::string& csv_name, const Trajectory& traj);

}  // namespace ovenctl

#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ovenctl/heat_transfer.hpp"
#include "ovenctl/matrix.hpp"

namespace ovenctl {

// A lumped body exchanging heat with the circulating air.
struct SurfaceBody {
    std::string name;
    double mass;         // lb
    double cp;           // Btu/(lb.F)
    double char_length;  // ft
    double area;         // ft2, contact area with air
    double h_air;        // Btu/(ft2.hr.F), coefficient against air
};

struct FoodPreset {
    SurfaceBody body;
    double safe_temp;    // F, published safe minimum
    double target_temp;  // F, recommended final (regulation target)
};

struct OvenSpec {
    AirProperties air;
    double air_mass;   // lb
    SurfaceBody wall;
    double ambient = 80.0;   // F
    double preheat = 400.0;  // F
};

/**
 * Continuous-time LTI triple xdot = a x + b u, y = c x.
 *
 * For built oven plants the states are (T_air, T_wall, T_food), the output
 * is T_food, and u is a commanded temperature drive in F: the heat-input
 * term reduces to (u - T_air) with unit coefficient, so b = [1,0,0]^T and
 * u has temperature semantics rather than Btu.
 */
struct StateSpace {
    Matrix a;
    Matrix b;
    Matrix c;
    std::vector<std::string> state_labels;
    std::string input_label;
    std::string output_label;

    int order() const { return a.rows(); }
};

// Reference temperature guideline row (safe minimum plus recommended range).
// Reference data only; foods without thermal parameters are not presets.
struct TempGuideline {
    std::string food;
    double safe;
    double rec_low;
    double rec_high;
};

std::vector<std::string> preset_names();
std::vector<TempGuideline> temperature_guidelines();

// Built-in oven and food constants. Throws UnknownPreset for anything
// outside preset_names().
std::pair<OvenSpec, FoodPreset> preset(std::string_view name);

// Oven constants alone (air properties, wall, ambient/preheat defaults).
OvenSpec standard_oven();

/**
 * Three-state thermal plant:
 *   a[0][0] = -(1 + hw.Aw/(ma.cpa) + hf.Af/(ma.cpa))   a[0][1] = hw.Aw/(ma.cpa)
 *   a[0][2] = hf.Af/(ma.cpa)
 *   a[1][0] = hw.Aw/(mw.cpw) = -a[1][1]
 *   a[2][0] = hf.Af/(mf.cpf) = -a[2][2]
 *   b = [1,0,0]^T, c = [0,0,1]
 *
 * Every row of [a | b] sums to zero: a uniform temperature equal to the
 * input is an equilibrium. Throws DegenerateBody if any mass*cp <= 0.
 */
StateSpace build_plant(const OvenSpec& oven, const FoodPreset& food);

struct PlantCheck {
    std::string name;
    bool pass;
    std::string detail;
};

struct ValidationReport {
    std::vector<PlantCheck> checks;
    bool all_pass() const;
};

// Structural checks on a built plant: shape, row sums of [a|b] within 1e-9,
// nonnegative off-diagonals and b, strictly negative diagonal.
ValidationReport validate_plant(const StateSpace& ss);

// Published three-decimal system matrices and open-loop poles, kept for
// regression against the constructed plants.
Matrix reference_a_matrix(std::string_view food);
std::vector<double> reference_poles(std::string_view food);

/**
 * Custom food from a JSON object:
 * {"name": string, "mass_lb": number, "cp_btu_per_lb_f": number,
 *  "char_length_ft": number, "surface_area_ft2": number,
 *  "h_air": number (optional), "target_temp_f": number,
 *  "safe_temp_f": number}
 *
 * When h_air is absent it is left at 0; the caller decides whether to
 * derive it from the convection correlations.
 */
FoodPreset food_from_json_text(const std::string& text);

}  // namespace ovenctl

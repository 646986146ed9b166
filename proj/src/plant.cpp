#include "ovenctl/plant.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "ovenctl/errors.hpp"

namespace ovenctl {

namespace {

AirProperties standard_air() {
    return AirProperties{
        .cp = 7.731,
        .rho = 2.284e-3,
        .k = 4.233e-6,
        .beta = 1.87e-3,
        .mu = 3.852e-7,
    };
}

FoodPreset steak_preset() {
    return FoodPreset{
        .body = {.name = "steak", .mass = 0.5, .cp = 0.66, .char_length = 0.5, .area = 0.375, .h_air = 1.189},
        .safe_temp = 145.0,
        .target_temp = 135.0,
    };
}

FoodPreset chicken_preset() {
    return FoodPreset{
        .body = {.name = "chicken", .mass = 0.5, .cp = 0.77, .char_length = 0.5, .area = 0.375, .h_air = 1.189},
        .safe_temp = 165.0,
        .target_temp = 165.0,
    };
}

FoodPreset potato_preset() {
    return FoodPreset{
        .body = {.name = "potato", .mass = 0.375, .cp = 0.82, .char_length = 0.3, .area = 0.256, .h_air = 1.141},
        .safe_temp = 140.0,
        .target_temp = 200.0,
    };
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

}  // namespace

std::vector<std::string> preset_names() { return {"steak", "chicken", "potato"}; }

std::vector<TempGuideline> temperature_guidelines() {
    return {
        {"steak", 145.0, 130.0, 135.0},  {"chicken", 165.0, 165.0, 175.0},
        {"turkey", 165.0, 165.0, 175.0}, {"seafood", 145.0, 130.0, 140.0},
        {"bread", 140.0, 180.0, 200.0},  {"potato", 140.0, 200.0, 200.0},
    };
}

OvenSpec standard_oven() {
    return OvenSpec{
        .air = standard_air(),
        .air_mass = 0.283,
        .wall = {.name = "wall", .mass = 75.0, .cp = 0.22, .char_length = 2.0, .area = 15.11, .h_air = 1.069},
        .ambient = 80.0,
        .preheat = 400.0,
    };
}

std::pair<OvenSpec, FoodPreset> preset(std::string_view name) {
    if (name == "steak") return {standard_oven(), steak_preset()};
    if (name == "chicken") return {standard_oven(), chicken_preset()};
    if (name == "potato") return {standard_oven(), potato_preset()};
    std::string names;
    for (const auto& n : preset_names()) names += (names.empty() ? "" : ", ") + n;
    throw UnknownPreset("unknown preset '" + std::string(name) + "'; valid presets: " + names);
}

StateSpace build_plant(const OvenSpec& oven, const FoodPreset& food) {
    const double air_heat = oven.air_mass * oven.air.cp;
    const double wall_heat = oven.wall.mass * oven.wall.cp;
    const double food_heat = food.body.mass * food.body.cp;
    if (air_heat <= 0.0 || wall_heat <= 0.0 || food_heat <= 0.0) {
        throw DegenerateBody("build_plant: every body needs mass * cp > 0");
    }
    const double wall_exchange = oven.wall.h_air * oven.wall.area;
    const double food_exchange = food.body.h_air * food.body.area;

    StateSpace ss;
    ss.a = Matrix(3, 3);
    ss.a(0, 0) = -(1.0 + wall_exchange / air_heat + food_exchange / air_heat);
    ss.a(0, 1) = wall_exchange / air_heat;
    ss.a(0, 2) = food_exchange / air_heat;
    ss.a(1, 0) = wall_exchange / wall_heat;
    ss.a(1, 1) = -wall_exchange / wall_heat;
    ss.a(2, 0) = food_exchange / food_heat;
    ss.a(2, 2) = -food_exchange / food_heat;
    ss.b = Matrix::column({1.0, 0.0, 0.0});
    ss.c = Matrix::row_vector({0.0, 0.0, 1.0});
    ss.state_labels = {"T_air", "T_wall", "T_food"};
    ss.input_label = "Q_i";
    ss.output_label = "T_food";
    return ss;
}

bool ValidationReport::all_pass() const {
    for (const auto& check : checks) {
        if (!check.pass) return false;
    }
    return true;
}

ValidationReport validate_plant(const StateSpace& ss) {
    ValidationReport report;
    const int n = ss.order();

    const bool shapes = ss.a.is_square() && ss.b.rows() == n && ss.b.cols() == 1 &&
                        ss.c.rows() == 1 && ss.c.cols() == n;
    report.checks.push_back({"shapes", shapes, shapes ? "a n x n, b n x 1, c 1 x n" : "inconsistent dimensions"});
    if (!shapes) return report;

    bool output_selects_last = true;
    for (int j = 0; j < n; ++j) {
        const double want = (j == n - 1) ? 1.0 : 0.0;
        if (ss.c(0, j) != want) output_selects_last = false;
    }
    report.checks.push_back({"output_is_last_state", output_selects_last,
                             output_selects_last ? "c = [0 ... 0 1]" : "c does not select the food state"});

    double worst_row_sum = 0.0;
    for (int i = 0; i < n; ++i) {
        double sum = ss.b(i, 0);
        for (int j = 0; j < n; ++j) sum += ss.a(i, j);
        worst_row_sum = std::max(worst_row_sum, std::abs(sum));
    }
    const bool row_sums = worst_row_sum <= 1e-9;
    report.checks.push_back({"row_sums_zero", row_sums,
                             "max |row sum of [a|b]| = " + format_double(worst_row_sum)});

    bool signs = true;
    for (int i = 0; i < n; ++i) {
        if (ss.a(i, i) >= 0.0) signs = false;
        if (ss.b(i, 0) < 0.0) signs = false;
        for (int j = 0; j < n; ++j) {
            if (i != j && ss.a(i, j) < 0.0) signs = false;
        }
    }
    report.checks.push_back({"sign_pattern", signs,
                             signs ? "nonnegative couplings, negative diagonal"
                                   : "heat-flow sign pattern violated"});
    return report;
}

Matrix reference_a_matrix(std::string_view food) {
    if (food == "steak") {
        return Matrix{{-8.587, 7.383, 0.204}, {0.979, -0.979, 0.0}, {1.351, 0.0, -1.351}};
    }
    if (food == "chicken") {
        return Matrix{{-8.587, 7.383, 0.204}, {0.979, -0.979, 0.0}, {1.158, 0.0, -1.158}};
    }
    if (food == "potato") {
        return Matrix{{-8.516, 7.383, 0.134}, {0.979, -0.979, 0.0}, {0.950, 0.0, -0.950}};
    }
    throw UnknownPreset("no reference matrix for '" + std::string(food) + "'");
}

std::vector<double> reference_poles(std::string_view food) {
    if (food == "steak") return {-9.472, -0.104, -1.341};
    if (food == "chicken") return {-9.467, -0.104, -1.153};
    if (food == "potato") return {-9.390, -0.104, -0.951};
    throw UnknownPreset("no reference poles for '" + std::string(food) + "'");
}

FoodPreset food_from_json_text(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(std::string("food config: invalid JSON: ") + e.what());
    }
    auto require = [&doc](const char* key) -> double {
        if (!doc.contains(key) || !doc[key].is_number()) {
            throw Error(std::string("food config: missing numeric field '") + key + "'");
        }
        return doc[key].get<double>();
    };
    FoodPreset food;
    food.body.name = doc.value("name", "custom");
    food.body.mass = require("mass_lb");
    food.body.cp = require("cp_btu_per_lb_f");
    food.body.char_length = require("char_length_ft");
    food.body.area = require("surface_area_ft2");
    food.body.h_air = doc.contains("h_air") ? doc["h_air"].get<double>() : 0.0;
    food.target_temp = require("target_temp_f");
    food.safe_temp = require("safe_temp_f");
    if (food.body.mass <= 0.0 || food.body.cp <= 0.0) {
        throw DegenerateBody("food config: mass and cp must be positive");
    }
    return food;
}

}  // namespace ovenctl

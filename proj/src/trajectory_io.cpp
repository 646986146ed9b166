#include "ovenctl/trajectory_io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ovenctl {

namespace {

void append_number(std::string& line, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    line += buf;
}

}  // namespace

bool has_error_coordinates(const Trajectory& traj) {
    const std::size_t n = traj.labels.size();
    if (n == 0 || n % 2 != 0) return false;
    const std::size_t half = n / 2;
    for (std::size_t i = 0; i < half; ++i) {
        if (traj.labels[half + i] != traj.labels[i] + "_err") return false;
    }
    return true;
}

void write_csv(std::ostream& out, const Trajectory& traj) {
    const bool closed = has_error_coordinates(traj);
    const std::size_t half = traj.labels.size() / 2;

    std::string line = "t";
    if (closed) {
        for (std::size_t i = 0; i < half; ++i) line += "," + traj.labels[i];
        for (std::size_t i = 0; i < half; ++i) line += "," + traj.labels[i] + "_hat";
    } else {
        for (const auto& label : traj.labels) line += "," + label;
    }
    line += ",u\n";
    out << line;

    for (std::size_t k = 0; k < traj.size(); ++k) {
        line.clear();
        append_number(line, traj.times[k]);
        const auto& x = traj.states[k];
        if (closed) {
            for (std::size_t i = 0; i < half; ++i) {
                line += ',';
                append_number(line, x[i]);
            }
            for (std::size_t i = 0; i < half; ++i) {
                line += ',';
                append_number(line, x[i] - x[half + i]);  // estimate = state - error
            }
        } else {
            for (double v : x) {
                line += ',';
                append_number(line, v);
            }
        }
        line += ',';
        append_number(line, traj.input[k]);
        line += '\n';
        out << line;
    }
}

void write_json(std::ostream& out, const Trajectory& traj) {
    nlohmann::json doc;
    doc["labels"] = traj.labels;
    doc["times"] = traj.times;
    doc["states"] = traj.states;
    doc["output"] = traj.output;
    doc["input"] = traj.input;
    out << doc.dump(2) << '\n';
}

CsvTable read_csv(std::istream& in) {
    CsvTable table;
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("read_csv: empty input");
    std::stringstream header(line);
    std::string cell;
    while (std::getline(header, cell, ',')) table.columns.push_back(cell);

    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream row_stream(line);
        std::vector<double> row;
        row.reserve(table.columns.size());
        while (std::getline(row_stream, cell, ',')) row.push_back(std::stod(cell));
        if (row.size() != table.columns.size()) {
            throw std::runtime_error("read_csv: ragged row");
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

void write_plot_script(std::ostream& out, const std::string& csv_name, const Trajectory& traj) {
    const bool closed = has_error_coordinates(traj);
    const std::size_t half = closed ? traj.labels.size() / 2 : traj.labels.size();
    out << "set datafile separator ','\n"
        << "set key autotitle columnhead\n"
        << "set xlabel 'time'\n"
        << "set ylabel 'temperature (F)'\n"
        << "plot ";
    const std::size_t columns = closed ? 2 * half : half;
    for (std::size_t i = 0; i < columns; ++i) {
        if (i) out << ", ";
        out << "'" << csv_name << "' using 1:" << (i + 2) << " with lines";
    }
    out << "\n";
}

}  // namespace ovenctl

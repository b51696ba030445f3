#include "core/serialize.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>

#include <json.hpp>

#include "core/errors.hpp"

namespace focp {

std::string format_number(double value) {
    if (!std::isfinite(value))
        throw IoError("refusing to serialize a non-finite value");
    if (value == 0.0) value = 0.0;  // fold -0 into 0
    char buf[40];
    const auto result =
        std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 12);
    return std::string(buf, result.ptr);
}

namespace {

// Rounds through the 12-digit rendering so JSON numbers mirror the CSV.
double round_12(double value) {
    return std::strtod(format_number(value).c_str(), nullptr);
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    return out;
}

void finish_output(std::ofstream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out) throw IoError("write to '" + path.string() + "' failed");
}

nlohmann::ordered_json trajectory_meta(const Trajectory& t) {
    nlohmann::ordered_json meta;
    meta["alpha"] = round_12(t.alpha);
    meta["n"] = t.n;
    meta["h"] = round_12(t.times.size() > 1 ? t.times[1] - t.times[0] : 0.0);
    meta["method"] = t.solver_info.method;
    meta["residual"] = round_12(t.solver_info.residual);
    return meta;
}

std::vector<StudyCell> sorted_cells(const StudyReport& report) {
    std::vector<StudyCell> cells = report.cells;
    std::sort(cells.begin(), cells.end(), [](const StudyCell& a, const StudyCell& b) {
        if (a.alpha != b.alpha) return a.alpha < b.alpha;
        return a.n < b.n;
    });
    return cells;
}

}  // namespace

void write_trajectory(const Trajectory& trajectory, const std::filesystem::path& path,
                      OutputFormat format) {
    const std::size_t count = trajectory.times.size();
    if (trajectory.state.size() != count || trajectory.costate.size() != count ||
        trajectory.control.size() != count)
        throw DomainError("trajectory arrays have mismatched lengths");

    std::ofstream out = open_output(path);
    if (format == OutputFormat::csv) {
        out << "t,x,lambda,u\n";
        for (std::size_t i = 0; i < count; ++i) {
            out << format_number(trajectory.times[i]) << ',' << format_number(trajectory.state[i])
                << ',' << format_number(trajectory.costate[i]) << ','
                << format_number(trajectory.control[i]) << '\n';
        }
    } else {
        nlohmann::ordered_json doc;
        doc["meta"] = trajectory_meta(trajectory);
        for (const auto& [key, values] : {std::pair{"times", &trajectory.times},
                                          std::pair{"state", &trajectory.state},
                                          std::pair{"costate", &trajectory.costate},
                                          std::pair{"control", &trajectory.control}}) {
            auto arr = nlohmann::ordered_json::array();
            for (double v : *values) arr.push_back(round_12(v));
            doc[key] = std::move(arr);
        }
        out << doc.dump(2) << '\n';
    }
    finish_output(out, path);
}

void write_study(const StudyReport& report, const std::filesystem::path& path,
                 OutputFormat format) {
    const std::vector<StudyCell> cells = sorted_cells(report);

    std::ofstream out = open_output(path);
    if (format == OutputFormat::csv) {
        out << "problem,alpha,n,x_end,u_start,delta_vs_half_n,oracle_sup_error\n";
        for (const StudyCell& cell : cells) {
            out << report.problem_name << ',' << format_number(cell.alpha) << ',' << cell.n << ','
                << format_number(cell.endpoint_state) << ',' << format_number(cell.initial_control)
                << ',' << (cell.delta_vs_half_n ? format_number(*cell.delta_vs_half_n) : "") << ','
                << (cell.oracle_sup_error ? format_number(*cell.oracle_sup_error) : "") << '\n';
        }
    } else {
        nlohmann::ordered_json meta;
        meta["problem"] = report.problem_name;
        meta["kind"] = report.kind;
        auto alpha_list = nlohmann::ordered_json::array();
        for (double a : report.alphas) alpha_list.push_back(round_12(a));
        meta["alphas"] = std::move(alpha_list);
        meta["n_values"] = report.n_values;
        meta["max_residual"] = round_12(report.max_residual);

        auto rows = nlohmann::ordered_json::array();
        for (const StudyCell& cell : cells) {
            nlohmann::ordered_json row;
            row["problem"] = report.problem_name;
            row["alpha"] = round_12(cell.alpha);
            row["n"] = cell.n;
            row["x_end"] = round_12(cell.endpoint_state);
            row["u_start"] = round_12(cell.initial_control);
            row["delta_vs_half_n"] =
                cell.delta_vs_half_n ? nlohmann::ordered_json(round_12(*cell.delta_vs_half_n))
                                     : nlohmann::ordered_json(nullptr);
            row["oracle_sup_error"] =
                cell.oracle_sup_error ? nlohmann::ordered_json(round_12(*cell.oracle_sup_error))
                                      : nlohmann::ordered_json(nullptr);
            rows.push_back(std::move(row));
        }

        nlohmann::ordered_json doc;
        doc["meta"] = std::move(meta);
        doc["rows"] = std::move(rows);
        out << doc.dump(2) << '\n';
    }
    finish_output(out, path);
}

}  // namespace focp

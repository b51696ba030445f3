#pragma once

#include <filesystem>
#include <string>

#include "core/study.hpp"
#include "core/trajectory.hpp"

namespace focp {

enum class OutputFormat { csv, json };

// Decimal rendering with 12 significant digits, used for every numeric
// field written by this module. Negative zero is rendered as "0".
std::string format_number(double value);

// CSV columns: t, x, lambda, u (header included, one row per node, rows in
// increasing t, LF line endings). JSON mirrors the arrays plus solver
// metadata under {meta, times, state, costate, control}. Output is
// byte-deterministic for identical inputs.
void write_trajectory(const Trajectory& trajectory, const std::filesystem::path& path,
                      OutputFormat format);

// CSV columns: problem, alpha, n, x_end, u_start, delta_vs_half_n,
// oracle_sup_error (optional fields left empty); rows sorted by (alpha, n).
// JSON emits {meta, rows}.
void write_study(const StudyReport& report, const std::filesystem::path& path,
                 OutputFormat format);

}  // namespace focp

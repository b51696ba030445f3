#pragma once

#include <filesystem>

#include "core/problem.hpp"

namespace focp {

// Loads a problem from a key-value text file. Required keys: x0, q, r, a, b;
// optional: horizon (default 1). Each of q, r, a, b is either a single
// number (a constant) or a list of polynomial coefficients in t, lowest
// degree first; list entries may be separated by spaces, commas, or
// brackets. '#' starts a comment. Example:
//
//     # same coefficients as the time-varying benchmark
//     x0 = 1
//     q = 1
//     r = 1
//     a = 0 1
//     b = 1
//
// Throws ParseError (with a 1-based line number) on syntax problems or
// missing keys; positivity of q and r is only checked later, at assembly.
LqFocp load_custom_problem(const std::filesystem::path& path);

}  // namespace focp

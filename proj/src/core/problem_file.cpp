#include "core/problem_file.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "core/errors.hpp"

namespace focp {

namespace {

std::vector<double> parse_number_list(const std::string& text, int line) {
    std::string cleaned;
    cleaned.reserve(text.size());
    for (char c : text) cleaned += (c == ',' || c == '[' || c == ']') ? ' ' : c;

    std::vector<double> values;
    std::istringstream stream(cleaned);
    std::string token;
    while (stream >> token) {
        std::size_t used = 0;
        double value = 0.0;
        try {
            value = std::stod(token, &used);
        } catch (const std::exception&) {
            throw ParseError("line " + std::to_string(line) + ": '" + token +
                                 "' is not a number",
                             line);
        }
        if (used != token.size())
            throw ParseError("line " + std::to_string(line) + ": '" + token +
                                 "' is not a number",
                             line);
        if (!std::isfinite(value))
            throw ParseError("line " + std::to_string(line) + ": value must be finite", line);
        values.push_back(value);
    }
    if (values.empty())
        throw ParseError("line " + std::to_string(line) + ": expected at least one number", line);
    return values;
}

Coefficient make_polynomial(std::vector<double> coeffs) {
    return [coeffs = std::move(coeffs)](double t) {
        double acc = 0.0;
        for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * t + coeffs[k];
        return acc;
    };
}

std::string trimmed(const std::string& s) {
    std::size_t begin = 0;
    std::size_t end = s.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
    return s.substr(begin, end - begin);
}

}  // namespace

LqFocp load_custom_problem(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open problem file '" + path.string() + "'");

    std::map<std::string, std::vector<double>> entries;
    std::map<std::string, int> entry_lines;
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        const std::string text = trimmed(raw);
        if (text.empty()) continue;

        const auto eq = text.find('=');
        if (eq == std::string::npos)
            throw ParseError("line " + std::to_string(line) + ": expected 'key = value'", line);
        const std::string key = trimmed(text.substr(0, eq));
        if (key != "x0" && key != "horizon" && key != "q" && key != "r" && key != "a" &&
            key != "b")
            throw ParseError("line " + std::to_string(line) + ": unknown key '" + key + "'", line);
        if (entries.count(key))
            throw ParseError("line " + std::to_string(line) + ": duplicate key '" + key +
                                 "' (first set on line " + std::to_string(entry_lines[key]) + ")",
                             line);
        entries[key] = parse_number_list(text.substr(eq + 1), line);
        entry_lines[key] = line;
    }

    for (const char* required : {"x0", "q", "r", "a", "b"})
        if (!entries.count(required))
            throw ParseError("missing key '" + std::string(required) + "'", 0);

    const auto scalar = [&](const std::string& key) {
        const std::vector<double>& values = entries.at(key);
        if (values.size() != 1)
            throw ParseError("line " + std::to_string(entry_lines.at(key)) + ": '" + key +
                                 "' must be a single number",
                             entry_lines.at(key));
        return values[0];
    };

    LqFocp problem;
    problem.name = path.stem().string();
    problem.x0 = scalar("x0");
    problem.horizon = entries.count("horizon") ? scalar("horizon") : 1.0;
    problem.q = make_polynomial(entries.at("q"));
    problem.r = make_polynomial(entries.at("r"));
    problem.a = make_polynomial(entries.at("a"));
    problem.b = make_polynomial(entries.at("b"));
    problem.validate();
    return problem;
}

}  // namespace focp

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace quanputer {

// A (parameter, error) table with a fitted log-log slope. Every convergence
// sweep in the project produces one of these; the CLI serializes them to CSV
// with the fit in a footer comment.
struct ConvergenceReport {
    std::string parameter;                            // swept quantity: "N", "tau", "dt", "eps"
    std::vector<std::pair<double, double>> points;    // (param, error), params strictly decreasing
    double slope = 0.0;
    double intercept = 0.0;
    double residual = 0.0;
    std::optional<double> expected_slope;
    double tolerance = 0.0;
    bool pass = true;  // |slope - expected| <= tolerance when expected is set
};

}  // namespace quanputer

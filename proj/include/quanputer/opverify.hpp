#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "quanputer/report.hpp"

namespace quanputer::opverify {

// A pair of small dense matrices used to probe the commutator relations
//   e^{eA} e^{eB} e^{-eA} e^{-eB}           = e^{e^2 [A,B]} + O(e^3)
//   (1+eA)(1+eB)(1+eA)^{-1}(1+eB)^{-1}      = 1 + e^2 [A,B] + O(e^3)
// Instances are reproducible: the generator seed is kept with the pair.
struct MatrixPair {
    Eigen::MatrixXcd A;
    Eigen::MatrixXcd B;
    std::uint64_t seed = 0;

    // Hermitized standard-normal entries; rescaled if the spectral norm
    // exceeds 10 so the exponentials stay well conditioned.
    static MatrixPair random_hermitian(int n, std::uint64_t seed);

    // Two diagonal (hence commuting) matrices from the same seeded stream.
    static MatrixPair commuting_diagonal(int n, std::uint64_t seed);
};

Eigen::MatrixXcd commutator(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B);

// Largest singular value.
double spectral_norm(const Eigen::MatrixXcd& M);

// ||e^{eA} e^{eB} e^{-eA} e^{-eB} - e^{e^2 [A,B]}||_2
double group_commutator_defect(const MatrixPair& pair, double eps);

// ||(1+eA)(1+eB)(1+eA)^{-1}(1+eB)^{-1} - (1 + e^2 [A,B])||_2
// Throws Singular if either resolvent factor is not invertible.
double resolvent_commutator_defect(const MatrixPair& pair, double eps);

struct FitResult {
    double slope = 0.0;
    double intercept = 0.0;
    double residual = 0.0;  // RMS residual of the log-log fit
};

// Least-squares line through (log param, log error). Requires at least three
// points, strictly decreasing params, and positive errors.
FitResult fit_order(const std::vector<std::pair<double, double>>& points);

// Convenience: evaluate `defect` over a sweep (descending), fit, and compare
// against the expected order.
ConvergenceReport sweep_defect(const std::string& parameter,
                               const std::vector<double>& params,
                               const std::function<double(double)>& defect,
                               std::optional<double> expected_slope,
                               double tolerance);

// <p|x> = (2 pi hbar)^{-1/2} exp(-i p x / hbar)
std::complex<double> momentum_state_overlap(double x, double p, double hbar);

}  // namespace quanputer::opverify

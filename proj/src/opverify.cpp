#include "quanputer/opverify.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include <unsupported/Eigen/MatrixFunctions>

#include "quanputer/errors.hpp"

namespace quanputer::opverify {

namespace {

Eigen::MatrixXcd random_complex(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXcd M(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) M(i, j) = std::complex<double>(gauss(rng), gauss(rng));
    return M;
}

void clamp_norm(Eigen::MatrixXcd& M) {
    const double s = spectral_norm(M);
    if (s > 10.0) M *= 10.0 / s;
}

}  // namespace

MatrixPair MatrixPair::random_hermitian(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    MatrixPair pair;
    pair.seed = seed;
    Eigen::MatrixXcd ga = random_complex(n, rng);
    Eigen::MatrixXcd gb = random_complex(n, rng);
    pair.A = 0.5 * (ga + ga.adjoint());
    pair.B = 0.5 * (gb + gb.adjoint());
    clamp_norm(pair.A);
    clamp_norm(pair.B);
    return pair;
}

MatrixPair MatrixPair::commuting_diagonal(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    MatrixPair pair;
    pair.seed = seed;
    pair.A = Eigen::MatrixXcd::Zero(n, n);
    pair.B = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        pair.A(i, i) = gauss(rng);
        pair.B(i, i) = gauss(rng);
    }
    return pair;
}

Eigen::MatrixXcd commutator(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B) {
    return A * B - B * A;
}

double spectral_norm(const Eigen::MatrixXcd& M) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M);
    return svd.singularValues()(0);
}

double group_commutator_defect(const MatrixPair& pair, double eps) {
    if (eps <= 0.0) throw InvalidValue("group_commutator_defect: eps must be positive");
    const Eigen::MatrixXcd eA = (eps * pair.A).exp();
    const Eigen::MatrixXcd eB = (eps * pair.B).exp();
    const Eigen::MatrixXcd eAinv = (-eps * pair.A).exp();
    const Eigen::MatrixXcd eBinv = (-eps * pair.B).exp();
    const Eigen::MatrixXcd target = (eps * eps * commutator(pair.A, pair.B)).exp();
    return spectral_norm(eA * eB * eAinv * eBinv - target);
}

double resolvent_commutator_defect(const MatrixPair& pair, double eps) {
    const int n = static_cast<int>(pair.A.rows());
    const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(n, n);
    const Eigen::MatrixXcd fA = I + eps * pair.A;
    const Eigen::MatrixXcd fB = I + eps * pair.B;
    Eigen::FullPivLU<Eigen::MatrixXcd> luA(fA);
    Eigen::FullPivLU<Eigen::MatrixXcd> luB(fB);
    if (!luA.isInvertible() || !luB.isInvertible())
        throw Singular("resolvent_commutator_defect: 1+eps*A or 1+eps*B is singular");
    const Eigen::MatrixXcd target = I + eps * eps * commutator(pair.A, pair.B);
    return spectral_norm(fA * fB * luA.inverse() * luB.inverse() - target);
}

FitResult fit_order(const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 3) throw InvalidValue("fit_order: need at least 3 points");
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].first <= 0.0) throw InvalidValue("fit_order: parameters must be positive");
        if (points[i].second <= 0.0) throw InvalidValue("fit_order: errors must be positive");
        if (i > 0 && points[i].first >= points[i - 1].first)
            throw InvalidValue("fit_order: parameters must be strictly decreasing");
    }
    const auto n = static_cast<double>(points.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [p, e] : points) {
        const double x = std::log(p), y = std::log(e);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    FitResult fit;
    fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    fit.intercept = (sy - fit.slope * sx) / n;
    double ss = 0;
    for (const auto& [p, e] : points) {
        const double r = std::log(e) - (fit.intercept + fit.slope * std::log(p));
        ss += r * r;
    }
    fit.residual = std::sqrt(ss / n);
    return fit;
}

ConvergenceReport sweep_defect(const std::string& parameter,
                               const std::vector<double>& params,
                               const std::function<double(double)>& defect,
                               std::optional<double> expected_slope,
                               double tolerance) {
    ConvergenceReport report;
    report.parameter = parameter;
    for (double p : params) report.points.emplace_back(p, defect(p));
    const FitResult fit = fit_order(report.points);
    report.slope = fit.slope;
    report.intercept = fit.intercept;
    report.residual = fit.residual;
    report.expected_slope = expected_slope;
    report.tolerance = tolerance;
    report.pass = !expected_slope || std::abs(report.slope - *expected_slope) <= tolerance;
    return report;
}

std::complex<double> momentum_state_overlap(double x, double p, double hbar) {
    if (hbar <= 0.0) throw InvalidValue("momentum_state_overlap: hbar must be positive");
    const double amp = 1.0 / std::sqrt(2.0 * std::numbers::pi * hbar);
    return std::polar(amp, -p * x / hbar);
}

}  // namespace quanputer::opverify

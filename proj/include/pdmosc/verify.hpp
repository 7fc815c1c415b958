#pragma once

#include "pdmosc/model.hpp"
#include "pdmosc/numerics.hpp"
#include "pdmosc/operators.hpp"
#include "pdmosc/report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pdmosc {

/// Log-spaced magnitudes in [x_min, x_max] mirrored in sign, optionally extended by
/// seeded uniform magnitudes in the same range.
struct SamplePoints {
    double x_min = 1e-3;
    double x_max = 6.0;
    int per_side = 40;
    int random_extra = 0;
    std::uint64_t seed = 0;

    /// Points in x. x_min and x_max are in units of 1/lambda0.
    std::vector<double> generate(double lambda0 = 1.0) const;
};

/// One battery entry: a smooth test function with its true parity. `tagged`
/// exposes the parity to the operators, `untagged` forces explicit reflection.
struct TestFunction {
    std::string label;
    Parity parity;
    AnalyticFunction untagged;
    AnalyticFunction tagged;
};

/// Gaussians times polynomials of both parities plus two shifted Gaussians,
/// queryable to the default jet order.
std::vector<TestFunction> standard_battery();

/// The fixed algebra points +-{0.25, 0.5, 0.9, 1.3, 1.8, 2.4}, plus `random_extra`
/// seeded points with |x| in [0.2, 2.5].
std::vector<double> algebra_points(int random_extra = 0, std::uint64_t seed = 0);

/// Gram matrix of states 0..n_max on transformed Gauss rules with n_quad nodes.
VerificationReport suite_orthonormality(const OscillatorParams& p, Family family, int n_max, int n_quad,
                                        double tol = 1e-11, double cross_tol = 1e-14);

/// max |H psi_n - E_n psi_n| / max |E_n psi_n| per state. Default tolerance
/// 1e-9 canonical, 1e-8 parabose.
VerificationReport suite_schrodinger_residual(const OscillatorParams& p, Family family, int n_max,
                                              const SamplePoints& points = {},
                                              std::optional<double> tol = std::nullopt);

/// Commutation identities of the deformed algebra on the battery, residuals relative
/// to the largest term per function.
VerificationReport suite_algebra(const OscillatorParams& p, Statistics stat, const std::vector<TestFunction>& battery,
                                 const std::vector<double>& points, double tol = 1e-9);

/// Oracle floors: 1e-6 for the full sector, 1e-4 for parabose sectors.
inline constexpr double kCanonicalOracleFloor = 1e-6;
inline constexpr double kParaboseOracleFloor = 1e-4;

/// Lowest k levels of one sector against the closed forms (relative deviation).
VerificationReport suite_spectrum_vs_oracle(const OscillatorParams& p, Sector sector, int k, double tol);

/// Both parabose sectors, merged and checked for the uniform gap (a+1) hbar omega.
VerificationReport suite_spectrum_merged(const OscillatorParams& p, int k_per_sector, double tol);

struct LimitsConfig {
    double m0 = 1.0;
    double omega = 1.0;
    double hbar = 1.0;
    std::vector<double> deformations{-0.6, 2.0};
    std::vector<double> gammas{1.0, 1.5};
    unsigned n_max = 9;
    SamplePoints points{};
    double textbook_tol = 1e-13;
    double energy_tol = 1e-15;
    double reduction_tol = 1e-12;
};

/// Undeformed oscillator, undeformed parabose spectrum and the gamma = 1/2 reduction.
VerificationReport suite_limits(const LimitsConfig& config = {});

/// Ladder proportionality a+ psi_n ~ psi_{n+1} for n < n_max and ground-state annihilation.
VerificationReport suite_ladder(const OscillatorParams& p, Family family, int n_max, const SamplePoints& points = {},
                                double spread_tol = 1e-9, double annihilation_tol = 1e-12);

struct SuiteSelection {
    std::string name = "all";  // all|orthonormality|residual|algebra|spectrum|limits|ladder
    std::optional<double> tol;
    std::uint64_t seed = 0;
    int n_max = 8;
};

/// Runs the selected suites for one parameter set and family, never aborting on a
/// failing sibling. Throws DomainError on an unknown suite name.
std::vector<VerificationReport> run_suites(const OscillatorParams& p, Family family, const SuiteSelection& sel);

}  // namespace pdmosc

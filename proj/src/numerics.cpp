#include "pdmosc/numerics.hpp"

#include "pdmosc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace pdmosc {

namespace {

constexpr int kInitialN = 1024;
constexpr int kMaxN = 1 << 16;
constexpr double kRatioTarget = 4.0;
constexpr double kRatioSlack = 1.2;
constexpr double kBoundaryGrowth = 1.25;

// int_lo^hi u^p du for 0 <= lo < hi; the p = -1 limit comes out of expm1 continuously.
double power_integral(double p, double lo, double hi) {
    const double p1 = p + 1.0;
    if (lo == 0.0) {
        if (!(p1 > 0.0)) throw DomainError("power_integral: non-integrable power at the origin");
        return std::pow(hi, p1) / p1;
    }
    const double r = std::log(lo / hi);
    const double factor = (p1 == 0.0) ? -r : -std::expm1(p1 * r) / p1;
    return std::pow(hi, p1) * factor;
}

// int_x0^x1 |lambda0 x|^p dx, allowing the interval to straddle the origin.
double abs_power_integral(double p, double lambda0, double x0, double x1) {
    const double u0 = lambda0 * x0;
    const double u1 = lambda0 * x1;
    double acc;
    if (u0 >= 0.0) {
        acc = power_integral(p, u0, u1);
    } else if (u1 <= 0.0) {
        acc = power_integral(p, -u1, -u0);
    } else {
        acc = power_integral(p, 0.0, -u0) + power_integral(p, 0.0, u1);
    }
    return acc / lambda0;
}

double effective_g(const OscillatorParams& p, Sector sector) {
    switch (sector) {
        case Sector::Full: return 0.0;
        case Sector::ParaboseEven: return p.g();
        case Sector::ParaboseOdd: return p.g() + p.a() + 1.0;
    }
    return 0.0;
}

std::vector<double> solve(const OscillatorParams& p, Sector sector, double L, int N, int k, OuterBoundary outer) {
    const double grading = 1.0 / (p.a() + 1.0);
    const GridSpec grid = (sector == Sector::Full) ? GridSpec::symmetric(L, N, grading)
                                                    : GridSpec::half_line(L, N, grading);
    return eigenvalues_lowest(assemble_hamiltonian(p, grid, sector, outer).matrix, static_cast<std::size_t>(k));
}

double max_relative_gap(const std::vector<double>& a, const std::vector<double>& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]) / std::max(std::abs(a[i]), 1e-300));
    }
    return worst;
}

}  // namespace

GridSpec::GridSpec(double L, int N, double grading, bool half_line)
    : L_(L), N_(N), grading_(grading), half_line_(half_line) {
    if (!(std::isfinite(L) && L > 0.0)) throw DomainError("GridSpec: L must be positive and finite");
    if (N < 16) throw DomainError("GridSpec: need at least 16 nodes, got " + std::to_string(N));
    if (!(std::isfinite(grading) && grading > 0.0)) throw DomainError("GridSpec: grading must be positive");
    if (!half_line && N % 2 != 0) {
        throw DomainError("GridSpec: a symmetric grid needs an even node count so that no node lands on 0");
    }
    auto map = [&](double u) { return std::copysign(L * std::pow(std::abs(u), grading), u); };
    const double lo = half_line ? 0.0 : -1.0;
    const double width = 1.0 - lo;
    nodes_.resize(static_cast<std::size_t>(N));
    faces_.resize(static_cast<std::size_t>(N) + 1);
    for (int i = 0; i <= N; ++i) {
        faces_[static_cast<std::size_t>(i)] = map(lo + width * i / N);
    }
    for (int i = 0; i < N; ++i) {
        nodes_[static_cast<std::size_t>(i)] = map(lo + width * (i + 0.5) / N);
    }
    if (!half_line) {
        // Exact mirror symmetry regardless of rounding in the map.
        for (int i = 0; i < N / 2; ++i) {
            nodes_[static_cast<std::size_t>(i)] = -nodes_[static_cast<std::size_t>(N - 1 - i)];
            faces_[static_cast<std::size_t>(i)] = -faces_[static_cast<std::size_t>(N - i)];
        }
        faces_[static_cast<std::size_t>(N / 2)] = 0.0;
    }
}

GridSpec GridSpec::symmetric(double L, int N, double grading) { return GridSpec(L, N, grading, false); }

GridSpec GridSpec::half_line(double L, int N, double grading) { return GridSpec(L, N, grading, true); }

DiscreteHamiltonian assemble_hamiltonian(const OscillatorParams& p, const GridSpec& grid, Sector sector,
                                         OuterBoundary outer) {
    const bool half = sector != Sector::Full;
    if (half != grid.is_half_line()) {
        throw DomainError(half ? "assemble_hamiltonian: parabose sectors need a half-line grid"
                               : "assemble_hamiltonian: the full sector needs a symmetric grid");
    }
    const auto& x = grid.nodes();
    const auto& f = grid.faces();
    if (std::any_of(x.begin(), x.end(), [](double v) { return v == 0.0; })) {
        throw DomainError("assemble_hamiltonian: grid touches the origin");
    }
    const std::size_t n = x.size();
    const double a = p.a();
    const double l0 = p.lambda0();
    const double ge = effective_g(p, sector);
    const double sqrt_m0 = std::sqrt(p.m0());
    const double kin = 0.5 * p.hbar() * p.hbar();
    const double v_scale = 0.5 * p.m0() * p.omega() * p.omega() / (l0 * l0);

    // With w = |x|^-ge M^-1/4 psi the sector equation is -(hbar^2/2)(P w')' + V rho w = E rho w,
    // P = M^-1/2 |l0 x|^(2 ge), rho = M^1/2 |l0 x|^(2 ge).
    auto link = [&](double x0, double x1) { return sqrt_m0 * abs_power_integral(a - 2.0 * ge, l0, x0, x1); };

    std::vector<double> diag(n, 0.0);
    std::vector<double> off(n - 1, 0.0);
    std::vector<double> metric(n);
    for (std::size_t i = 0; i < n; ++i) {
        metric[i] = sqrt_m0 * abs_power_integral(a + 2.0 * ge, l0, f[i], f[i + 1]);
        diag[i] = v_scale * sqrt_m0 * abs_power_integral(3.0 * a + 2.0 + 2.0 * ge, l0, f[i], f[i + 1]);
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double c = kin / link(x[i], x[i + 1]);
        diag[i] += c;
        diag[i + 1] += c;
        off[i] = -c;
    }
    if (outer == OuterBoundary::Dirichlet) {
        diag[n - 1] += kin / link(x[n - 1], grid.L());
        if (!half) diag[0] += kin / link(-grid.L(), x[0]);
    }
    // The half-line sectors carry no link at the origin: the weighted form already
    // selects the regular solution there.

    for (std::size_t i = 0; i < n; ++i) diag[i] /= metric[i];
    for (std::size_t i = 0; i + 1 < n; ++i) off[i] /= std::sqrt(metric[i] * metric[i + 1]);
    return {SymTriMatrix(std::move(diag), std::move(off)), std::move(metric)};
}

SpectrumEstimate converge_spectrum(const OscillatorParams& p, Sector sector, int k, double target_tol) {
    if (!(target_tol >= 1e-8)) throw DomainError("converge_spectrum: target_tol must be at least 1e-8");
    if (k < 1) throw DomainError("converge_spectrum: need at least one level");

    // Box size: start inside the classically forbidden region of a generous energy and
    // grow until switching the outer condition moves no level by more than tol/10.
    const double e_probe = p.hbar() * p.omega() * (2.0 * k + 2.0);
    double L = 1.0 / p.lambda0();
    while (potential(p, L) < e_probe) L *= kBoundaryGrowth;
    for (int guard = 0;; ++guard) {
        const auto dir = solve(p, sector, L, kInitialN, k, OuterBoundary::Dirichlet);
        const auto neu = solve(p, sector, L, kInitialN, k, OuterBoundary::Neumann);
        if (max_relative_gap(dir, neu) < target_tol / 10.0) break;
        if (guard > 200) throw ConvergenceError("converge_spectrum: box size did not settle", dir, {});
        L *= kBoundaryGrowth;
    }

    int N = kInitialN;
    auto e1 = solve(p, sector, L, N, k, OuterBoundary::Dirichlet);
    auto e2 = solve(p, sector, L, 2 * N, k, OuterBoundary::Dirichlet);
    auto e4 = solve(p, sector, L, 4 * N, k, OuterBoundary::Dirichlet);
    const std::size_t kk = static_cast<std::size_t>(k);
    SpectrumEstimate est;
    est.L = L;
    for (;;) {
        est.values.assign(kk, 0.0);
        est.errors.assign(kk, 0.0);
        est.ratios.assign(kk, 0.0);
        est.extrapolated.assign(kk, false);
        est.N = 4 * N;
        bool done = true;
        for (std::size_t i = 0; i < kk; ++i) {
            const double d1 = e1[i] - e2[i];
            const double d2 = e2[i] - e4[i];
            const double scale = std::abs(e4[i]);
            est.ratios[i] = (d2 != 0.0) ? d1 / d2 : HUGE_VAL;
            if (std::abs(d2) <= 1e-13 * scale) {
                est.values[i] = e4[i];
                est.errors[i] = std::abs(d2);
            } else if (std::abs(est.ratios[i] - kRatioTarget) <= kRatioSlack) {
                est.values[i] = e4[i] - d2 / 3.0;
                est.errors[i] = std::abs(d2) / 3.0;
                est.extrapolated[i] = true;
            } else {
                est.values[i] = e4[i];
                est.errors[i] = std::abs(d2);
            }
            if (est.errors[i] > target_tol * scale) done = false;
        }
        if (done) return est;
        if (8 * N > kMaxN) {
            throw ConvergenceError("converge_spectrum: tolerance not reached with N <= 65536", est.values,
                                   est.errors);
        }
        N *= 2;
        e1 = std::move(e2);
        e2 = std::move(e4);
        e4 = solve(p, sector, L, 4 * N, k, OuterBoundary::Dirichlet);
    }
}

}  // namespace pdmosc

#include "pdmosc/errors.hpp"
#include "pdmosc/model.hpp"

#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>

using namespace pdmosc;

namespace {

const double kA[] = {-0.6, 0.0, 2.0};
const double kGamma[] = {0.5, 1.0, 1.5};

// Composite Simpson on [0, S] after x = s^5, which tames the |x|^q cusp at the origin.
double norm_half(const std::function<double(double)>& psi, double xmax) {
    const int n = 40000;
    const double smax = std::pow(xmax, 0.2);
    const double h = smax / n;
    double sum = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double s = i * h;
        const double x = std::pow(s, 5);
        const double v = (i == 0) ? 0.0 : psi(x) * psi(x) * 5 * std::pow(s, 4);
        const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
        sum += w * v;
    }
    return sum * h / 3.0;
}

double lag(unsigned m, double al, double t) {
    if (m == 0) return 1.0;
    if (m == 1) return 1 + al - t;
    return 0.5 * (t * t - 2 * (al + 2) * t + (al + 1) * (al + 2));
}

}  // namespace

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(OscillatorParams::create(-1.0, 0.5), DomainError);
    CHECK_THROWS_AS(OscillatorParams::create(0.0, 0.4), DomainError);
    CHECK_THROWS_AS(OscillatorParams::create(0.0, 0.5, 0.0), DomainError);
    CHECK_THROWS_AS(OscillatorParams::create(0.0, 0.5, 1.0, -1.0), DomainError);
    CHECK_THROWS_AS(OscillatorParams::create(std::nan(""), 0.5), DomainError);
    const auto p = OscillatorParams::create(0.5, 1.25, 2.0, 3.0, 0.5);
    CHECK(p.lambda0() == doctest::Approx(std::sqrt(12.0)).epsilon(1e-15));
    CHECK(p.g() == 0.75);
}

TEST_CASE("mass and potential") {
    const auto p = OscillatorParams::create(-0.6, 0.5);
    CHECK(mass(p, 2.0) == doctest::Approx(0.43527528164806208).epsilon(1e-15));
    CHECK(mass(p, -2.0) == mass(p, 2.0));
    CHECK(potential(p, 4.0) == doctest::Approx(1.5157165665103982).epsilon(1e-15));
    CHECK(potential(p, 0.0) == 0.0);
    CHECK_THROWS_AS(mass(p, 0.0), SingularPointError);
    const auto q = OscillatorParams::create(2.0, 0.5);
    CHECK(mass(q, 0.0) == 0.0);
    CHECK(mass(OscillatorParams::create(0.0, 0.5, 3.0), 1.7) == 3.0);
}

TEST_CASE("energies") {
    const auto c2 = OscillatorParams::create(2.0, 0.5);
    CHECK(energy(c2, StateIndex::canonical(0)) == 1.5);
    CHECK(energy(c2, StateIndex::canonical(1)) == 4.5);
    CHECK(energy(c2, StateIndex::canonical(2)) == 7.5);
    const auto p0 = OscillatorParams::create(0.0, 1.5);
    CHECK(energy(p0, StateIndex::parabose(0)) == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(energy(p0, StateIndex::parabose(1)) == doctest::Approx(2.5).epsilon(1e-15));
    CHECK(energy(OscillatorParams::create(2.0, 1.0), StateIndex::parabose(0)) == doctest::Approx(2.0).epsilon(1e-15));
    const auto cm = OscillatorParams::create(-0.6, 0.5);
    for (unsigned n = 0; n < 10; ++n) {
        CHECK(energy(cm, StateIndex::canonical(n + 1)) - energy(cm, StateIndex::canonical(n)) ==
              doctest::Approx(0.4).epsilon(1e-14));
    }
}

TEST_CASE("sector energies interleave into the unified ladder") {
    for (double a : kA) {
        for (double gm : kGamma) {
            const auto p = OscillatorParams::create(a, gm, 1.3, 0.7, 1.1);
            for (unsigned m = 0; m < 6; ++m) {
                CHECK(energy_even_sector(p, m) == doctest::Approx(energy(p, StateIndex::parabose(2 * m))).epsilon(1e-14));
                CHECK(energy_odd_sector(p, m) == doctest::Approx(energy(p, StateIndex::parabose(2 * m + 1))).epsilon(1e-14));
            }
            const double want = (a + 1) * p.hbar() * p.omega() * 0.5 + p.hbar() * p.omega() * (gm - 0.5);
            CHECK(energy(p, StateIndex::parabose(0)) == doctest::Approx(want).epsilon(1e-14));
        }
    }
}

TEST_CASE("state index bookkeeping") {
    const auto s = StateIndex::parabose_sector(1, 3);
    CHECK(s.n == 7);
    CHECK(s.parity() == 1);
    CHECK(s.radial() == 3);
}

TEST_CASE("xi round trip and monotonicity") {
    for (double a : kA) {
        const auto p = OscillatorParams::create(a, 0.5, 2.0, 0.5);
        double prev = -INFINITY;
        for (double x = -5.0; x <= 5.0; x += 0.37) {
            const double xi = xi_of_x(p, x);
            CHECK(xi > prev);
            prev = xi;
            CHECK(x_of_xi(p, xi) == doctest::Approx(x).epsilon(1e-14));
        }
        CHECK(xi_of_x(p, 0.0) == 0.0);
    }
}

TEST_CASE("frozen wavefunction values") {
    const auto p2 = OscillatorParams::create(2.0, 0.5);
    CHECK(normalization(p2, StateIndex::canonical(0)) == doctest::Approx(0.9885368095351027).epsilon(1e-15));
    CHECK(wavefunction(p2, StateIndex::canonical(0), 1.0) == doctest::Approx(0.8367783436531381).epsilon(1e-14));
    const auto p0 = OscillatorParams::create(0.0, 0.5);
    CHECK(wavefunction(p0, StateIndex::canonical(1), 1.0) == doctest::Approx(0.6442883651134752).epsilon(1e-14));
    CHECK(wavefunction(p0, StateIndex::canonical(0), 0.0) == doctest::Approx(std::pow(std::numbers::pi, -0.25)).epsilon(1e-15));
}

TEST_CASE("textbook oscillator at a = 0, gamma = 1/2") {
    const auto p = OscillatorParams::create(0.0, 0.5);
    for (double x : {-2.5, -0.3, 0.0, 0.9, 3.3}) {
        const double e = std::exp(-0.5 * x * x) * std::pow(std::numbers::pi, -0.25);
        CHECK(wavefunction(p, StateIndex::canonical(0), x) == doctest::Approx(e).epsilon(1e-14));
        CHECK(wavefunction(p, StateIndex::canonical(2), x) ==
              doctest::Approx(e * (4 * x * x - 2) / std::sqrt(8.0)).epsilon(1e-13));
        CHECK(wavefunction(p, StateIndex::parabose(2), x) ==
              doctest::Approx(wavefunction(p, StateIndex::canonical(2), x)).epsilon(1e-13));
    }
}

TEST_CASE("parity of eigenfunctions") {
    for (double a : kA) {
        for (double gm : kGamma) {
            const auto p = OscillatorParams::create(a, gm);
            const Family fam = gm == 0.5 ? Family::CanonicalDeformed : Family::Parabose;
            for (unsigned n = 0; n < 8; ++n) {
                for (double x : {0.2, 1.1, 2.3}) {
                    const double s = n % 2 ? -1.0 : 1.0;
                    CHECK(wavefunction(p, {fam, n}, -x) == s * wavefunction(p, {fam, n}, x));
                }
            }
        }
    }
}

TEST_CASE("wavefunctions are normalized (independent Simpson quadrature)") {
    for (double a : kA) {
        for (double gm : kGamma) {
            const auto p = OscillatorParams::create(a, gm, 1.0, 1.0, 1.0);
            const Family fam = gm == 0.5 ? Family::CanonicalDeformed : Family::Parabose;
            for (unsigned n : {0u, 1u, 4u, 7u}) {
                // range where t = 120, far into the Gaussian tail
                const double xmax = std::pow(120.0 * (a + 1), 1.0 / (2 * a + 2));
                const double half = norm_half([&](double x) { return wavefunction(p, {fam, n}, x); }, xmax);
                CAPTURE(a);
                CAPTURE(gm);
                CAPTURE(n);
                CHECK(std::abs(2 * half - 1.0) < 1e-6);
            }
        }
    }
}

TEST_CASE("parabose shape: power times gaussian times laguerre") {
    for (double a : kA) {
        for (double gm : {1.0, 1.5}) {
            const auto p = OscillatorParams::create(a, gm, 1.0, 2.0, 1.0);
            const double l0 = p.lambda0();
            const double g = gm - 0.5;
            const double ae = g / (a + 1) - 0.5;
            for (unsigned n = 0; n < 6; ++n) {
                const unsigned m = n / 2;
                const bool odd = n % 2;
                const double q = odd ? 1.5 * a + g : 0.5 * a + g;
                const double al = odd ? ae + 1 : ae;
                double ratio0 = 0.0;
                for (double x : {0.15, 0.6, 1.2, 1.9}) {
                    const double t = std::pow(l0 * x, 2 * a + 2) / (a + 1);
                    const double shape = std::pow(l0 * x, q) * (odd ? x : 1.0) * std::exp(-0.5 * t) * lag(m, al, t);
                    const double r = wavefunction(p, {Family::Parabose, n}, x) / shape;
                    if (ratio0 == 0.0) ratio0 = r;
                    CHECK(r == doctest::Approx(ratio0).epsilon(1e-12));
                }
                CHECK(ratio0 == doctest::Approx(normalization(p, {Family::Parabose, n})).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("origin behaviour follows the leading exponent") {
    const auto pm = OscillatorParams::create(-0.6, 0.5);
    CHECK(leading_exponent(pm, StateIndex::canonical(0)) == doctest::Approx(-0.3));
    CHECK_THROWS_AS(wavefunction(pm, StateIndex::canonical(0), 0.0), SingularPointError);
    CHECK(wavefunction(pm, StateIndex::canonical(1), 0.0) == 0.0);
    const auto pp = OscillatorParams::create(-0.6, 1.0);
    CHECK(leading_exponent(pp, StateIndex::parabose(0)) == doctest::Approx(0.2));
    CHECK(wavefunction(pp, StateIndex::parabose(0), 0.0) == 0.0);
    CHECK(leading_exponent(pp, StateIndex::parabose(1)) == doctest::Approx(1.5 * -0.6 + 0.5 + 1));
}

TEST_CASE("eigenfunction jets agree with the scalar evaluation and finite differences") {
    for (double a : kA) {
        for (double gm : kGamma) {
            const auto p = OscillatorParams::create(a, gm);
            const Family fam = gm == 0.5 ? Family::CanonicalDeformed : Family::Parabose;
            for (unsigned n : {0u, 3u, 6u}) {
                const auto f = eigenfunction(p, {fam, n});
                CHECK(f.parity() == (n % 2 ? Parity::Odd : Parity::Even));
                for (double x : {-1.4, 0.35, 2.1}) {
                    const Jet j = f.jet(x, 2);
                    const double v = wavefunction(p, {fam, n}, x);
                    CHECK(std::abs(j[0] - v) < 1e-13 * std::max(1.0, std::abs(v)));
                    const double h = 1e-5;
                    const double fd =
                        (wavefunction(p, {fam, n}, x + h) - wavefunction(p, {fam, n}, x - h)) / (2 * h);
                    CHECK(std::abs(j[1] - fd) < 1e-7 * std::max(1.0, std::abs(fd)));
                }
            }
        }
    }
}

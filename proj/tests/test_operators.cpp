#include "pdmosc/errors.hpp"
#include "pdmosc/operators.hpp"

#include <doctest.h>

#include <cmath>

using namespace pdmosc;

namespace {

const cplx I(0.0, 1.0);

bool close(cplx got, cplx want, double tol) { return std::abs(got - want) <= tol * std::max(1.0, std::abs(want)); }

// f(x) = exp(-(x-0.7)^2) and its first two derivatives, written out by hand.
double f0(double x) { return std::exp(-(x - 0.7) * (x - 0.7)); }
double f1(double x) { return -2 * (x - 0.7) * f0(x); }
double f2(double x) { return (4 * (x - 0.7) * (x - 0.7) - 2) * f0(x); }

AnalyticFunction shifted_gaussian(int order = 6) {
    return AnalyticFunction::smooth(
        [](double x, int k) {
            const Jet s = Jet::variable(x, k) - 0.7;
            return exp(s * s * -1.0);
        },
        Parity::Mixed, order);
}

AnalyticFunction gaussian(int order = 6) {
    return AnalyticFunction::smooth(
        [](double x, int k) {
            const Jet X = Jet::variable(x, k);
            return exp(X * X * -0.5);
        },
        Parity::Even, order);
}

const double kPoints[] = {-2.1, -0.9, -0.25, 0.3, 1.1, 2.4};

}  // namespace

TEST_CASE("position operator") {
    for (double a : {-0.6, 0.0, 2.0}) {
        const auto p = OscillatorParams::create(a, 0.5, 1.7, 0.8, 1.2);
        const auto xf = op_position_tilde(p)(shifted_gaussian());
        for (double x : kPoints) {
            const double want = std::sqrt(p.m0()) * std::pow(p.lambda0(), a) * std::pow(std::abs(x), a) * x * f0(x);
            CHECK(close(xf.value(x), want, 1e-14));
        }
    }
}

TEST_CASE("canonical momentum operator") {
    for (double a : {-0.6, 0.0, 2.0}) {
        const auto p = OscillatorParams::create(a, 0.5, 1.7, 0.8, 1.2);
        const auto pf = op_momentum_tilde(p, Statistics::Canonical)(shifted_gaussian());
        const cplx c = -I * p.hbar() / (std::pow(p.lambda0(), a) * std::sqrt(p.m0()));
        for (double x : kPoints) {
            const cplx want = c * std::pow(std::abs(x), -a) * (f1(x) - 0.5 * a * f0(x) / x);
            CHECK(close(pf.value(x), want, 1e-13));
        }
    }
}

TEST_CASE("parabose momentum operator on a mixed function") {
    for (double a : {-0.6, 0.0, 2.0}) {
        for (double gm : {1.0, 1.5}) {
            const auto p = OscillatorParams::create(a, gm, 1.0, 1.3, 0.9);
            const auto pf = op_momentum_tilde(p, Statistics::Parabose)(shifted_gaussian());
            const cplx c = -I * p.hbar() / (std::pow(p.lambda0(), a) * std::sqrt(p.m0()));
            for (double x : kPoints) {
                const cplx want =
                    c * std::pow(std::abs(x), -a) * (f1(x) - 0.5 * a * f0(x) / x - (gm - 0.5) * f0(-x) / x);
                CHECK(close(pf.value(x), want, 1e-13));
            }
        }
    }
}

TEST_CASE("parity-tagged and untagged parabose momentum agree") {
    const auto p = OscillatorParams::create(2.0, 1.5);
    const auto tagged = gaussian();
    const auto untagged = AnalyticFunction::smooth(
        [](double x, int k) {
            const Jet X = Jet::variable(x, k);
            return exp(X * X * -0.5);
        },
        Parity::Mixed, 6);
    const auto op = op_momentum_tilde(p, Statistics::Parabose);
    for (double x : kPoints) {
        const Jet a = op(tagged).jet(x, 2);
        const Jet b = op(untagged).jet(x, 2);
        for (int k = 0; k <= 2; ++k) CHECK(close(a[k], b[k], 1e-12));
    }
}

TEST_CASE("textbook limit: [p, x] = -i hbar") {
    const auto p = OscillatorParams::create(0.0, 0.5, 1.0, 1.0, 0.7);
    const auto c = commutator(op_momentum_tilde(p, Statistics::Canonical), op_position_tilde(p));
    const auto r = c(shifted_gaussian());
    for (double x : kPoints) CHECK(close(r.value(x), -I * 0.7 * f0(x), 1e-13));
}

TEST_CASE("reflection and mass powers") {
    const auto f = shifted_gaussian();
    const auto rf = op_reflection()(f);
    CHECK(rf.max_order() == f.max_order());
    const auto p = OscillatorParams::create(-0.6, 0.5, 2.5);
    const auto mf = op_mass_power(p, -0.25)(f);
    for (double x : kPoints) {
        CHECK(close(rf.value(x), f0(-x), 1e-15));
        CHECK(close(mf.value(x), std::pow(2.5 * std::pow(p.lambda0() * x * p.lambda0() * x, -0.6), -0.25) * f0(x), 1e-14));
    }
    // R R = 1
    const auto rr = compose(op_reflection(), op_reflection())(f);
    for (double x : kPoints) CHECK(close(rr.value(x), f0(x), 1e-15));
}

TEST_CASE("direct hamiltonian against hand-written derivatives") {
    for (double a : {-0.6, 0.0, 2.0}) {
        for (double gm : {0.5, 1.5}) {
            const auto p = OscillatorParams::create(a, gm, 1.4, 0.9, 1.1);
            const Statistics st = gm == 0.5 ? Statistics::Canonical : Statistics::Parabose;
            const auto hf = op_hamiltonian_direct(p, st)(shifted_gaussian());
            const double g = gm - 0.5;
            for (double x : kPoints) {
                const double ax = std::abs(x);
                const double refl = f0(-x);
                const double bracket = f2(x) - (2 * a / x) * f1(x) +
                                       (a * (3 * a + 2) / 4 - g * g) / (x * x) * f0(x) + (a + 1) * g * refl / (x * x);
                const double kin = -(p.hbar() * p.hbar() / (2 * p.m0())) * std::pow(p.lambda0(), -2 * a) *
                                   std::pow(ax, -2 * a) * bracket;
                const double want = kin + potential(p, x) * f0(x);
                CAPTURE(a);
                CAPTURE(gm);
                CAPTURE(x);
                CHECK(close(hf.value(x), want, 1e-12));
            }
        }
    }
}

TEST_CASE("ladder form and direct form of H agree on smooth functions") {
    for (double a : {-0.6, 0.0, 2.0}) {
        for (double gm : {0.5, 1.0, 1.5}) {
            const auto p = OscillatorParams::create(a, gm);
            const Statistics st = gm == 0.5 ? Statistics::Canonical : Statistics::Parabose;
            const auto f = shifted_gaussian();
            const auto h1 = op_hamiltonian(p, st)(f);
            const auto h2 = op_hamiltonian_direct(p, st)(f);
            for (double x : {-1.8, -0.9, 0.5, 1.3}) CHECK(close(h1.value(x), h2.value(x), 1e-10));
        }
    }
}

TEST_CASE("eigenfunctions: H psi = E psi and a- annihilates the ground state") {
    for (double a : {-0.6, 0.0, 2.0}) {
        for (double gm : {0.5, 1.0, 1.5}) {
            const auto p = OscillatorParams::create(a, gm);
            const Family fam = gm == 0.5 ? Family::CanonicalDeformed : Family::Parabose;
            const Statistics st = gm == 0.5 ? Statistics::Canonical : Statistics::Parabose;
            const auto H = op_hamiltonian(p, st);
            for (unsigned n = 0; n < 5; ++n) {
                const auto psi = eigenfunction(p, {fam, n});
                const auto hpsi = H(psi);
                const double e = energy(p, {fam, n});
                for (double x : {-2.0, -0.05, 0.4, 1.6}) {
                    CHECK(std::abs(hpsi.value(x) - e * psi.value(x)) < 1e-11 * std::max(1.0, std::abs(e * psi.value(x))));
                }
            }
            const auto am = op_ladder(p, st, LadderSign::Minus)(eigenfunction(p, {fam, 0}));
            for (double x : {-1.2, 0.01, 0.7}) CHECK(std::abs(am.value(x)) < 1e-13);
        }
    }
}

TEST_CASE("parabose momentum is symmetric on functions vanishing at the origin") {
    // <f, p g> = <p f, g> with f, g real, by Simpson after x = s^3 on each half line.
    const auto f = AnalyticFunction::smooth(
        [](double x, int k) {
            const Jet X = Jet::variable(x, k);
            const Jet X2 = X * X;
            return X2 * X2 * (X * 0.3 + 1.0) * exp(X2 * -1.0);
        },
        Parity::Mixed, 4);
    const auto g = AnalyticFunction::smooth(
        [](double x, int k) {
            const Jet X = Jet::variable(x, k);
            const Jet s = X - 0.4;
            return X * X * X * X * X * exp(s * s * -1.0);
        },
        Parity::Mixed, 4);
    for (double a : {-0.6, 0.0, 2.0}) {
        for (double gm : {0.5, 1.0, 1.5}) {
            const auto p = OscillatorParams::create(a, gm);
            const auto P = op_momentum_tilde(p, Statistics::Parabose);
            const auto pf = P(f);
            const auto pg = P(g);
            const int n = 4000;
            const double smax = 2.0;
            const double h = smax / n;
            cplx lhs = 0.0, rhs = 0.0;
            for (int side : {-1, 1}) {
                for (int i = 1; i <= n; ++i) {
                    const double s = i * h;
                    const double x = side * s * s * s;
                    const double jac = 3 * s * s;
                    const double w = (i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
                    lhs += w * jac * std::conj(f.value(x)) * pg.value(x);
                    rhs += w * jac * std::conj(pf.value(x)) * g.value(x);
                }
            }
            CAPTURE(a);
            CAPTURE(gm);
            CHECK(std::abs(lhs - rhs) < 1e-8 * std::abs(lhs));
        }
    }
}

TEST_CASE("derivative budgets") {
    const auto p = OscillatorParams::create(0.5, 1.0);
    const auto H = op_hamiltonian(p, Statistics::Parabose);
    CHECK(H.derivative_budget() == 2);
    CHECK(op_position_tilde(p).derivative_budget() == 0);
    CHECK(op_momentum_tilde(p, Statistics::Parabose).parity_action());
    CHECK_FALSE(op_position_tilde(p).parity_action());
    const auto f1ord = shifted_gaussian(1);
    CHECK_THROWS_AS(H(f1ord), DomainError);
    CHECK(H(shifted_gaussian(4)).max_order() == 2);
    CHECK(commutator(H, op_ladder(p, Statistics::Parabose, LadderSign::Plus)).derivative_budget() == 3);
}

TEST_CASE("linear combinations") {
    const auto p = OscillatorParams::create(0.0, 0.5);
    const auto x = op_position_tilde(p);
    const auto f = shifted_gaussian();
    const auto s = sum(x, scaled(2.0, identity_operator()))(f);
    const auto d = difference(x, x)(f);
    const auto ac = anticommutator(x, op_reflection())(f);
    for (double y : kPoints) {
        CHECK(close(s.value(y), (y + 2.0) * f0(y), 1e-15));
        CHECK(std::abs(d.value(y)) == 0.0);
        // x R f + R x f = x f(-x) - x f(-x) = 0
        CHECK(std::abs(ac.value(y)) < 1e-15);
    }
}

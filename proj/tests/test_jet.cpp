#include "pdmosc/errors.hpp"
#include "pdmosc/jet.hpp"

#include <doctest.h>

#include <cmath>

using namespace pdmosc;

namespace {

bool close(cplx got, cplx want, double tol) { return std::abs(got - want) <= tol * std::max(1.0, std::abs(want)); }

}  // namespace

TEST_CASE("variable and arithmetic") {
    const Jet x = Jet::variable(1.5, 4);
    CHECK(x.order() == 4);
    CHECK(x[0] == cplx(1.5));
    CHECK(x[1] == cplx(1.0));
    CHECK(x[2] == cplx(0.0));
    // (x^2 + 3x - 1)'' = 2
    const Jet p = x * x + 3.0 * x - 1.0;
    CHECK(close(p[0], 1.5 * 1.5 + 4.5 - 1.0, 1e-15));
    CHECK(close(p[1], 2 * 1.5 + 3.0, 1e-15));
    CHECK(close(p[2], 2.0, 1e-15));
    CHECK(close(p[3], 0.0, 1e-15));
}

TEST_CASE("product rule to fourth order") {
    // d^k [x^3 * x^2] = d^k x^5
    const double x0 = 0.8;
    const Jet x = Jet::variable(x0, 4);
    const Jet f = (x * x * x) * (x * x);
    const double want[] = {std::pow(x0, 5), 5 * std::pow(x0, 4), 20 * std::pow(x0, 3), 60 * x0 * x0, 120 * x0};
    for (int k = 0; k <= 4; ++k) CHECK(close(f[k], want[k], 1e-14));
}

TEST_CASE("exp of a quadratic") {
    // f = e^{-y^2/2}: f' = -y f, f'' = (y^2-1) f, f''' = (3y - y^3) f, f'''' = (y^4 - 6y^2 + 3) f
    for (double y : {-1.3, 0.0, 0.4, 2.2}) {
        const Jet x = Jet::variable(y, 4);
        const Jet f = exp(-0.5 * (x * x));
        const double e = std::exp(-0.5 * y * y);
        CHECK(close(f[0], e, 1e-15));
        CHECK(close(f[1], -y * e, 1e-15));
        CHECK(close(f[2], (y * y - 1) * e, 1e-14));
        CHECK(close(f[3], (3 * y - y * y * y) * e, 1e-14));
        CHECK(close(f[4], (std::pow(y, 4) - 6 * y * y + 3) * e, 1e-14));
    }
}

TEST_CASE("log, reciprocal, division and pow") {
    const double y = 1.7;
    const Jet x = Jet::variable(y, 4);
    const Jet l = log(x);
    CHECK(close(l[0], std::log(y), 1e-15));
    CHECK(close(l[1], 1 / y, 1e-15));
    CHECK(close(l[2], -1 / (y * y), 1e-15));
    CHECK(close(l[3], 2 / (y * y * y), 1e-15));
    CHECK(close(l[4], -6 / std::pow(y, 4), 1e-14));

    const Jet r = reciprocal(x);
    const Jet q = Jet(4, 1.0) / x;
    for (int k = 0; k <= 4; ++k) {
        const double want = std::pow(-1.0, k) * std::tgamma(k + 1.0) / std::pow(y, k + 1);
        CHECK(close(r[k], want, 1e-14));
        CHECK(close(q[k], want, 1e-14));
    }

    const double qexp = -0.35;
    const Jet pw = pow(x, qexp);
    double fall = 1.0;
    for (int k = 0; k <= 4; ++k) {
        CHECK(close(pw[k], fall * std::pow(y, qexp - k), 1e-14));
        fall *= (qexp - k);
    }
}

TEST_CASE("derivative and truncation") {
    const Jet f = exp(Jet::variable(0.3, 4));
    const Jet d = f.derivative();
    CHECK(d.order() == 3);
    for (int k = 0; k <= 3; ++k) CHECK(d[k] == f[k + 1]);
    CHECK(f.truncated(2).order() == 2);
    CHECK_THROWS_AS(Jet(0, 1.0).derivative(), DomainError);
    // mixed orders truncate to the smaller one
    CHECK((f * Jet::variable(0.3, 2)).order() == 2);
}

TEST_CASE("reflection") {
    // f(y) = y^3 + y at x = 0.6; g(y) = f(-y) at -0.6 has g^(k) = (-1)^k f^(k)(0.6)
    const Jet x = Jet::variable(0.6, 4);
    const Jet f = x * x * x + x;
    const Jet g = f.reflected();
    for (int k = 0; k <= 4; ++k) CHECK(g[k] == f[k] * std::pow(-1.0, k));
}

TEST_CASE("signed absolute powers") {
    const double q = 1.4;
    for (double y : {-0.9, 0.9, 2.5, -3.0}) {
        for (int s : {0, 1}) {
            const Jet j = signed_abs_power(y, q, s, 4);
            const double sg = (s == 1 && y < 0) ? -1.0 : 1.0;
            // d^k/dy^k |y|^q sgn^s = q(q-1)...(q-k+1) |y|^(q-k) sgn(y)^(s+k)
            double fall = 1.0;
            for (int k = 0; k <= 4; ++k) {
                const double sk = (y < 0 && (k % 2 == 1)) ? -1.0 : 1.0;
                CHECK(close(j[k], sg * sk * fall * std::pow(std::abs(y), q - k), 1e-14));
                fall *= (q - k);
            }
        }
    }
    CHECK_THROWS_AS(signed_abs_power(0.0, 0.5, 0, 2), SingularPointError);
}

TEST_CASE("power jet euler cancels the leading power exactly") {
    // f = |y|^k (1 + y): f' - k f / y = |y|^k
    const double kappa = 0.37;
    for (double y : {-1e-6, 1e-6, 0.8, -2.0}) {
        PowerJet f(y, 4);
        f.add_term({kappa, 0, Jet::variable(y, 4) + 1.0});
        const PowerJet e = f.euler(kappa);
        const Jet c = e.collapse();
        const Jet want = signed_abs_power(y, kappa, 0, 3);
        for (int k = 0; k <= 3; ++k) CHECK(close(c[k], want[k], 1e-13));
    }
}

TEST_CASE("power jet merges equal exponents and reflects") {
    const double y = 0.7;
    PowerJet f = PowerJet::regular(y, Jet::variable(y, 3));
    f = f.times_power(0.5, 1);
    PowerJet g(y, 3);
    g.add_term({0.5, 1, Jet(3, 2.0)});
    const PowerJet h = f + g;
    CHECK(h.terms().size() == 1);
    CHECK(close(h.value(), std::sqrt(y) * (y + 2.0), 1e-15));
    // (f - f) drops to no terms
    CHECK((f - f).terms().empty());
    // f(y) = |y|^0.5 sgn(y) y is even: reflection at x from the representation at -x
    PowerJet at_minus(-y, 3);
    at_minus.add_term({0.5, 1, Jet::variable(-y, 3)});
    const Jet r = PowerJet::reflection_of(at_minus).collapse();
    const Jet direct = f.collapse();
    for (int k = 0; k <= 3; ++k) CHECK(close(r[k], direct[k], 1e-14));
}

TEST_CASE("parity algebra") {
    CHECK(flip(Parity::Even) == Parity::Odd);
    CHECK(flip(Parity::Mixed) == Parity::Mixed);
    CHECK(combine(Parity::Odd, Parity::Odd) == Parity::Odd);
    CHECK(combine(Parity::Even, Parity::Odd) == Parity::Mixed);
    CHECK(combine(Parity::Mixed, Parity::Even) == Parity::Mixed);
    CHECK(parity_sign(Parity::Odd) == -1.0);
    CHECK_THROWS_AS(parity_sign(Parity::Mixed), DomainError);
}

TEST_CASE("analytic function order bounds and origin") {
    const auto f = AnalyticFunction::smooth([](double x, int k) { return exp(Jet::variable(x, k)); }, Parity::Mixed, 3);
    CHECK(f.max_order() == 3);
    CHECK(close(f.value(0.5), std::exp(0.5), 1e-15));
    CHECK_THROWS_AS(f(0.5, 4), DomainError);
    CHECK_THROWS_AS(f(0.0, 1), SingularPointError);
    const auto g = f + f;
    CHECK(close(g.value(0.5), 2 * std::exp(0.5), 1e-15));
    CHECK(close((cplx(0, 1) * f).value(0.5), cplx(0, std::exp(0.5)), 1e-15));
}

#include "pdmosc/operators.hpp"

#include "pdmosc/errors.hpp"

#include <algorithm>
#include <cmath>

namespace pdmosc {

namespace {

using Pointwise = std::function<PowerJet(const AnalyticFunction& f, double x, int order)>;

// Wraps a pointwise rule into an operator consuming `budget` derivative orders.
OperatorSpec make_local(std::string name, int budget, bool parity_action, bool flips_parity, Pointwise rule) {
    return OperatorSpec(std::move(name), budget, parity_action,
                        [budget, flips_parity, rule](const AnalyticFunction& f) {
                            const Parity parity = flips_parity ? flip(f.parity()) : f.parity();
                            return AnalyticFunction([f, rule](double x, int k) { return rule(f, x, k); }, parity,
                                                    f.max_order() - budget);
                        });
}

PowerJet reflect_at(const AnalyticFunction& f, double x, int order) {
    return PowerJet::reflection_of(f(-x, order));
}

}  // namespace

OperatorSpec::OperatorSpec(std::string name, int derivative_budget, bool parity_action, Rule rule)
    : name_(std::move(name)), budget_(derivative_budget), parity_action_(parity_action), rule_(std::move(rule)) {}

AnalyticFunction OperatorSpec::apply(const AnalyticFunction& f) const {
    if (f.max_order() < budget_) {
        throw DomainError(name_ + ": argument is queryable to order " + std::to_string(f.max_order()) +
                          " but the operator consumes " + std::to_string(budget_));
    }
    return rule_(f);
}

OperatorSpec identity_operator() {
    return OperatorSpec("1", 0, false, [](const AnalyticFunction& f) { return f; });
}

OperatorSpec compose(const OperatorSpec& outer, const OperatorSpec& inner) {
    return OperatorSpec(outer.name() + " " + inner.name(), outer.derivative_budget() + inner.derivative_budget(),
                        outer.parity_action() || inner.parity_action(),
                        [outer, inner](const AnalyticFunction& f) { return outer.apply(inner.apply(f)); });
}

OperatorSpec sum(const OperatorSpec& a, const OperatorSpec& b) {
    return OperatorSpec("(" + a.name() + " + " + b.name() + ")",
                        std::max(a.derivative_budget(), b.derivative_budget()),
                        a.parity_action() || b.parity_action(),
                        [a, b](const AnalyticFunction& f) { return a.apply(f) + b.apply(f); });
}

OperatorSpec difference(const OperatorSpec& a, const OperatorSpec& b) {
    return OperatorSpec("(" + a.name() + " - " + b.name() + ")",
                        std::max(a.derivative_budget(), b.derivative_budget()),
                        a.parity_action() || b.parity_action(),
                        [a, b](const AnalyticFunction& f) { return a.apply(f) - b.apply(f); });
}

OperatorSpec scaled(cplx c, const OperatorSpec& a) {
    return OperatorSpec("c " + a.name(), a.derivative_budget(), a.parity_action(),
                        [c, a](const AnalyticFunction& f) { return c * a.apply(f); });
}

OperatorSpec commutator(const OperatorSpec& a, const OperatorSpec& b) {
    auto op = difference(compose(a, b), compose(b, a));
    return OperatorSpec("[" + a.name() + ", " + b.name() + "]", op.derivative_budget(), op.parity_action(),
                        [op](const AnalyticFunction& f) { return op.apply(f); });
}

OperatorSpec anticommutator(const OperatorSpec& a, const OperatorSpec& b) {
    auto op = sum(compose(a, b), compose(b, a));
    return OperatorSpec("{" + a.name() + ", " + b.name() + "}", op.derivative_budget(), op.parity_action(),
                        [op](const AnalyticFunction& f) { return op.apply(f); });
}

OperatorSpec op_position_tilde(const OscillatorParams& p) {
    const double c = std::sqrt(p.m0()) * std::pow(p.lambda0(), p.a());
    const double a = p.a();
    return make_local("x~", 0, false, true, [c, a](const AnalyticFunction& f, double x, int k) {
        return cplx(c) * f(x, k).times_power(a + 1.0, 1);
    });
}

OperatorSpec op_momentum_tilde(const OscillatorParams& p, Statistics stat) {
    const double a = p.a();
    const double half_a = p.half_a();
    const double g = p.g();
    const cplx c = cplx(0.0, -p.hbar() / (std::pow(p.lambda0(), a) * std::sqrt(p.m0())));

    if (stat == Statistics::Canonical) {
        return make_local("p~", 1, false, true, [c, a, half_a](const AnalyticFunction& f, double x, int k) {
            return c * f(x, k + 1).euler(half_a).times_power(-a, 0);
        });
    }
    return make_local("p~", 1, true, true, [c, a, half_a, g](const AnalyticFunction& f, double x, int k) {
        if (f.parity() != Parity::Mixed) {
            // R f = +-f folds the reflection term into the Euler coefficient.
            const double kappa = half_a + g * parity_sign(f.parity());
            return c * f(x, k + 1).euler(kappa).times_power(-a, 0);
        }
        PowerJet local = f(x, k + 1).euler(half_a).times_power(-a, 0);
        PowerJet reflected = reflect_at(f, x, k).times_power(-a - 1.0, 1);
        return c * local + (-g * c) * reflected;
    });
}

OperatorSpec op_ladder(const OscillatorParams& p, Statistics stat, LadderSign sign) {
    const double s = (sign == LadderSign::Plus) ? 1.0 : -1.0;
    const double cx = std::sqrt(p.omega() / p.hbar()) / std::sqrt(2.0);
    const cplx cp = cplx(0.0, -s / (std::sqrt(p.omega() * p.hbar()) * std::sqrt(2.0)));
    auto op = sum(scaled(cx, op_position_tilde(p)), scaled(cp, op_momentum_tilde(p, stat)));
    const std::string name = (sign == LadderSign::Plus) ? "a+" : "a-";
    return OperatorSpec(name, op.derivative_budget(), op.parity_action(),
                        [op](const AnalyticFunction& f) { return op.apply(f); });
}

OperatorSpec op_hamiltonian(const OscillatorParams& p, Statistics stat) {
    const auto up = op_ladder(p, stat, LadderSign::Plus);
    const auto down = op_ladder(p, stat, LadderSign::Minus);
    const double hw = p.hbar() * p.omega();
    OperatorSpec op = (stat == Statistics::Canonical)
                          ? sum(scaled(hw, compose(up, down)), scaled(hw * 0.5 * (1.0 + p.a()), identity_operator()))
                          : scaled(0.5 * hw, anticommutator(up, down));
    return OperatorSpec("H", op.derivative_budget(), op.parity_action(),
                        [op](const AnalyticFunction& f) { return op.apply(f); });
}

OperatorSpec op_hamiltonian_direct(const OscillatorParams& p, Statistics stat) {
    const double a = p.a();
    const double g = (stat == Statistics::Parabose) ? p.g() : 0.0;
    const double kinetic = -p.hbar() * p.hbar() / (2.0 * p.m0()) * std::pow(p.lambda0(), -2.0 * a);
    const double local_c = a * (3.0 * a + 2.0) / 4.0 - g * g;
    const double reflect_c = (a + 1.0) * g;
    const double v_c = 0.5 * p.m0() * p.omega() * p.omega() * std::pow(p.lambda0(), 2.0 * a);
    const bool uses_reflection = stat == Statistics::Parabose;

    return make_local(
        "H_direct", 2, uses_reflection, false,
        [=](const AnalyticFunction& f, double x, int k) {
            const Jet fj = f.jet(x, k + 2);
            const Jet d1 = fj.derivative();
            const Jet d2 = d1.derivative();
            const Jet inv_x = signed_abs_power(x, -1.0, 1, k);
            const Jet inv_x2 = signed_abs_power(x, -2.0, 0, k);
            Jet bracket = d2 - (inv_x * d1.truncated(k)) * (2.0 * a) + inv_x2 * fj.truncated(k) * local_c;
            if (reflect_c != 0.0) {
                const Jet rf = (f.parity() != Parity::Mixed) ? fj.truncated(k) * parity_sign(f.parity())
                                                              : reflect_at(f, x, k).collapse();
                bracket += inv_x2 * rf * reflect_c;
            }
            Jet result = signed_abs_power(x, -2.0 * a, 0, k) * bracket * kinetic +
                         signed_abs_power(x, 2.0 * a + 2.0, 0, k) * fj.truncated(k) * v_c;
            return PowerJet::regular(x, std::move(result));
        });
}

OperatorSpec op_reflection() {
    return make_local("R", 0, true, false, [](const AnalyticFunction& f, double x, int k) { return reflect_at(f, x, k); });
}

OperatorSpec op_mass_power(const OscillatorParams& p, double nu) {
    const double c = std::pow(p.m0(), nu) * std::pow(p.lambda0(), 2.0 * p.a() * nu);
    const double q = 2.0 * p.a() * nu;
    return make_local("M^nu", 0, false, false, [c, q](const AnalyticFunction& f, double x, int k) {
        return cplx(c) * f(x, k).times_power(q, 0);
    });
}

}  // namespace pdmosc

#pragma once

#include "pdmosc/jet.hpp"
#include "pdmosc/model.hpp"

#include <functional>
#include <string>

namespace pdmosc {

enum class Statistics { Canonical, Parabose };
enum class LadderSign { Plus, Minus };

/// Linear operator on analytic functions. Applying it to a function queryable to
/// order K gives a function queryable to order K - derivative_budget().
class OperatorSpec {
public:
    using Rule = std::function<AnalyticFunction(const AnalyticFunction&)>;

    OperatorSpec(std::string name, int derivative_budget, bool parity_action, Rule rule);

    const std::string& name() const { return name_; }
    int derivative_budget() const { return budget_; }
    /// True when the operator references f(-x).
    bool parity_action() const { return parity_action_; }

    AnalyticFunction apply(const AnalyticFunction& f) const;
    AnalyticFunction operator()(const AnalyticFunction& f) const { return apply(f); }

private:
    std::string name_;
    int budget_;
    bool parity_action_;
    Rule rule_;
};

OperatorSpec identity_operator();
OperatorSpec compose(const OperatorSpec& outer, const OperatorSpec& inner);
OperatorSpec sum(const OperatorSpec& a, const OperatorSpec& b);
OperatorSpec difference(const OperatorSpec& a, const OperatorSpec& b);
OperatorSpec scaled(cplx c, const OperatorSpec& a);
/// AB - BA
OperatorSpec commutator(const OperatorSpec& a, const OperatorSpec& b);
/// AB + BA
OperatorSpec anticommutator(const OperatorSpec& a, const OperatorSpec& b);

/// f -> sqrt(m0) lambda0^a |x|^a x f
OperatorSpec op_position_tilde(const OscillatorParams& p);

/// Canonical: -i hbar / (lambda0^a sqrt(m0)) |x|^-a (f' - (a/2) f / x).
/// Parabose adds + i hbar / (lambda0^a sqrt(m0)) |x|^-a (gamma - 1/2) f(-x) / x.
OperatorSpec op_momentum_tilde(const OscillatorParams& p, Statistics stat);

/// (1/sqrt 2)(sqrt(omega/hbar) x~ -+ i/sqrt(omega hbar) p~)
OperatorSpec op_ladder(const OscillatorParams& p, Statistics stat, LadderSign sign);

/// Canonical: hbar omega (a+ a- + (1+a)/2). Parabose: (hbar omega / 2)(a+ a- + a- a+).
OperatorSpec op_hamiltonian(const OscillatorParams& p, Statistics stat);

/// The same Hamiltonian written out as a second-order differential expression
/// with the potential, evaluated on ordinary jets.
OperatorSpec op_hamiltonian_direct(const OscillatorParams& p, Statistics stat);

/// f(x) -> f(-x)
OperatorSpec op_reflection();

/// f -> M(x)^nu f
OperatorSpec op_mass_power(const OscillatorParams& p, double nu);

}  // namespace pdmosc

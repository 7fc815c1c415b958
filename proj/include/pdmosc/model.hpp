#pragma once

#include "pdmosc/jet.hpp"

namespace pdmosc {

/// Physical constants, deformation a > -1 and parabose parameter gamma >= 1/2.
/// lambda0 = sqrt(m0 omega / hbar) is fixed at construction.
class OscillatorParams {
public:
    /// Validates every field; throws DomainError with the offending value.
    static OscillatorParams create(double a, double gamma, double m0 = 1.0, double omega = 1.0, double hbar = 1.0);

    double m0() const { return m0_; }
    double omega() const { return omega_; }
    double hbar() const { return hbar_; }
    double a() const { return a_; }
    double gamma() const { return gamma_; }
    double lambda0() const { return lambda0_; }

    /// gamma - 1/2, the strength of the reflection term.
    double g() const { return gamma_ - 0.5; }
    double half_a() const { return 0.5 * a_; }

private:
    OscillatorParams(double m0, double omega, double hbar, double a, double gamma);

    double m0_;
    double omega_;
    double hbar_;
    double a_;
    double gamma_;
    double lambda0_;
};

enum class Family { CanonicalDeformed, Parabose };

/// Global quantum number n; for the parabose family n = 2 radial + parity.
struct StateIndex {
    Family family = Family::CanonicalDeformed;
    unsigned n = 0;

    static StateIndex canonical(unsigned n) { return {Family::CanonicalDeformed, n}; }
    static StateIndex parabose(unsigned n) { return {Family::Parabose, n}; }
    static StateIndex parabose_sector(unsigned parity, unsigned radial) {
        return {Family::Parabose, 2 * radial + (parity & 1u)};
    }

    unsigned parity() const { return n % 2; }
    unsigned radial() const { return n / 2; }
};

struct SolutionExponents {
    double A_even;
    double B;
    double alpha_even;
    double alpha_odd;
};

/// Canonical family: A_even = a/(2(a+1)); the alpha fields hold the gamma = 1/2
/// values -1/2 and 1/2 that link Hermite to Laguerre polynomials.
SolutionExponents solution_exponents(const OscillatorParams& p, Family family);

/// Power of |x| governing psi near the origin for the given state.
double leading_exponent(const OscillatorParams& p, StateIndex state);

/// m0 (lambda0^2 x^2)^a. Throws SingularPointError at x = 0 when a < 0.
double mass(const OscillatorParams& p, double x);

/// (m0 omega^2 / 2)(lambda0^2 x^2)^a x^2, zero at the origin.
double potential(const OscillatorParams& p, double x);

double xi_of_x(const OscillatorParams& p, double x);
double x_of_xi(const OscillatorParams& p, double xi);

double energy(const OscillatorParams& p, StateIndex state);
/// Sector forms (a+1) hbar omega (2m + 1/2 + g/(a+1)) and (a+1) hbar omega (2m + 3/2 + g/(a+1)).
double energy_even_sector(const OscillatorParams& p, unsigned m);
double energy_odd_sector(const OscillatorParams& p, unsigned m);

/// Signed normalization constant (parabose constants carry (-1)^m).
double normalization(const OscillatorParams& p, StateIndex state);

/// psi evaluated in the log domain. At x = 0 returns the limit, or throws
/// SingularPointError when the leading exponent is negative.
double wavefunction(const OscillatorParams& p, StateIndex state, double x);

/// The same state as a parity-tagged analytic function, expanded term by term in
/// powers of |x| so that operators see its exact local structure.
AnalyticFunction eigenfunction(const OscillatorParams& p, StateIndex state);

}  // namespace pdmosc

#include "pdmosc/model.hpp"

#include "pdmosc/errors.hpp"
#include "pdmosc/specfun.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

namespace pdmosc {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw DomainError(what);
}

// Upward recurrences with a running power-of-two scale: returns (mantissa, log scale).
std::pair<double, double> hermite_scaled(unsigned n, double x) {
    double prev = 1.0;
    if (n == 0) return {prev, 0.0};
    double cur = 2.0 * x;
    double log_scale = 0.0;
    for (unsigned k = 1; k < n; ++k) {
        double next = 2.0 * x * cur - 2.0 * k * prev;
        prev = cur;
        cur = next;
        if (std::abs(cur) > 1e150) {
            prev *= 1e-150;
            cur *= 1e-150;
            log_scale += 150.0 * std::numbers::ln10;
        }
    }
    return {cur, log_scale};
}

std::pair<double, double> laguerre_scaled(unsigned m, double alpha, double x) {
    double prev = 1.0;
    if (m == 0) return {prev, 0.0};
    double cur = 1.0 + alpha - x;
    double log_scale = 0.0;
    for (unsigned k = 1; k < m; ++k) {
        double next = ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
        if (std::abs(cur) > 1e150) {
            prev *= 1e-150;
            cur *= 1e-150;
            log_scale += 150.0 * std::numbers::ln10;
        }
    }
    return {cur, log_scale};
}

double log_abs_normalization(const OscillatorParams& p, StateIndex s) {
    const double a1 = p.a() + 1.0;
    const double ll = std::log(p.lambda0());
    if (s.family == Family::CanonicalDeformed) {
        return 0.25 * std::log(a1 / std::numbers::pi) +
               0.5 * (ll - s.n * std::numbers::ln2 - ln_gamma(s.n + 1.0));
    }
    const auto ex = solution_exponents(p, Family::Parabose);
    const unsigned m = s.radial();
    if (s.parity() == 0) {
        return 0.5 * (0.5 - p.g() / a1) * std::log(a1) +
               0.5 * (ll + ln_gamma(m + 1.0) - ln_gamma(m + ex.alpha_even + 1.0));
    }
    return -0.5 * (0.5 + p.g() / a1) * std::log(a1) +
           0.5 * (3.0 * ll + ln_gamma(m + 1.0) - ln_gamma(m + ex.alpha_odd + 1.0));
}

double normalization_sign(StateIndex s) {
    if (s.family == Family::CanonicalDeformed) return 1.0;
    return (s.radial() % 2 == 0) ? 1.0 : -1.0;
}

// Exponent of |lambda0 x| multiplying the polynomial part (odd parabose states carry an extra x).
double envelope_exponent(const OscillatorParams& p, StateIndex s) {
    if (s.family == Family::CanonicalDeformed) return p.half_a();
    return s.parity() == 0 ? p.half_a() + p.g() : 1.5 * p.a() + p.g();
}

struct MonomialTerm {
    double exponent;  // power of |y|
    int sign_power;
    double log_abs_coeff;
    double sign;
};

// psi = sum_k c_k |y|^(q_k) sgn(y)^(s_k) exp(-t/2)
std::vector<MonomialTerm> monomial_expansion(const OscillatorParams& p, StateIndex s) {
    const double a = p.a();
    const double a1 = a + 1.0;
    const double ll = std::log(p.lambda0());
    const double log_c = log_abs_normalization(p, s);
    const double sign_c = normalization_sign(s);
    std::vector<MonomialTerm> out;

    if (s.family == Family::CanonicalDeformed) {
        // H_n(xi) = sum_j (-1)^j n! (2 xi)^(n-2j) / (j! (n-2j)!), xi^k = (a+1)^(-k/2) |lambda0 y|^(k(a+1)) sgn^k
        const unsigned n = s.n;
        for (unsigned j = 0; 2 * j <= n; ++j) {
            const unsigned k = n - 2 * j;
            const double log_h = ln_gamma(n + 1.0) + k * std::numbers::ln2 - ln_gamma(j + 1.0) - ln_gamma(k + 1.0);
            const double q = p.half_a() + k * a1;
            MonomialTerm t;
            t.exponent = q;
            t.sign_power = static_cast<int>(k & 1u);
            t.log_abs_coeff = log_c + log_h - 0.5 * k * std::log(a1) + q * ll;
            t.sign = sign_c * ((j % 2 == 0) ? 1.0 : -1.0);
            out.push_back(t);
        }
        return out;
    }

    const auto ex = solution_exponents(p, Family::Parabose);
    const unsigned m = s.radial();
    const bool odd = s.parity() == 1;
    const double alpha = odd ? ex.alpha_odd : ex.alpha_even;
    // L_m^alpha(t) = sum_k (-1)^k Gamma(m+alpha+1) / (Gamma(k+alpha+1) (m-k)! k!) t^k,
    // t^k = |lambda0 y|^(k(2a+2)) / (a+1)^k
    const double base = odd ? 1.5 * a + p.g() + 1.0 : p.half_a() + p.g();
    const double lambda_power = odd ? 1.5 * a + p.g() : base;
    for (unsigned k = 0; k <= m; ++k) {
        const double log_l =
            ln_gamma(m + alpha + 1.0) - ln_gamma(k + alpha + 1.0) - ln_gamma(m - k + 1.0) - ln_gamma(k + 1.0);
        MonomialTerm t;
        t.exponent = base + k * (2.0 * a1);
        t.sign_power = odd ? 1 : 0;
        t.log_abs_coeff = log_c + log_l - k * std::log(a1) + (lambda_power + k * (2.0 * a1)) * ll;
        t.sign = sign_c * ((k % 2 == 0) ? 1.0 : -1.0);
        out.push_back(t);
    }
    return out;
}

}  // namespace

OscillatorParams::OscillatorParams(double m0, double omega, double hbar, double a, double gamma)
    : m0_(m0), omega_(omega), hbar_(hbar), a_(a), gamma_(gamma), lambda0_(std::sqrt(m0 * omega / hbar)) {}

OscillatorParams OscillatorParams::create(double a, double gamma, double m0, double omega, double hbar) {
    require(std::isfinite(m0) && m0 > 0.0, "m0 must be positive and finite, got " + std::to_string(m0));
    require(std::isfinite(omega) && omega > 0.0, "omega must be positive and finite, got " + std::to_string(omega));
    require(std::isfinite(hbar) && hbar > 0.0, "hbar must be positive and finite, got " + std::to_string(hbar));
    require(std::isfinite(a) && a > -1.0, "deformation a must satisfy a > -1, got " + std::to_string(a));
    require(std::isfinite(gamma) && gamma >= 0.5, "gamma must satisfy gamma >= 1/2, got " + std::to_string(gamma));
    return OscillatorParams(m0, omega, hbar, a, gamma);
}

SolutionExponents solution_exponents(const OscillatorParams& p, Family family) {
    const double a1 = p.a() + 1.0;
    if (family == Family::CanonicalDeformed) {
        return {p.a() / (2.0 * a1), -0.5, -0.5, 0.5};
    }
    const double alpha_even = 0.5 * ((2.0 * p.gamma() - 1.0) / a1 - 1.0);
    return {(p.a() + 2.0 * p.gamma() - 1.0) / (2.0 * a1), -0.5, alpha_even, alpha_even + 1.0};
}

double leading_exponent(const OscillatorParams& p, StateIndex s) {
    if (s.family == Family::CanonicalDeformed) {
        return s.parity() == 0 ? p.half_a() : p.half_a() + p.a() + 1.0;
    }
    return s.parity() == 0 ? p.half_a() + p.g() : 1.5 * p.a() + p.g() + 1.0;
}

double mass(const OscillatorParams& p, double x) {
    if (x == 0.0) {
        if (p.a() < 0.0) throw SingularPointError("mass: M(0) is singular for a < 0");
        return p.a() == 0.0 ? p.m0() : 0.0;
    }
    const double l2x2 = p.lambda0() * p.lambda0() * x * x;
    return p.m0() * std::pow(l2x2, p.a());
}

double potential(const OscillatorParams& p, double x) {
    if (x == 0.0) return 0.0;
    const double l2x2 = p.lambda0() * p.lambda0() * x * x;
    return 0.5 * p.m0() * p.omega() * p.omega() * std::pow(l2x2, p.a()) * x * x;
}

double xi_of_x(const OscillatorParams& p, double x) {
    const double mag = std::pow(p.lambda0() * std::abs(x), p.a() + 1.0) / std::sqrt(p.a() + 1.0);
    return std::copysign(mag, x);
}

double x_of_xi(const OscillatorParams& p, double xi) {
    const double mag = std::pow(std::sqrt(p.a() + 1.0) * std::abs(xi), 1.0 / (p.a() + 1.0)) / p.lambda0();
    return std::copysign(mag, xi);
}

double energy(const OscillatorParams& p, StateIndex s) {
    const double base = (p.a() + 1.0) * p.hbar() * p.omega() * (s.n + 0.5);
    if (s.family == Family::CanonicalDeformed) return base;
    return base + p.hbar() * p.omega() * p.g();
}

double energy_even_sector(const OscillatorParams& p, unsigned m) {
    const double a1 = p.a() + 1.0;
    return a1 * p.hbar() * p.omega() * (2.0 * m + 0.5 + p.g() / a1);
}

double energy_odd_sector(const OscillatorParams& p, unsigned m) {
    const double a1 = p.a() + 1.0;
    return a1 * p.hbar() * p.omega() * (2.0 * m + 1.5 + p.g() / a1);
}

double normalization(const OscillatorParams& p, StateIndex s) {
    return normalization_sign(s) * std::exp(log_abs_normalization(p, s));
}

double wavefunction(const OscillatorParams& p, StateIndex s, double x) {
    if (x == 0.0) {
        const double e = leading_exponent(p, s);
        if (e < 0.0) {
            throw SingularPointError("wavefunction: state diverges like |x|^" + std::to_string(e) + " at the origin");
        }
        if (e > 0.0) return 0.0;
        // Leading exponent zero: only even states with a vanishing envelope exponent.
        if (s.family == Family::CanonicalDeformed) return normalization(p, s) * hermite(s.n, 0.0);
        const auto ex = solution_exponents(p, Family::Parabose);
        return normalization(p, s) * laguerre(s.radial(), ex.alpha_even, 0.0);
    }

    const double a1 = p.a() + 1.0;
    const double log_lx = std::log(p.lambda0() * std::abs(x));
    const double t = std::exp(2.0 * a1 * log_lx) / a1;
    double log_mag = log_abs_normalization(p, s) + envelope_exponent(p, s) * log_lx - 0.5 * t;
    double sign = normalization_sign(s);

    std::pair<double, double> poly;
    if (s.family == Family::CanonicalDeformed) {
        poly = hermite_scaled(s.n, xi_of_x(p, x));
    } else {
        const auto ex = solution_exponents(p, Family::Parabose);
        if (s.parity() == 0) {
            poly = laguerre_scaled(s.radial(), ex.alpha_even, t);
        } else {
            poly = laguerre_scaled(s.radial(), ex.alpha_odd, t);
            log_mag += std::log(std::abs(x));
            if (x < 0.0) sign = -sign;
        }
    }
    if (poly.first == 0.0) return 0.0;
    if (poly.first < 0.0) sign = -sign;
    log_mag += std::log(std::abs(poly.first)) + poly.second;
    return sign * std::exp(log_mag);
}

AnalyticFunction eigenfunction(const OscillatorParams& p, StateIndex s) {
    std::vector<PowerTerm> templates;
    for (const auto& m : monomial_expansion(p, s)) {
        Jet c(0, m.sign * std::exp(m.log_abs_coeff));
        templates.push_back(PowerTerm{m.exponent, m.sign_power, c});
    }
    const double a1 = p.a() + 1.0;
    const double t_scale = std::pow(p.lambda0(), 2.0 * a1) / a1;
    const Parity parity = s.parity() == 0 ? Parity::Even : Parity::Odd;
    return AnalyticFunction(
        [templates, t_scale, a1](double x, int order) {
            const Jet t = signed_abs_power(x, 2.0 * a1, 0, order) * t_scale;
            const Jet envelope = exp(t * -0.5);
            PowerJet r(x, order);
            for (const auto& tm : templates) {
                r.add_term(PowerTerm{tm.exponent, tm.sign_power, envelope * tm.regular.value()});
            }
            return r;
        },
        parity);
}

}  // namespace pdmosc

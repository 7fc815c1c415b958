#pragma once

#include <cstddef>
#include <vector>

namespace pdmosc {

/// H_n(x) by the three-term recurrence. Generic over any ring-like T that supports
/// scalar multiplication and addition of a double (double, Jet).
template <class T>
T hermite_recurrence(unsigned n, const T& x) {
    T prev = x * 0.0 + 1.0;
    if (n == 0) return prev;
    T cur = x * 2.0;
    for (unsigned k = 1; k < n; ++k) {
        T next = x * cur * 2.0 - prev * (2.0 * k);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// L_m^{(alpha)}(x) by the three-term recurrence; no domain check on alpha.
template <class T>
T laguerre_recurrence(unsigned m, double alpha, const T& x) {
    T prev = x * 0.0 + 1.0;
    if (m == 0) return prev;
    T cur = x * -1.0 + (1.0 + alpha);
    for (unsigned k = 1; k < m; ++k) {
        T next = (cur * (2.0 * k + 1.0 + alpha) - x * cur - prev * (k + alpha)) * (1.0 / (k + 1.0));
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

double hermite(unsigned n, double x);

/// Throws DomainError when alpha <= -1.
double laguerre(unsigned m, double alpha, double x);

/// ln Gamma(x) for x > 0 (Stirling series after upward recursion, evaluated in extended precision).
double ln_gamma(double x);

enum class QuadratureKind { GaussHermite, GaussGeneralizedLaguerre };

/// Immutable Gauss rule: nodes ascending, weights positive.
struct QuadratureRule {
    QuadratureKind kind;
    double alpha = 0.0;  // only meaningful for GaussGeneralizedLaguerre
    std::vector<double> nodes;
    std::vector<double> weights;

    std::size_t size() const { return nodes.size(); }

    /// sum_i w_i f(x_i), i.e. the weighted integral of f.
    template <class F>
    double integrate(F&& f) const {
        double acc = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * f(nodes[i]);
        return acc;
    }
};

/// N-point rule for the weight exp(-x^2) on the real line (Golub-Welsch).
QuadratureRule gauss_hermite(int n);

/// N-point rule for the weight x^alpha exp(-x) on (0, inf). Throws DomainError when alpha <= -1.
QuadratureRule gauss_generalized_laguerre(int n, double alpha);

}  // namespace pdmosc

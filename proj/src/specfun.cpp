#include "pdmosc/specfun.hpp"

#include "pdmosc/errors.hpp"
#include "pdmosc/tridiag.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace pdmosc {

double hermite(unsigned n, double x) { return hermite_recurrence(n, x); }

double laguerre(unsigned m, double alpha, double x) {
    if (!(alpha > -1.0)) {
        throw DomainError("laguerre: alpha must exceed -1, got " + std::to_string(alpha));
    }
    return laguerre_recurrence(m, alpha, x);
}

double ln_gamma(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw DomainError("ln_gamma: argument must be positive and finite");
    }
    // Shift up until the asymptotic series converges to well below one ulp,
    // then undo the shift with a single logarithm of the accumulated product.
    long double z = x;
    long double shift_product = 1.0L;
    while (z < 16.0L) {
        shift_product *= z;
        z += 1.0L;
    }
    const long double inv = 1.0L / z;
    const long double inv2 = inv * inv;
    // Bernoulli terms B_{2k} / (2k (2k-1) z^{2k-1}), k = 1..8
    const long double series =
        inv * (1.0L / 12 +
               inv2 * (-1.0L / 360 +
                       inv2 * (1.0L / 1260 +
                               inv2 * (-1.0L / 1680 +
                                       inv2 * (1.0L / 1188 +
                                               inv2 * (-691.0L / 360360 +
                                                       inv2 * (1.0L / 156 + inv2 * (-3617.0L / 122400))))))));
    const long double half_log_two_pi = 0.91893853320467274178032973640561764L;
    const long double result =
        (z - 0.5L) * std::log(z) - z + half_log_two_pi + series - std::log(shift_product);
    return static_cast<double>(result);
}

namespace {

// Golub-Welsch: nodes are eigenvalues of the Jacobi matrix of the monic recurrence
// p_{k+1} = (x - diag_k) p_k - off_k^2 p_{k-1}; weights follow from the Christoffel
// function of the orthonormal family.
QuadratureRule golub_welsch(QuadratureKind kind, double alpha, std::vector<double> diag,
                            std::vector<double> off, double zeroth_moment) {
    const std::size_t n = diag.size();
    QuadratureRule rule{kind, alpha, {}, {}};
    if (n == 1) {
        rule.nodes = {diag[0]};
        rule.weights = {zeroth_moment};
        return rule;
    }
    SymTriMatrix jacobi(diag, off);
    rule.nodes = eigenvalues_lowest(jacobi, n, BisectionTolerance{0.0, 0.0});

    // off[k-1] couples p_{k-1} and p_k; orthonormal recurrence
    // off_{k} p_{k+1} = (x - diag_k) p_k - off_{k-1} p_{k-1}.
    auto evaluate = [&](double x, std::vector<double>* values) {
        double prev = 0.0;
        double cur = 1.0;
        double dprev = 0.0;
        double dcur = 0.0;
        if (values) (*values)[0] = 1.0;
        for (std::size_t k = 0; k < n; ++k) {
            const double b_next = (k + 1 < n) ? off[k] : 1.0;
            const double b_prev = (k > 0) ? off[k - 1] : 0.0;
            const double next = ((x - diag[k]) * cur - b_prev * prev) / b_next;
            const double dnext = (cur + (x - diag[k]) * dcur - b_prev * dprev) / b_next;
            prev = cur;
            cur = next;
            dprev = dcur;
            dcur = dnext;
            if (values && k + 1 < n) (*values)[k + 1] = cur;
        }
        return std::pair{cur, dcur};  // proportional to p_n and its derivative
    };

    std::vector<double> values(n);
    rule.weights.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto [p, dp] = evaluate(rule.nodes[i], nullptr);
        if (dp != 0.0) rule.nodes[i] -= p / dp;
        evaluate(rule.nodes[i], &values);
        double christoffel = 0.0;
        for (double v : values) christoffel += v * v;
        rule.weights[i] = zeroth_moment / christoffel;
    }
    return rule;
}

}  // namespace

QuadratureRule gauss_hermite(int n) {
    if (n < 1) throw DomainError("gauss_hermite: need at least one node");
    std::vector<double> diag(static_cast<std::size_t>(n), 0.0);
    std::vector<double> off(static_cast<std::size_t>(n - 1));
    for (int k = 1; k < n; ++k) off[static_cast<std::size_t>(k - 1)] = std::sqrt(0.5 * k);
    QuadratureRule rule = golub_welsch(QuadratureKind::GaussHermite, 0.0, std::move(diag), std::move(off),
                                       std::sqrt(std::numbers::pi));

    // The weight is even: enforce exact mirror symmetry of the rule.
    const std::size_t m = rule.size();
    for (std::size_t i = 0; i < m / 2; ++i) {
        const std::size_t j = m - 1 - i;
        const double x = 0.5 * (rule.nodes[j] - rule.nodes[i]);
        const double w = 0.5 * (rule.weights[i] + rule.weights[j]);
        rule.nodes[i] = -x;
        rule.nodes[j] = x;
        rule.weights[i] = w;
        rule.weights[j] = w;
    }
    if (m % 2 == 1) rule.nodes[m / 2] = 0.0;
    return rule;
}

QuadratureRule gauss_generalized_laguerre(int n, double alpha) {
    if (n < 1) throw DomainError("gauss_generalized_laguerre: need at least one node");
    if (!(alpha > -1.0)) {
        throw DomainError("gauss_generalized_laguerre: alpha must exceed -1, got " + std::to_string(alpha));
    }
    std::vector<double> diag(static_cast<std::size_t>(n));
    std::vector<double> off(static_cast<std::size_t>(n - 1));
    for (int k = 0; k < n; ++k) diag[static_cast<std::size_t>(k)] = 2.0 * k + alpha + 1.0;
    for (int k = 1; k < n; ++k) off[static_cast<std::size_t>(k - 1)] = std::sqrt(k * (k + alpha));
    return golub_welsch(QuadratureKind::GaussGeneralizedLaguerre, alpha, std::move(diag), std::move(off),
                        std::exp(ln_gamma(alpha + 1.0)));
}

}  // namespace pdmosc

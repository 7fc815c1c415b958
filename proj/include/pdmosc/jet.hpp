#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace pdmosc {

using cplx = std::complex<double>;

/// Default truncation order used by the verification suites.
inline constexpr int kDefaultJetOrder = 4;

/// Truncated Taylor expansion at a real point, stored as value and derivatives
/// f, f', ..., f^(K). Binary operations between jets of different order truncate
/// to the smaller order.
class Jet {
public:
    Jet() : c_(1) {}
    explicit Jet(int order, cplx value = 0.0);

    /// The identity function y -> y expanded at x.
    static Jet variable(double x, int order);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    cplx value() const { return c_[0]; }
    const cplx& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
    cplx& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }

    /// f' as a jet of order K-1. Throws DomainError for an order-0 jet.
    Jet derivative() const;
    Jet truncated(int order) const;

    /// Given the jet of f at x, the jet of y -> f(-y) at -x.
    Jet reflected() const;

    bool is_zero() const;

    Jet& operator+=(const Jet& o);
    Jet& operator-=(const Jet& o);
    Jet& operator*=(cplx s);

    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
    friend Jet operator-(Jet a) { return a *= -1.0; }
    friend Jet operator*(const Jet& a, const Jet& b);
    friend Jet operator/(const Jet& a, const Jet& b);

    friend Jet operator*(Jet a, cplx s) { return a *= s; }
    friend Jet operator*(cplx s, Jet a) { return a *= s; }
    friend Jet operator*(Jet a, double s) { return a *= s; }
    friend Jet operator*(double s, Jet a) { return a *= s; }
    friend Jet operator+(Jet a, cplx s) { a.c_[0] += s; return a; }
    friend Jet operator+(Jet a, double s) { a.c_[0] += s; return a; }
    friend Jet operator-(Jet a, double s) { a.c_[0] -= s; return a; }

private:
    std::vector<cplx> c_;
};

Jet exp(const Jet& u);
Jet log(const Jet& u);
Jet reciprocal(const Jet& u);
/// u^q for a jet whose value is nonzero (principal branch).
Jet pow(const Jet& u, double q);

/// Jet at x != 0 of y -> |y|^q sgn(y)^s, s in {0, 1}. Throws SingularPointError at x = 0.
Jet signed_abs_power(double x, double q, int s, int order);

/// One term |y|^exponent sgn(y)^sign_power g(y) with g smooth at the expansion point.
struct PowerTerm {
    double exponent = 0.0;
    int sign_power = 0;
    Jet regular;
};

/// Local representation of a function near x != 0 as a finite sum of power terms.
/// Keeping singular powers outside the regular jets lets Euler-type operators
/// f' - kappa f / x cancel leading behaviour exactly instead of numerically.
class PowerJet {
public:
    PowerJet(double point, int order) : point_(point), order_(order) {}

    /// A single regular term (exponent 0).
    static PowerJet regular(double point, Jet j);

    double point() const { return point_; }
    int order() const { return order_; }
    const std::vector<PowerTerm>& terms() const { return terms_; }

    /// Adds a term, merging with an existing term of the same exponent and sign power.
    void add_term(PowerTerm term);

    PowerJet& operator+=(const PowerJet& o);
    PowerJet& operator*=(cplx s);
    friend PowerJet operator+(PowerJet a, const PowerJet& b) { return a += b; }
    friend PowerJet operator-(PowerJet a, PowerJet b) { return a += (b *= -1.0); }
    friend PowerJet operator*(cplx s, PowerJet a) { return a *= s; }

    /// Multiply by |y|^q sgn(y)^s.
    PowerJet times_power(double q, int s) const;

    /// Multiply every regular part by a smooth jet.
    PowerJet times_regular(const Jet& j) const;

    /// f'(y) - kappa f(y) / y, one order lower.
    PowerJet euler(double kappa) const;

    PowerJet truncated(int order) const;

    /// Given the representation of f at -x, the representation of y -> f(-y) at x.
    static PowerJet reflection_of(const PowerJet& at_minus_x);

    /// Collapse to an ordinary jet at the point.
    Jet collapse() const;
    cplx value() const;

private:
    double point_;
    int order_;
    std::vector<PowerTerm> terms_;
};

enum class Parity { Even, Odd, Mixed };

Parity flip(Parity p);
/// Parity of a sum.
Parity combine(Parity a, Parity b);
/// +1 for Even, -1 for Odd; Mixed has no eigenvalue (throws DomainError).
double parity_sign(Parity p);

/// A function of one real variable queryable at any x != 0 for its local
/// power-jet representation up to `max_order` derivatives.
class AnalyticFunction {
public:
    using Evaluator = std::function<PowerJet(double x, int order)>;
    static constexpr int kUnbounded = 1 << 20;

    AnalyticFunction() = default;
    AnalyticFunction(Evaluator evaluator, Parity parity, int max_order = kUnbounded);

    /// Wraps an ordinary jet evaluator (smooth functions).
    static AnalyticFunction smooth(std::function<Jet(double x, int order)> evaluator, Parity parity,
                                   int max_order = kUnbounded);

    /// Throws DomainError if order exceeds max_order or is negative.
    PowerJet operator()(double x, int order) const;
    cplx value(double x) const { return (*this)(x, 0).value(); }
    Jet jet(double x, int order) const { return (*this)(x, order).collapse(); }

    Parity parity() const { return parity_; }
    int max_order() const { return max_order_; }

private:
    Evaluator evaluator_;
    Parity parity_ = Parity::Mixed;
    int max_order_ = kUnbounded;
};

AnalyticFunction operator+(const AnalyticFunction& f, const AnalyticFunction& g);
AnalyticFunction operator-(const AnalyticFunction& f, const AnalyticFunction& g);
AnalyticFunction operator*(cplx s, const AnalyticFunction& f);

}  // namespace pdmosc

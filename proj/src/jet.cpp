#include "pdmosc/jet.hpp"

#include "pdmosc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace pdmosc {

namespace {

std::vector<cplx> to_taylor(const Jet& j) {
    std::vector<cplx> t(static_cast<std::size_t>(j.order() + 1));
    double fact = 1.0;
    for (int k = 0; k <= j.order(); ++k) {
        if (k > 0) fact *= k;
        t[static_cast<std::size_t>(k)] = j[k] / fact;
    }
    return t;
}

Jet from_taylor(const std::vector<cplx>& t) {
    Jet j(static_cast<int>(t.size()) - 1);
    double fact = 1.0;
    for (int k = 0; k <= j.order(); ++k) {
        if (k > 0) fact *= k;
        j[k] = t[static_cast<std::size_t>(k)] * fact;
    }
    return j;
}

bool same_exponent(double p, double q) {
    const double scale = std::max({1.0, std::abs(p), std::abs(q)});
    return std::abs(p - q) <= 16.0 * std::numeric_limits<double>::epsilon() * scale;
}

}  // namespace

Jet::Jet(int order, cplx value) {
    if (order < 0) throw DomainError("Jet: negative order");
    c_.assign(static_cast<std::size_t>(order + 1), cplx{});
    c_[0] = value;
}

Jet Jet::variable(double x, int order) {
    Jet j(order, x);
    if (order >= 1) j[1] = 1.0;
    return j;
}

Jet Jet::derivative() const {
    if (order() == 0) throw DomainError("Jet::derivative: order-0 jet has no derivative information");
    Jet d(order() - 1);
    for (int k = 0; k < order(); ++k) d[k] = c_[static_cast<std::size_t>(k + 1)];
    return d;
}

Jet Jet::truncated(int order) const {
    if (order > this->order()) {
        throw DomainError("Jet::truncated: requested order " + std::to_string(order) + " exceeds available " +
                          std::to_string(this->order()));
    }
    Jet t(order);
    for (int k = 0; k <= order; ++k) t[k] = c_[static_cast<std::size_t>(k)];
    return t;
}

Jet Jet::reflected() const {
    Jet r = *this;
    for (int k = 1; k <= order(); k += 2) r[k] = -r[k];
    return r;
}

bool Jet::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](cplx v) { return v == cplx{}; });
}

Jet& Jet::operator+=(const Jet& o) {
    if (o.order() < order()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
}

Jet& Jet::operator-=(const Jet& o) {
    if (o.order() < order()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
}

Jet& Jet::operator*=(cplx s) {
    for (auto& v : c_) v *= s;
    return *this;
}

Jet operator*(const Jet& a, const Jet& b) {
    const int order = std::min(a.order(), b.order());
    Jet r(order);
    for (int k = 0; k <= order; ++k) {
        double binom = 1.0;
        cplx acc{};
        for (int j = 0; j <= k; ++j) {
            acc += binom * a[j] * b[k - j];
            binom = binom * (k - j) / (j + 1);
        }
        r[k] = acc;
    }
    return r;
}

Jet operator/(const Jet& a, const Jet& b) { return a * reciprocal(b); }

Jet exp(const Jet& u) {
    const auto ut = to_taylor(u);
    std::vector<cplx> e(ut.size());
    e[0] = std::exp(ut[0]);
    for (std::size_t k = 1; k < ut.size(); ++k) {
        cplx acc{};
        for (std::size_t j = 1; j <= k; ++j) acc += static_cast<double>(j) * ut[j] * e[k - j];
        e[k] = acc / static_cast<double>(k);
    }
    return from_taylor(e);
}

Jet log(const Jet& u) {
    if (u.value() == cplx{}) throw SingularPointError("log(Jet): zero value");
    const auto ut = to_taylor(u);
    std::vector<cplx> l(ut.size());
    l[0] = std::log(ut[0]);
    for (std::size_t k = 1; k < ut.size(); ++k) {
        cplx acc{};
        for (std::size_t j = 1; j < k; ++j) acc += static_cast<double>(j) * l[j] * ut[k - j];
        l[k] = (ut[k] - acc / static_cast<double>(k)) / ut[0];
    }
    return from_taylor(l);
}

Jet reciprocal(const Jet& u) {
    if (u.value() == cplx{}) throw SingularPointError("reciprocal(Jet): zero value");
    const auto ut = to_taylor(u);
    std::vector<cplx> v(ut.size());
    v[0] = 1.0 / ut[0];
    for (std::size_t k = 1; k < ut.size(); ++k) {
        cplx acc{};
        for (std::size_t j = 1; j <= k; ++j) acc += ut[j] * v[k - j];
        v[k] = -acc / ut[0];
    }
    return from_taylor(v);
}

Jet pow(const Jet& u, double q) {
    if (u.value() == cplx{}) throw SingularPointError("pow(Jet): zero value");
    const auto ut = to_taylor(u);
    std::vector<cplx> p(ut.size());
    p[0] = std::pow(ut[0], q);
    for (std::size_t k = 1; k < ut.size(); ++k) {
        cplx acc{};
        for (std::size_t j = 1; j <= k; ++j) {
            acc += (q * static_cast<double>(j) - static_cast<double>(k - j)) * ut[j] * p[k - j];
        }
        p[k] = acc / (static_cast<double>(k) * ut[0]);
    }
    return from_taylor(p);
}

Jet signed_abs_power(double x, double q, int s, int order) {
    if (x == 0.0) throw SingularPointError("signed_abs_power: expansion point is the origin");
    Jet j(order);
    double d = std::pow(std::abs(x), q);
    if ((s & 1) && x < 0.0) d = -d;
    j[0] = d;
    for (int k = 1; k <= order; ++k) {
        d *= (q - (k - 1)) / x;
        j[k] = d;
    }
    return j;
}

PowerJet PowerJet::regular(double point, Jet j) {
    PowerJet p(point, j.order());
    p.add_term(PowerTerm{0.0, 0, std::move(j)});
    return p;
}

void PowerJet::add_term(PowerTerm term) {
    if (term.regular.order() > order_) term.regular = term.regular.truncated(order_);
    if (term.regular.order() < order_) {
        throw DomainError("PowerJet::add_term: term order below the jet order");
    }
    term.sign_power &= 1;
    if (term.regular.is_zero()) return;
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
        if (it->sign_power == term.sign_power && same_exponent(it->exponent, term.exponent)) {
            it->regular += term.regular;
            if (it->regular.is_zero()) terms_.erase(it);
            return;
        }
    }
    terms_.push_back(std::move(term));
}

PowerJet& PowerJet::operator+=(const PowerJet& o) {
    if (o.order_ < order_) *this = truncated(o.order_);
    for (const auto& t : o.terms_) add_term(t);
    return *this;
}

PowerJet& PowerJet::operator*=(cplx s) {
    for (auto& t : terms_) t.regular *= s;
    return *this;
}

PowerJet PowerJet::times_power(double q, int s) const {
    PowerJet r(point_, order_);
    for (const auto& t : terms_) r.add_term(PowerTerm{t.exponent + q, t.sign_power + s, t.regular});
    return r;
}

PowerJet PowerJet::times_regular(const Jet& j) const {
    PowerJet r(point_, std::min(order_, j.order()));
    for (const auto& t : terms_) r.add_term(PowerTerm{t.exponent, t.sign_power, t.regular * j});
    return r;
}

PowerJet PowerJet::euler(double kappa) const {
    if (order_ == 0) throw DomainError("PowerJet::euler: no derivative information at order 0");
    // d/dy [|y|^q sgn^s g] - kappa |y|^q sgn^s g / y = |y|^(q-1) sgn^(s+1) [y g' + (q - kappa) g]
    PowerJet r(point_, order_ - 1);
    const Jet y = Jet::variable(point_, order_ - 1);
    for (const auto& t : terms_) {
        const double c = same_exponent(t.exponent, kappa) ? 0.0 : t.exponent - kappa;
        Jet g = y * t.regular.derivative();
        if (c != 0.0) g += t.regular.truncated(order_ - 1) * c;
        r.add_term(PowerTerm{t.exponent - 1.0, t.sign_power + 1, std::move(g)});
    }
    return r;
}

PowerJet PowerJet::truncated(int order) const {
    PowerJet r(point_, order);
    for (const auto& t : terms_) r.add_term(PowerTerm{t.exponent, t.sign_power, t.regular.truncated(order)});
    return r;
}

PowerJet PowerJet::reflection_of(const PowerJet& at_minus_x) {
    PowerJet r(-at_minus_x.point_, at_minus_x.order_);
    for (const auto& t : at_minus_x.terms_) {
        Jet g = t.regular.reflected();
        if (t.sign_power & 1) g *= -1.0;
        r.add_term(PowerTerm{t.exponent, t.sign_power, std::move(g)});
    }
    return r;
}

Jet PowerJet::collapse() const {
    Jet r(order_);
    for (const auto& t : terms_) r += signed_abs_power(point_, t.exponent, t.sign_power, order_) * t.regular;
    return r;
}

cplx PowerJet::value() const {
    if (point_ == 0.0) throw SingularPointError("PowerJet::value: representation is not valid at the origin");
    cplx acc{};
    for (const auto& t : terms_) {
        double w = std::pow(std::abs(point_), t.exponent);
        if ((t.sign_power & 1) && point_ < 0.0) w = -w;
        acc += w * t.regular.value();
    }
    return acc;
}

Parity flip(Parity p) {
    switch (p) {
        case Parity::Even: return Parity::Odd;
        case Parity::Odd: return Parity::Even;
        case Parity::Mixed: break;
    }
    return Parity::Mixed;
}

Parity combine(Parity a, Parity b) { return a == b ? a : Parity::Mixed; }

double parity_sign(Parity p) {
    if (p == Parity::Mixed) throw DomainError("parity_sign: mixed parity has no reflection eigenvalue");
    return p == Parity::Even ? 1.0 : -1.0;
}

AnalyticFunction::AnalyticFunction(Evaluator evaluator, Parity parity, int max_order)
    : evaluator_(std::move(evaluator)), parity_(parity), max_order_(max_order) {}

AnalyticFunction AnalyticFunction::smooth(std::function<Jet(double, int)> evaluator, Parity parity,
                                          int max_order) {
    return AnalyticFunction(
        [ev = std::move(evaluator)](double x, int order) { return PowerJet::regular(x, ev(x, order)); }, parity,
        max_order);
}

PowerJet AnalyticFunction::operator()(double x, int order) const {
    if (order < 0 || order > max_order_) {
        throw DomainError("AnalyticFunction: requested order " + std::to_string(order) +
                          " outside the queryable range 0.." + std::to_string(max_order_));
    }
    if (x == 0.0) throw SingularPointError("AnalyticFunction: evaluation at the origin");
    if (!evaluator_) throw DomainError("AnalyticFunction: empty evaluator");
    PowerJet r = evaluator_(x, order);
    if (r.order() != order) r = r.truncated(order);
    return r;
}

AnalyticFunction operator+(const AnalyticFunction& f, const AnalyticFunction& g) {
    return AnalyticFunction([f, g](double x, int k) { return f(x, k) + g(x, k); }, combine(f.parity(), g.parity()),
                            std::min(f.max_order(), g.max_order()));
}

AnalyticFunction operator-(const AnalyticFunction& f, const AnalyticFunction& g) {
    return AnalyticFunction([f, g](double x, int k) { return f(x, k) - g(x, k); }, combine(f.parity(), g.parity()),
                            std::min(f.max_order(), g.max_order()));
}

AnalyticFunction operator*(cplx s, const AnalyticFunction& f) {
    return AnalyticFunction([f, s](double x, int k) { return s * f(x, k); }, f.parity(), f.max_order());
}

}  // namespace pdmosc

#include "pdmosc/tridiag.hpp"

#include "pdmosc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace pdmosc {

SymTriMatrix::SymTriMatrix(std::vector<double> diag, std::vector<double> offdiag)
    : diag_(std::move(diag)), offdiag_(std::move(offdiag)) {
    if (diag_.empty()) {
        throw DomainError("SymTriMatrix: empty diagonal");
    }
    if (offdiag_.size() + 1 != diag_.size()) {
        throw DomainError("SymTriMatrix: off-diagonal must have exactly size() - 1 entries");
    }
}

std::pair<double, double> SymTriMatrix::gershgorin_bounds() const {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    const std::size_t n = diag_.size();
    for (std::size_t i = 0; i < n; ++i) {
        double radius = 0.0;
        if (i > 0) radius += std::abs(offdiag_[i - 1]);
        if (i + 1 < n) radius += std::abs(offdiag_[i]);
        lo = std::min(lo, diag_[i] - radius);
        hi = std::max(hi, diag_[i] + radius);
    }
    return {lo, hi};
}

SymTriMatrix SymTriMatrix::reversed() const {
    std::vector<double> d(diag_.rbegin(), diag_.rend());
    std::vector<double> e(offdiag_.rbegin(), offdiag_.rend());
    return SymTriMatrix(std::move(d), std::move(e));
}

std::size_t sturm_count(const SymTriMatrix& matrix, double shift) {
    const auto d = matrix.diag();
    const auto e = matrix.offdiag();

    // Pivots that land exactly on zero are nudged below it, as in LAPACK's dstebz.
    double scale = std::numeric_limits<double>::min();
    for (double v : e) scale = std::max(scale, v * v);
    const double pivmin = std::numeric_limits<double>::min() * std::max(1.0, scale);

    std::size_t count = 0;
    double q = d[0] - shift;
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++count;
    for (std::size_t i = 1; i < d.size(); ++i) {
        q = (d[i] - shift) - (e[i - 1] * e[i - 1]) / q;
        if (std::abs(q) < pivmin) q = -pivmin;
        if (q < 0.0) ++count;
    }
    return count;
}

std::vector<double> eigenvalues_lowest(const SymTriMatrix& matrix, std::size_t k, BisectionTolerance tol) {
    if (k > matrix.size()) {
        throw DomainError("eigenvalues_lowest: k exceeds matrix dimension");
    }
    auto [glo, ghi] = matrix.gershgorin_bounds();
    const double pad = 2.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(glo), std::abs(ghi)) +
                       std::numeric_limits<double>::min();
    glo -= pad;
    ghi += pad;

    std::vector<double> out(k);
    double floor = glo;
    for (std::size_t j = 0; j < k; ++j) {
        // Invariant: count(lo) <= j < count(hi).
        double lo = floor;
        double hi = ghi;
        for (;;) {
            const double width = hi - lo;
            const double target = std::max(tol.absolute, tol.relative * std::max(std::abs(lo), std::abs(hi)));
            const double mid = lo + 0.5 * width;
            if (width <= target || mid <= lo || mid >= hi) break;
            if (sturm_count(matrix, mid) > j) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        out[j] = lo + 0.5 * (hi - lo);
        floor = lo;
    }
    return out;
}

}  // namespace pdmosc

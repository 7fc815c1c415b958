#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace pdmosc {

/// Real symmetric tridiagonal matrix stored as its diagonal and first off-diagonal.
/// Symmetry is structural: there is only one off-diagonal to store.
class SymTriMatrix {
public:
    SymTriMatrix() = default;
    SymTriMatrix(std::vector<double> diag, std::vector<double> offdiag);

    std::size_t size() const { return diag_.size(); }
    std::span<const double> diag() const { return diag_; }
    std::span<const double> offdiag() const { return offdiag_; }

    /// Gershgorin interval containing every eigenvalue.
    std::pair<double, double> gershgorin_bounds() const;

    /// The same operator with the basis order reversed (x -> -x relabeling on a symmetric grid).
    SymTriMatrix reversed() const;

private:
    std::vector<double> diag_;
    std::vector<double> offdiag_;
};

/// Number of eigenvalues strictly below `shift`, from the sign pattern of the
/// LDL^T pivots of (T - shift I).
std::size_t sturm_count(const SymTriMatrix& matrix, double shift);

struct BisectionTolerance {
    double absolute = 1e-12;
    double relative = 1e-12;
};

/// The k smallest eigenvalues in ascending order, each bracketed by Sturm bisection
/// until the bracket is below max(absolute, relative * |lambda|). Zero tolerances
/// bisect down to adjacent floating-point numbers.
std::vector<double> eigenvalues_lowest(const SymTriMatrix& matrix, std::size_t k,
                                       BisectionTolerance tol = {});

}  // namespace pdmosc

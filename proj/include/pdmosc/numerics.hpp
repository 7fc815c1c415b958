#pragma once

#include "pdmosc/model.hpp"
#include "pdmosc/tridiag.hpp"

#include <vector>

namespace pdmosc {

/// Cell-centred grid on [-L, L] (symmetric) or [0, L] (half line). Nodes sit at
/// x = L sgn(u) |u|^grading for u at the midpoints of a uniform partition, faces at
/// the partition points. grading = 1 is the uniform midpoint grid; no node is ever 0.
class GridSpec {
public:
    /// Throws DomainError unless L > 0, N >= 16, N even, grading > 0.
    static GridSpec symmetric(double L, int N, double grading = 1.0);
    /// Throws DomainError unless L > 0, N >= 16, grading > 0.
    static GridSpec half_line(double L, int N, double grading = 1.0);

    double L() const { return L_; }
    int N() const { return N_; }
    double grading() const { return grading_; }
    bool is_half_line() const { return half_line_; }

    const std::vector<double>& nodes() const { return nodes_; }
    /// N + 1 faces; faces[i] and faces[i + 1] bound the cell of node i.
    const std::vector<double>& faces() const { return faces_; }

private:
    GridSpec(double L, int N, double grading, bool half_line);

    double L_;
    int N_;
    double grading_;
    bool half_line_;
    std::vector<double> nodes_;
    std::vector<double> faces_;
};

/// Full line for the canonical family; half line with R -> +1 / -1 for the parabose sectors.
enum class Sector { Full, ParaboseEven, ParaboseOdd };

enum class OuterBoundary { Dirichlet, Neumann };

struct DiscreteHamiltonian {
    /// Symmetric standard-form matrix D^-1/2 K D^-1/2.
    SymTriMatrix matrix;
    /// Diagonal metric D (cell weights).
    std::vector<double> metric;
};

/// Finite-volume discretization of the quadratic form of the ordered kinetic term
/// plus potential. Full sectors need a symmetric grid, parabose sectors a half-line grid.
DiscreteHamiltonian assemble_hamiltonian(const OscillatorParams& p, const GridSpec& grid, Sector sector,
                                         OuterBoundary outer = OuterBoundary::Dirichlet);

struct SpectrumEstimate {
    std::vector<double> values;
    std::vector<double> errors;
    /// Observed ratio of successive refinement differences per level (4 for clean h^2 convergence).
    std::vector<double> ratios;
    /// False where the ratio test failed and the finest raw value is reported.
    std::vector<bool> extrapolated;
    double L = 0.0;
    int N = 0;  // finest grid used
};

/// Lowest k levels of the sector by grid refinement with Richardson extrapolation.
/// target_tol is relative. Throws DomainError if target_tol < 1e-8, ConvergenceError
/// (carrying the best estimate) if N would exceed 2^16.
SpectrumEstimate converge_spectrum(const OscillatorParams& p, Sector sector, int k, double target_tol);

}  // namespace pdmosc

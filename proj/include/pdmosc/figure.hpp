#pragma once

#include "pdmosc/model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pdmosc {

struct PanelSpec {
    char letter;
    double a;
    double gamma;
};

/// Nine panels: rows gamma = 0.5, 1.0, 1.5; columns a = -0.6, 0, 2; letters a..i row-major.
std::vector<PanelSpec> figure1_panel_specs();

struct FigureOptions {
    double m0 = 1.0;
    double omega = 1.0;
    double hbar = 1.0;
    /// Ceiling above the ground state in units of (a+1) hbar omega.
    double ceiling_spacings = 8.0;
    /// Absolute ceiling override.
    std::optional<double> ceiling;
    /// Potential samples across [-x_extent, x_extent].
    int samples = 401;
    /// Horizontal padding of the highest level's allowed region.
    double padding = 1.15;
    /// Absolute half-width override.
    std::optional<double> x_extent;
};

struct LevelSegment {
    unsigned n;
    double energy;
    double x_left;
    double x_right;
};

struct PotentialSample {
    double x;
    double v;
};

struct Panel {
    PanelSpec spec;
    double ceiling;
    double x_extent;
    std::vector<LevelSegment> levels;
    std::vector<PotentialSample> potential;
};

/// gamma = 1/2 uses the canonical spectrum; otherwise the parabose sector forms.
double panel_level_energy(const OscillatorParams& p, unsigned n);

/// Smallest x >= 0 with V(x) = e, by bisection to 1e-10 (V is increasing on x > 0).
double turning_point(const OscillatorParams& p, double e);

Panel build_panel(const PanelSpec& spec, const FigureOptions& options = {});

/// panel_<letter>_a<a>_gamma<gamma>.<ext>
std::string panel_filename(const PanelSpec& spec, const std::string& ext);

/// kind,index,x_left,x_right,value rows (potential samples then levels).
std::string panel_csv(const Panel& panel);
std::string panel_json(const Panel& panel);
/// Standalone SVG 1.1 document.
std::string panel_svg(const Panel& panel);

}  // namespace pdmosc

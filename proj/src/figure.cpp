#include "pdmosc/figure.hpp"

#include "pdmosc/errors.hpp"
#include "pdmosc/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace pdmosc {

std::vector<PanelSpec> figure1_panel_specs() {
    std::vector<PanelSpec> specs;
    char letter = 'a';
    for (double gamma : {0.5, 1.0, 1.5}) {
        for (double a : {-0.6, 0.0, 2.0}) specs.push_back({letter++, a, gamma});
    }
    return specs;
}

double panel_level_energy(const OscillatorParams& p, unsigned n) {
    if (p.gamma() == 0.5) return energy(p, StateIndex::canonical(n));
    return (n % 2 == 0) ? energy_even_sector(p, n / 2) : energy_odd_sector(p, n / 2);
}

double turning_point(const OscillatorParams& p, double e) {
    if (!(e >= 0.0)) throw DomainError("turning_point: energy must be non-negative");
    double lo = 0.0;
    double hi = 1.0 / p.lambda0();
    while (potential(p, hi) < e) hi *= 2.0;
    while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (potential(p, mid) < e ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

Panel build_panel(const PanelSpec& spec, const FigureOptions& opt) {
    if (opt.samples < 2) throw DomainError("build_panel: need at least two potential samples");
    const auto p = OscillatorParams::create(spec.a, spec.gamma, opt.m0, opt.omega, opt.hbar);
    Panel panel{spec, 0.0, 0.0, {}, {}};
    const double e0 = panel_level_energy(p, 0);
    panel.ceiling = opt.ceiling.value_or(e0 + opt.ceiling_spacings * (p.a() + 1.0) * p.hbar() * p.omega());
    const double slack = 1e-12 * std::abs(panel.ceiling);
    for (unsigned n = 0;; ++n) {
        const double e = panel_level_energy(p, n);
        if (e > panel.ceiling + slack) break;
        const double xt = turning_point(p, e);
        panel.levels.push_back({n, e, -xt, xt});
    }
    const double top = panel.levels.empty() ? panel.ceiling : panel.levels.back().energy;
    panel.x_extent = opt.x_extent ? *opt.x_extent : opt.padding * turning_point(p, top);
    const int s = opt.samples;
    for (int i = 0; i < s; ++i) {
        const double x = panel.x_extent * (2.0 * i - (s - 1)) / (s - 1);
        panel.potential.push_back({x, potential(p, x)});
    }
    return panel;
}

std::string panel_filename(const PanelSpec& spec, const std::string& ext) {
    return std::string("panel_") + spec.letter + "_a" + format_number(spec.a, 6) + "_gamma" + format_number(spec.gamma, 6) +
           "." + ext;
}

std::string panel_csv(const Panel& panel) {
    std::ostringstream os;
    os << "kind,index,x_left [length],x_right [length],value [energy]\n";
    for (std::size_t i = 0; i < panel.potential.size(); ++i) {
        const auto& s = panel.potential[i];
        os << "potential," << i << ',' << format_number(s.x) << ',' << format_number(s.x) << ','
           << format_number(s.v) << '\n';
    }
    for (const auto& l : panel.levels) {
        os << "level," << l.n << ',' << format_number(l.x_left) << ',' << format_number(l.x_right) << ','
           << format_number(l.energy) << '\n';
    }
    return os.str();
}

std::string panel_json(const Panel& panel) {
    nlohmann::json levels = nlohmann::json::array();
    for (const auto& l : panel.levels) {
        levels.push_back({{"n", l.n}, {"energy", l.energy}, {"x_left", l.x_left}, {"x_right", l.x_right}});
    }
    nlohmann::json pot = nlohmann::json::array();
    for (const auto& s : panel.potential) pot.push_back({{"x", s.x}, {"v", s.v}});
    nlohmann::json doc{{"panel", std::string(1, panel.spec.letter)},
                       {"a", panel.spec.a},
                       {"gamma", panel.spec.gamma},
                       {"ceiling", panel.ceiling},
                       {"x_extent", panel.x_extent},
                       {"levels", std::move(levels)},
                       {"potential", std::move(pot)}};
    return doc.dump(2) + "\n";
}

std::string panel_svg(const Panel& panel) {
    const double width = 480.0;
    const double height = 360.0;
    const double margin = 40.0;
    const double y_top = panel.ceiling * 1.05;
    auto sx = [&](double x) { return margin + (x + panel.x_extent) / (2.0 * panel.x_extent) * (width - 2 * margin); };
    auto sy = [&](double v) { return height - margin - std::min(v, y_top) / y_top * (height - 2 * margin); };
    auto num = [](double v) { return format_number(v, 8); };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width) << "\" height=\""
       << num(height) << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n"
       << "<rect x=\"0\" y=\"0\" width=\"" << num(width) << "\" height=\"" << num(height)
       << "\" fill=\"white\"/>\n";
    os << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < panel.potential.size(); ++i) {
        const auto& s = panel.potential[i];
        if (i) os << ' ';
        os << num(sx(s.x)) << ',' << num(sy(s.v));
    }
    os << "\"/>\n";
    for (const auto& l : panel.levels) {
        os << "<line x1=\"" << num(sx(l.x_left)) << "\" y1=\"" << num(sy(l.energy)) << "\" x2=\""
           << num(sx(l.x_right)) << "\" y2=\"" << num(sy(l.energy)) << "\" stroke=\"steelblue\" stroke-width=\"1\"/>\n";
    }
    os << "<text x=\"" << num(margin) << "\" y=\"" << num(margin * 0.6) << "\" font-family=\"sans-serif\" font-size=\"13\">("
       << panel.spec.letter << ") a = " << format_number(panel.spec.a) << ", gamma = " << format_number(panel.spec.gamma)
       << "</text>\n"
       << "</svg>\n";
    return os.str();
}

}  // namespace pdmosc

#include "pdmosc/cli.hpp"

#include "pdmosc/errors.hpp"
#include "pdmosc/figure.hpp"
#include "pdmosc/numerics.hpp"
#include "pdmosc/report.hpp"
#include "pdmosc/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

namespace pdmosc {

namespace {

struct RunConfig {
    std::string command;
    double a = 0.0;
    double gamma = 0.5;
    double m0 = 1.0;
    double omega = 1.0;
    double hbar = 1.0;
    std::string family = "auto";
    int levels = 5;
    unsigned n = 0;
    double xmin = -5.0;
    double xmax = 5.0;
    int samples = 201;
    bool oracle = false;
    std::string suite = "all";
    std::optional<double> tol;
    std::string format = "csv";
    std::string out;
    std::uint64_t seed = 0;
    double ceiling = 8.0;
    std::optional<double> extent;
};

// Invalid flag combinations and unwritable outputs; mapped to exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Family resolve_family(const RunConfig& c) {
    if (c.family == "canonical") return Family::CanonicalDeformed;
    if (c.family == "parabose") return Family::Parabose;
    return c.gamma == 0.5 ? Family::CanonicalDeformed : Family::Parabose;
}

std::string family_name(Family f) { return f == Family::CanonicalDeformed ? "canonical" : "parabose"; }

nlohmann::json params_json(const OscillatorParams& p) {
    return {{"a", p.a()}, {"gamma", p.gamma()}, {"m0", p.m0()}, {"omega", p.omega()}, {"hbar", p.hbar()}};
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"') q += '"';
        q += ch;
    }
    return q + "\"";
}

std::string csv_row(const std::vector<std::string>& fields) {
    std::string row;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) row += ',';
        row += csv_field(fields[i]);
    }
    return row + "\n";
}

void emit(const RunConfig& c, const std::string& text, std::ostream& out) {
    if (c.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw ConfigError("cannot open output file '" + c.out + "' for writing");
    f << text;
    if (!f) throw ConfigError("failed writing output file '" + c.out + "'");
}

void require_tabular_format(const RunConfig& c) {
    if (c.format != "csv" && c.format != "json") {
        throw ConfigError("--format " + c.format + " is only available for figure1 (use csv or json)");
    }
}

std::vector<double> sample_grid(const RunConfig& c) {
    if (c.samples < 2) throw ConfigError("--samples must be at least 2");
    if (!(c.xmax > c.xmin)) throw ConfigError("--xmax must exceed --xmin");
    std::vector<double> xs(static_cast<std::size_t>(c.samples));
    for (int i = 0; i < c.samples; ++i) {
        xs[static_cast<std::size_t>(i)] = (i == c.samples - 1) ? c.xmax : c.xmin + (c.xmax - c.xmin) * i / (c.samples - 1);
    }
    return xs;
}

int cmd_spectrum(const RunConfig& c, std::ostream& out) {
    require_tabular_format(c);
    if (c.levels < 1) throw ConfigError("--levels must be at least 1");
    const auto p = OscillatorParams::create(c.a, c.gamma, c.m0, c.omega, c.hbar);
    const Family fam = resolve_family(c);
    std::vector<double> exact;
    for (int i = 0; i < c.levels; ++i) exact.push_back(energy(p, StateIndex{fam, static_cast<unsigned>(i)}));

    std::vector<double> oracle_v;
    std::vector<double> oracle_e;
    if (c.oracle) {
        const double tol = c.tol.value_or(fam == Family::CanonicalDeformed ? kCanonicalOracleFloor : kParaboseOracleFloor);
        if (fam == Family::CanonicalDeformed) {
            const auto est = converge_spectrum(p, Sector::Full, c.levels, tol);
            oracle_v = est.values;
            oracle_e = est.errors;
        } else {
            const int k_even = (c.levels + 1) / 2;
            const int k_odd = c.levels / 2;
            const auto ev = converge_spectrum(p, Sector::ParaboseEven, k_even, tol);
            std::optional<SpectrumEstimate> od;
            if (k_odd > 0) od = converge_spectrum(p, Sector::ParaboseOdd, k_odd, tol);
            for (int i = 0; i < c.levels; ++i) {
                const auto m = static_cast<std::size_t>(i / 2);
                oracle_v.push_back(i % 2 == 0 ? ev.values[m] : od->values[m]);
                oracle_e.push_back(i % 2 == 0 ? ev.errors[m] : od->errors[m]);
            }
        }
    }

    if (c.format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (int i = 0; i < c.levels; ++i) {
            const auto u = static_cast<std::size_t>(i);
            nlohmann::json r{{"n", i}, {"energy", exact[u]}};
            if (c.oracle) {
                r["oracle"] = oracle_v[u];
                r["oracle_error"] = oracle_e[u];
                r["relative_deviation"] = std::abs(oracle_v[u] - exact[u]) / exact[u];
            }
            rows.push_back(std::move(r));
        }
        nlohmann::json doc{{"command", "spectrum"}, {"family", family_name(fam)}, {"params", params_json(p)},
                           {"rows", std::move(rows)}};
        emit(c, doc.dump(2) + "\n", out);
        return 0;
    }
    std::string text;
    if (c.oracle) {
        text = csv_row({"n", "energy [input units]", "oracle [input units]", "oracle_error [input units]",
                        "relative_deviation [1]"});
    } else {
        text = csv_row({"n", "energy [input units]"});
    }
    for (int i = 0; i < c.levels; ++i) {
        const auto u = static_cast<std::size_t>(i);
        if (c.oracle) {
            text += csv_row({std::to_string(i), format_number(exact[u]), format_number(oracle_v[u]),
                             format_number(oracle_e[u]), format_number(std::abs(oracle_v[u] - exact[u]) / exact[u])});
        } else {
            text += csv_row({std::to_string(i), format_number(exact[u])});
        }
    }
    emit(c, text, out);
    return 0;
}

int cmd_wavefunction(const RunConfig& c, std::ostream& out, std::ostream& err) {
    require_tabular_format(c);
    const auto p = OscillatorParams::create(c.a, c.gamma, c.m0, c.omega, c.hbar);
    const Family fam = resolve_family(c);
    const StateIndex s{fam, c.n};
    auto xs = sample_grid(c);
    const double step = (c.xmax - c.xmin) / (c.samples - 1);
    if (leading_exponent(p, s) < 0.0) {
        for (auto& x : xs) {
            if (x == 0.0) {
                x = 0.5 * step;
                err << "warning: state diverges at the origin; sample x=0 moved to x=" << format_number(x) << "\n";
            }
        }
    }
    std::vector<std::array<double, 3>> rows;
    for (double x : xs) rows.push_back({x, wavefunction(p, s, x), wavefunction(p, s, -x)});

    if (c.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : rows) arr.push_back({{"x", r[0]}, {"psi", r[1]}, {"psi_reflected", r[2]}});
        nlohmann::json doc{{"command", "wavefunction"}, {"family", family_name(fam)}, {"n", c.n},
                           {"params", params_json(p)}, {"rows", std::move(arr)}};
        emit(c, doc.dump(2) + "\n", out);
        return 0;
    }
    std::string text = csv_row({"x [length]", "psi(x) [length^-1/2]", "psi(-x) [length^-1/2]"});
    for (const auto& r : rows) text += csv_row({format_number(r[0]), format_number(r[1]), format_number(r[2])});
    emit(c, text, out);
    return 0;
}

int cmd_potential(const RunConfig& c, std::ostream& out) {
    require_tabular_format(c);
    const auto p = OscillatorParams::create(c.a, c.gamma, c.m0, c.omega, c.hbar);
    const auto xs = sample_grid(c);
    if (c.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (double x : xs) arr.push_back({{"x", x}, {"v", potential(p, x)}});
        nlohmann::json doc{{"command", "potential"}, {"params", params_json(p)}, {"rows", std::move(arr)}};
        emit(c, doc.dump(2) + "\n", out);
        return 0;
    }
    std::string text = csv_row({"x [length]", "V(x) [energy]"});
    for (double x : xs) text += csv_row({format_number(x), format_number(potential(p, x))});
    emit(c, text, out);
    return 0;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot open '" + path.string() + "' for writing");
    f << text;
    if (!f) throw ConfigError("failed writing '" + path.string() + "'");
}

int cmd_figure1(const RunConfig& c, std::ostream& out) {
    if (c.format != "csv" && c.format != "json" && c.format != "svg") throw ConfigError("unknown --format " + c.format);
    if (!(c.ceiling > 0.0)) throw ConfigError("--ceiling must be positive");
    const std::filesystem::path dir = c.out.empty() ? std::filesystem::path(".") : std::filesystem::path(c.out);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (!std::filesystem::is_directory(dir)) throw ConfigError("output directory '" + dir.string() + "' is not usable");

    FigureOptions opt;
    opt.m0 = c.m0;
    opt.omega = c.omega;
    opt.hbar = c.hbar;
    opt.ceiling_spacings = c.ceiling;
    if (c.extent) {
        if (!(*c.extent > 0.0)) throw ConfigError("--xmax must be positive");
        opt.x_extent = c.extent;
    }
    if (c.samples < 2) throw ConfigError("--samples must be at least 2");
    opt.samples = c.samples;
    for (const auto& spec : figure1_panel_specs()) {
        const Panel panel = build_panel(spec, opt);
        const std::string ext = c.format == "json" ? "json" : "csv";
        const auto path = dir / panel_filename(spec, ext);
        write_file(path, ext == "json" ? panel_json(panel) : panel_csv(panel));
        out << path.string() << "\n";
        if (c.format == "svg") {
            const auto svg = dir / panel_filename(spec, "svg");
            write_file(svg, panel_svg(panel));
            out << svg.string() << "\n";
        }
    }
    return 0;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
    if (c.format != "json") throw ConfigError("verify reports are JSON only (--format json)");
    const auto p = OscillatorParams::create(c.a, c.gamma, c.m0, c.omega, c.hbar);
    SuiteSelection sel;
    sel.name = c.suite;
    sel.tol = c.tol;
    sel.seed = c.seed;
    const auto reports = run_suites(p, resolve_family(c), sel);
    emit(c, reports_to_json(reports), out);
    const bool pass = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.overall_pass(); });
    return pass ? 0 : 1;
}

void add_common(CLI::App* sub, RunConfig& c) {
    sub->add_option("--a", c.a, "deformation parameter, a > -1")->capture_default_str();
    sub->add_option("--gamma", c.gamma, "parabose parameter, gamma >= 1/2")->capture_default_str();
    sub->add_option("--m0", c.m0, "mass scale m0 > 0")->capture_default_str();
    sub->add_option("--omega", c.omega, "angular frequency > 0")->capture_default_str();
    sub->add_option("--hbar", c.hbar, "reduced Planck constant > 0")->capture_default_str();
    sub->add_option("--family", c.family, "canonical | parabose | auto (parabose unless gamma = 1/2)")
        ->check(CLI::IsMember({"auto", "canonical", "parabose"}))
        ->capture_default_str();
    sub->add_option("--out", c.out, "output file (figure1: output directory)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig c;
    CLI::App app{"Exactly solvable position-dependent-mass oscillators", "pdmosc"};
    app.require_subcommand(1);

    auto* spectrum = app.add_subcommand("spectrum", "closed-form energy levels, optionally against the grid oracle");
    add_common(spectrum, c);
    spectrum->add_option("--levels", c.levels, "number of levels")->capture_default_str();
    spectrum->add_flag("--oracle", c.oracle, "add grid-oracle values and deviations");
    spectrum->add_option("--tol", c.tol, "oracle relative tolerance");
    spectrum->add_option("--format", c.format, "csv | json")->capture_default_str();

    auto* wave = app.add_subcommand("wavefunction", "sampled eigenfunction psi_n(x)");
    add_common(wave, c);
    wave->add_option("--n", c.n, "global quantum number")->capture_default_str();
    wave->add_option("--xmin", c.xmin)->capture_default_str();
    wave->add_option("--xmax", c.xmax)->capture_default_str();
    wave->add_option("--samples", c.samples)->capture_default_str();
    wave->add_option("--format", c.format, "csv | json")->capture_default_str();

    auto* pot = app.add_subcommand("potential", "sampled potential V(x)");
    add_common(pot, c);
    pot->add_option("--xmin", c.xmin)->capture_default_str();
    pot->add_option("--xmax", c.xmax)->capture_default_str();
    pot->add_option("--samples", c.samples)->capture_default_str();
    pot->add_option("--format", c.format, "csv | json")->capture_default_str();

    auto* fig = app.add_subcommand("figure1", "nine panels of potentials and equidistant levels");
    add_common(fig, c);
    fig->add_option("--samples", c.samples, "potential samples per panel");
    fig->add_option("--ceiling", c.ceiling, "level ceiling above the ground state, in units of (a+1) hbar omega")
        ->capture_default_str();
    fig->add_option("--xmax", c.extent, "half-width of the plotted x-range (default: padded turning point of the top level)");
    fig->add_option("--format", c.format, "csv | json | svg (svg also writes csv)")->capture_default_str();

    auto* ver = app.add_subcommand("verify", "run verification suites and write a JSON report");
    add_common(ver, c);
    ver->add_option("--suite", c.suite, "all | orthonormality | residual | algebra | spectrum | limits | ladder")
        ->check(CLI::IsMember({"all", "orthonormality", "residual", "algebra", "spectrum", "limits", "ladder"}))
        ->capture_default_str();
    ver->add_option("--tol", c.tol, "override the suite tolerance");
    ver->add_option("--seed", c.seed, "seed for extra random sample points")->capture_default_str();
    ver->add_option("--format", c.format, "json")->default_str("json");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << "run with --help for usage\n";
        return 2;
    }
    if (fig->parsed() && c.samples == 201) c.samples = 401;
    if (ver->parsed() && c.format == "csv") c.format = "json";

    try {
        if (spectrum->parsed()) return cmd_spectrum(c, out);
        if (wave->parsed()) return cmd_wavefunction(c, out, err);
        if (pot->parsed()) return cmd_potential(c, out);
        if (fig->parsed()) return cmd_figure1(c, out);
        if (ver->parsed()) return cmd_verify(c, out);
    } catch (const DomainError& e) {
        err << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const ConfigError& e) {
        err << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace pdmosc

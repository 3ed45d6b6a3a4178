// Command-line runner: reproduces every spectrum, comparison and operator
// check from a single flat JSON configuration, writing deterministic CSV or
// JSON data files.
//
// Exit codes: 0 success, 2 invalid configuration, 3 solver failure,
// 4 verification failure (verify-algebra only).

#include <CLI11.hpp>

#include <cmath>
#include <complex>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "rindler/dynamics.hpp"
#include "rindler/gravity.hpp"
#include "rindler/io.hpp"
#include "rindler/nc_shift.hpp"
#include "rindler/operator_algebra.hpp"
#include "rindler/params.hpp"
#include "rindler/sl_solver.hpp"
#include "rindler/spectrum.hpp"

namespace fs = std::filesystem;
using rindler::io::format_double;
using json = rindler::io::json;

namespace {

struct RunConfig {
    rindler::PhysicalParams params;
    int levels = 5;
    int grid_points = 6000;
    double zeta_max = 60.0;
    std::string output_dir = ".";
    std::string format = "csv";
    bool numeric = false;
    double tolerance = 1e-9;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

RunConfig load_config(const std::string& config_path) {
    RunConfig cfg;
    if (config_path.empty()) return cfg;
    std::ifstream in(config_path);
    if (!in) throw ConfigError("cannot read config file: " + config_path);
    json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    try {
        cfg.params = rindler::io::params_from_json(doc);
        if (doc.contains("levels")) cfg.levels = doc.at("levels").get<int>();
        if (doc.contains("grid_points")) cfg.grid_points = doc.at("grid_points").get<int>();
        if (doc.contains("zeta_max")) cfg.zeta_max = doc.at("zeta_max").get<double>();
        if (doc.contains("format")) cfg.format = doc.at("format").get<std::string>();
        if (doc.contains("output_dir")) cfg.output_dir = doc.at("output_dir").get<std::string>();
    } catch (const std::exception& e) {
        throw ConfigError(std::string("invalid config: ") + e.what());
    }
    return cfg;
}

void validate_config(const RunConfig& cfg) {
    try {
        cfg.params.validate();
    } catch (const std::exception& e) {
        throw ConfigError(e.what());
    }
    if (cfg.levels < 1) throw ConfigError("levels must be >= 1");
    if (cfg.format != "csv" && cfg.format != "json")
        throw ConfigError("format must be 'csv' or 'json'");
    if (cfg.grid_points < 50) throw ConfigError("grid-points must be >= 50");
    if (!(cfg.zeta_max > 0.0)) throw ConfigError("zeta-max must be > 0");
    std::error_code ec;
    fs::create_directories(cfg.output_dir, ec);
    if (ec || !fs::is_directory(cfg.output_dir))
        throw ConfigError("output directory is not writable: " + cfg.output_dir);
    const fs::path probe = fs::path(cfg.output_dir) / ".write_probe";
    std::ofstream test(probe);
    if (!test) throw ConfigError("output directory is not writable: " + cfg.output_dir);
    test.close();
    fs::remove(probe, ec);
}

void write_manifest(const RunConfig& cfg, const std::string& subcommand) {
    std::ofstream out(fs::path(cfg.output_dir) / "manifest.txt", std::ios::binary);
    out << "tool: rindler_cli\nsubcommand: " << subcommand << "\nconfig: "
        << rindler::io::params_to_json(cfg.params).dump() << "\nlevels: " << cfg.levels
        << "\ngrid_points: " << cfg.grid_points << "\nzeta_max: " << format_double(cfg.zeta_max)
        << "\nformat: " << cfg.format << "\n";
}

int cmd_spectrum(const RunConfig& cfg) {
    const auto& p = cfg.params;
    const double spacing = rindler::spectrum::energy_level(p, 1) -
                           rindler::spectrum::energy_level(p, 0);

    std::vector<rindler::sl::NumericLevel> numeric_levels;
    if (cfg.numeric) {
        const rindler::sl::Grid grid(cfg.zeta_max, cfg.grid_points);
        numeric_levels = rindler::sl::solve_spectrum(p, grid, cfg.levels);
    }

    if (cfg.format == "json") {
        json rows = json::array();
        for (int n = 0; n < cfg.levels; ++n) {
            json row{{"n", n},
                     {"sigma", n + 0.5},
                     {"energy", rindler::spectrum::energy_level(p, n)},
                     {"spacing", spacing}};
            if (cfg.numeric) {
                row["sigma_numeric"] = numeric_levels[n].sigma_numeric;
                row["abs_error"] = std::abs(numeric_levels[n].sigma_numeric - (n + 0.5));
            }
            rows.push_back(row);
        }
        rindler::io::write_json_file((fs::path(cfg.output_dir) / "spectrum.json").string(),
                                     json{{"spectrum", rows}});
    } else {
        rindler::io::CsvWriter csv((fs::path(cfg.output_dir) / "spectrum.csv").string());
        std::vector<std::string> cols{"n", "sigma", "energy", "spacing"};
        if (cfg.numeric) {
            cols.push_back("sigma_numeric");
            cols.push_back("abs_error");
        }
        csv.header(cols);
        for (int n = 0; n < cfg.levels; ++n) {
            std::vector<std::string> cells{
                std::to_string(n), format_double(n + 0.5),
                format_double(rindler::spectrum::energy_level(p, n)), format_double(spacing)};
            if (cfg.numeric) {
                cells.push_back(format_double(numeric_levels[n].sigma_numeric));
                cells.push_back(
                    format_double(std::abs(numeric_levels[n].sigma_numeric - (n + 0.5))));
            }
            csv.row(cells);
        }
    }

    if (cfg.numeric) {
        // Halving sequence ending at the configured resolution.
        rindler::io::CsvWriter csv((fs::path(cfg.output_dir) / "convergence.csv").string());
        csv.header({"h", "zeta_max", "n", "sigma_numeric", "sigma_analytic", "abs_error"});
        for (int divisor = 4; divisor >= 1; divisor /= 2) {
            const rindler::sl::Grid grid(cfg.zeta_max, cfg.grid_points / divisor);
            const auto levels = rindler::sl::solve_spectrum(p, grid, cfg.levels);
            for (int n = 0; n < cfg.levels; ++n) {
                csv.row({format_double(grid.h), format_double(grid.zeta_max), std::to_string(n),
                         format_double(levels[n].sigma_numeric), format_double(n + 0.5),
                         format_double(std::abs(levels[n].sigma_numeric - (n + 0.5)))});
            }
        }
    }

    write_manifest(cfg, "spectrum");
    std::cout << "spectrum: wrote " << cfg.levels << " levels to " << cfg.output_dir << "\n";
    return 0;
}

int cmd_compare(const RunConfig& cfg) {
    if (cfg.levels < 3) throw ConfigError("compare needs at least 3 levels");
    const auto quantum = rindler::gravity::eqp_deviation_report(cfg.params, cfg.levels);
    const std::vector<double> p_list{0.0, 0.1 * cfg.params.m * cfg.params.c,
                                     0.2 * cfg.params.m * cfg.params.c};
    const auto classical = rindler::dynamics::eqp_classical_report(cfg.params, p_list, 0.01, 1e-3);

    if (cfg.format == "json") {
        json qrows = json::array();
        for (std::size_t n = 0; n < quantum.rindler_energies.size(); ++n) {
            qrows.push_back({{"system", "rindler"},
                             {"n", n},
                             {"energy", quantum.rindler_energies[n]},
                             {"spacing", n + 1 < quantum.rindler_energies.size()
                                             ? json(quantum.rindler_spacings[n])
                                             : json(nullptr)}});
        }
        for (std::size_t n = 0; n < quantum.bouncer_energies.size(); ++n) {
            qrows.push_back({{"system", "bouncer"},
                             {"n", n + 1},
                             {"energy", quantum.bouncer_energies[n]},
                             {"spacing", n + 1 < quantum.bouncer_energies.size()
                                             ? json(quantum.bouncer_spacings[n])
                                             : json(nullptr)}});
        }
        json crows = json::array();
        for (const auto& row : classical.rows)
            crows.push_back({{"p_transverse", row.p_transverse},
                             {"acc_nlo", row.acc_nlo},
                             {"acc_gravity", row.acc_gravity},
                             {"acc_predicted", row.acc_predicted}});
        rindler::io::write_json_file(
            (fs::path(cfg.output_dir) / "compare.json").string(),
            json{{"quantum",
                  {{"levels", qrows},
                   {"rindler_spacing_stddev", quantum.rindler_spacing_stddev},
                   {"bouncer_max_rel_spacing_variation", quantum.bouncer_max_rel_variation}}},
                 {"classical",
                  {{"rows", crows},
                   {"nlo_spread", classical.nlo_spread},
                   {"gravity_spread", classical.gravity_spread}}}});
    } else {
        rindler::io::CsvWriter qcsv((fs::path(cfg.output_dir) / "eqp_quantum.csv").string());
        qcsv.header({"system", "n", "energy", "spacing"});
        for (std::size_t n = 0; n < quantum.rindler_energies.size(); ++n)
            qcsv.row({"rindler", std::to_string(n), format_double(quantum.rindler_energies[n]),
                      n + 1 < quantum.rindler_energies.size()
                          ? format_double(quantum.rindler_spacings[n])
                          : ""});
        for (std::size_t n = 0; n < quantum.bouncer_energies.size(); ++n)
            qcsv.row({"bouncer", std::to_string(n + 1),
                      format_double(quantum.bouncer_energies[n]),
                      n + 1 < quantum.bouncer_energies.size()
                          ? format_double(quantum.bouncer_spacings[n])
                          : ""});
        rindler::io::CsvWriter ccsv((fs::path(cfg.output_dir) / "eqp_classical.csv").string());
        ccsv.header({"p_transverse", "acc_nlo", "acc_gravity", "acc_predicted"});
        for (const auto& row : classical.rows)
            ccsv.row({format_double(row.p_transverse), format_double(row.acc_nlo),
                      format_double(row.acc_gravity), format_double(row.acc_predicted)});
    }

    write_manifest(cfg, "compare");
    std::cout << "equivalence-principle comparison (g := alpha = "
              << format_double(cfg.params.alpha) << ")\n"
              << "  rindler spacing stddev:          "
              << format_double(quantum.rindler_spacing_stddev) << "\n"
              << "  bouncer max rel spacing change:  "
              << format_double(quantum.bouncer_max_rel_variation) << "\n"
              << "  classical NLO acceleration spread:     "
              << format_double(classical.nlo_spread) << "\n"
              << "  classical gravity acceleration spread: "
              << format_double(classical.gravity_spread) << "\n";
    return 0;
}

int cmd_nc(const RunConfig& cfg) {
    const auto rep = rindler::nc::shift_report(cfg.params);
    json doc{{"analytic", rep.result.analytic},
             {"constant_part", rep.result.constant_part},
             {"derivative_part", rep.result.derivative_part},
             {"total_numeric", rep.result.total_numeric},
             {"ratio_to_spacing", rep.ratio_to_spacing},
             {"discrepancy_flag", rep.discrepancy_flag}};
    rindler::io::write_json_file((fs::path(cfg.output_dir) / "nc_shift.json").string(), doc);
    write_manifest(cfg, "nc");

    if (rep.zero_shift) {
        std::cout << "nc shift: zero (theta = " << format_double(cfg.params.theta)
                  << ", p_y = " << format_double(cfg.params.p_y) << ")\n";
    } else {
        std::cout << "nc ground-state shift\n"
                  << "  analytic (scalar terms): " << format_double(rep.result.analytic) << "\n"
                  << "  constant part (quadrature): " << format_double(rep.result.constant_part)
                  << "\n  derivative part: " << format_double(rep.result.derivative_part)
                  << "\n  total: " << format_double(rep.result.total_numeric)
                  << "\n  shift / level spacing: " << format_double(rep.ratio_to_spacing) << "\n";
        if (rep.discrepancy_flag)
            std::cout << "  NOTE: |derivative part| >= |constant part|; the closed form covers"
                         " only the scalar terms\n";
    }
    return 0;
}

int cmd_verify_algebra(const RunConfig& cfg) {
    struct Row {
        std::string check;
        int n;
        double residual;
        double tolerance;
    };
    std::vector<Row> rows;
    const double hbar = cfg.params.hbar;
    const double theta = cfg.params.theta > 0.0 ? cfg.params.theta : 0.1;
    using Matrix = rindler::algebra::Matrix;
    const std::complex<double> im(0.0, 1.0);

    for (int n : {8, 16, 32}) {
        const auto rep = rindler::algebra::build_rep(n, hbar);
        rows.push_back({"weyl_identity", n, rindler::algebra::weyl_identity_residual(rep),
                        cfg.tolerance});
        const auto ops = rindler::algebra::bopp_shift(rep, rep, theta);
        const Matrix eye2 = Matrix::Identity(ops.dim, ops.dim);
        const Matrix comm_xy = ops.X_nc * ops.Y_nc - ops.Y_nc * ops.X_nc - im * theta * eye2;
        const Matrix comm_xp = ops.X_nc * ops.Px - ops.Px * ops.X_nc - im * hbar * eye2;
        const Matrix comm_pp = ops.Px * ops.Py - ops.Py * ops.Px;
        rows.push_back({"bopp_xy_commutator", n,
                        rindler::algebra::tensor_interior_max_abs(comm_xy, n), cfg.tolerance});
        rows.push_back({"bopp_xp_commutator", n,
                        rindler::algebra::tensor_interior_max_abs(comm_xp, n), cfg.tolerance});
        rows.push_back({"bopp_pp_commutator", n,
                        rindler::algebra::tensor_interior_max_abs(comm_pp, n), cfg.tolerance});
    }
    {
        const auto rep = rindler::algebra::build_rep(16, hbar);
        const auto triv = rindler::algebra::nc_gravity_triviality(rep, rep, cfg.params.m,
                                                                  cfg.params.alpha, 0.05);
        rows.push_back({"nc_gravity_triviality", 16, triv.max_shift, 1e-6});
    }

    bool all_pass = true;
    if (cfg.format == "json") {
        json jrows = json::array();
        for (const auto& r : rows) {
            const bool pass = r.residual < r.tolerance;
            all_pass = all_pass && pass;
            jrows.push_back({{"check", r.check},
                            {"N", r.n},
                            {"residual", r.residual},
                            {"tolerance", r.tolerance},
                            {"pass", pass}});
        }
        rindler::io::write_json_file((fs::path(cfg.output_dir) / "verify_algebra.json").string(),
                                     json{{"checks", jrows}});
    } else {
        rindler::io::CsvWriter csv((fs::path(cfg.output_dir) / "verify_algebra.csv").string());
        csv.header({"check", "N", "residual", "tolerance", "pass"});
        for (const auto& r : rows) {
            const bool pass = r.residual < r.tolerance;
            all_pass = all_pass && pass;
            csv.row({r.check, std::to_string(r.n), format_double(r.residual),
                     format_double(r.tolerance), pass ? "1" : "0"});
        }
    }

    write_manifest(cfg, "verify-algebra");
    for (const auto& r : rows)
        std::cout << (r.residual < r.tolerance ? "pass" : "FAIL") << "  " << r.check
                  << "  N=" << r.n << "  residual=" << format_double(r.residual) << "\n";
    return all_pass ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Accelerated-frame quantum spectrum toolkit"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    std::string format;
    int levels = -1;
    int grid_points = -1;
    double zeta_max = -1.0;
    bool numeric = false;
    double tolerance = -1.0;

    app.add_option("--config", config_path, "flat JSON configuration file");
    app.add_option("--out", out_dir, "output directory (default '.')");
    app.add_option("--format", format, "output format: csv or json");
    app.add_option("--levels", levels, "number of levels K");
    app.add_option("--grid-points", grid_points, "SL grid resolution");
    app.add_option("--zeta-max", zeta_max, "SL domain cutoff");
    app.add_flag("--numeric", numeric, "also run the numeric SL solver (spectrum)");
    app.add_option("--tolerance", tolerance, "residual tolerance (verify-algebra)");

    auto* sub_spectrum = app.add_subcommand("spectrum", "analytic (and numeric) spectrum tables");
    auto* sub_compare = app.add_subcommand("compare", "equivalence-principle deviation reports");
    auto* sub_nc = app.add_subcommand("nc", "noncommutative ground-state shift report");
    auto* sub_verify = app.add_subcommand("verify-algebra", "operator-identity residual checks");
    // The shared options above live on the app; let them appear after the
    // subcommand name as well.
    for (auto* sub : {sub_spectrum, sub_compare, sub_nc, sub_verify}) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        RunConfig cfg = load_config(config_path);
        if (!out_dir.empty()) cfg.output_dir = out_dir;
        if (!format.empty()) cfg.format = format;
        if (levels > 0) cfg.levels = levels;
        if (grid_points > 0) cfg.grid_points = grid_points;
        if (zeta_max > 0.0) cfg.zeta_max = zeta_max;
        if (tolerance > 0.0) cfg.tolerance = tolerance;
        cfg.numeric = numeric;
        validate_config(cfg);

        if (sub_spectrum->parsed()) return cmd_spectrum(cfg);
        if (sub_compare->parsed()) return cmd_compare(cfg);
        if (sub_nc->parsed()) return cmd_nc(cfg);
        if (sub_verify->parsed()) return cmd_verify_algebra(cfg);
        std::cerr << "no subcommand selected\n";
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "solver error: " << e.what() << "\n";
        return 3;
    }
}

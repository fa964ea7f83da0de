// Command-line frontend: every computation of the library is exposed as a
// subcommand with deterministic file output (JSON or CSV), plus a one-shot
// verification suite. Exit codes: 0 success, 1 failed verification,
// 2 usage error, 3 guard violation, 4 numeric/domain error.

#include <cfloat>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gasket/dynamics.hpp"
#include "gasket/errors.hpp"
#include "gasket/gasket_graph.hpp"
#include "gasket/measures.hpp"
#include "gasket/pressure.hpp"
#include "gasket/recursion.hpp"
#include "gasket/serialize.hpp"
#include "gasket/verify.hpp"
#include "gasket/zero_cloud.hpp"

namespace {

using gasket::Json;

void write_output(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << content;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::complex<double> parse_complex(const std::string& s) {
    std::istringstream in(s);
    double re = 0.0, im = 0.0;
    char comma = 0;
    if (!(in >> re)) throw std::invalid_argument("cannot parse complex value: " + s);
    if (in >> comma) {
        if (comma != ',' || !(in >> im))
            throw std::invalid_argument("cannot parse complex value: " + s);
    }
    return {re, im};
}

unsigned default_precision_bits() {
    if (const char* env = std::getenv("GASKET_PRECISION_BITS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return 53;
}

template <class Real>
std::string orbit_csv_typed(const std::string& map, std::complex<double> start,
                            unsigned steps, unsigned depth, bool fatou,
                            const gasket::BranchConfig& cfg) {
    using C = std::complex<Real>;
    const C x(static_cast<Real>(start.real()), static_cast<Real>(start.imag()));
    std::vector<std::pair<std::complex<double>, unsigned>> rows;
    if (map == "h") {
        if (fatou) {
            for (unsigned k = 0; k <= steps; ++k) {
                const C fk = gasket::fatou_F(x, k, cfg);
                rows.emplace_back(std::complex<double>(static_cast<double>(fk.real()),
                                                       static_cast<double>(fk.imag())),
                                  k);
            }
        } else {
            const auto orbit = gasket::iterate_h(x, steps, cfg);
            for (unsigned k = 0; k < orbit.size(); ++k) {
                rows.emplace_back(std::complex<double>(static_cast<double>(orbit[k].real()),
                                                       static_cast<double>(orbit[k].imag())),
                                  k);
            }
        }
    } else {
        const auto inverse = map == "f" ? gasket::InverseMap::f_map : gasket::InverseMap::g_map;
        for (const auto& [v, d] : gasket::backward_orbit_flat(x, depth, inverse, cfg)) {
            rows.emplace_back(std::complex<double>(static_cast<double>(v.real()),
                                                   static_cast<double>(v.imag())),
                              d);
        }
    }
    return gasket::orbit_to_csv(rows);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact-arithmetic and numerical-dynamics toolkit for the Ising model on the "
        "Sierpinski gasket: partition functions Z_n, the polynomial families M_n and "
        "T_n, their zero measures zeta_n/mu_n/tau_n, the inverse branch h with its "
        "Fatou coordinate F, and the pressure function p."};
    app.require_subcommand(1);

    std::string output = "-";
    app.add_option("-o,--output", output, "Output path ('-' streams to standard output)")
        ->capture_default_str();

    // ---- poly
    auto* poly = app.add_subcommand(
        "poly", "Exact polynomials: partition function Z_n, its numerator family M_n, "
                "the conjugate family T_n (with factor list), or the boundary pair U_n/V_n");
    std::string which = "M";
    unsigned poly_n = 0;
    unsigned poly_max = 8;
    poly->add_option("--which", which, "Family: Z, M, T, or UV")
        ->check(CLI::IsMember({"Z", "M", "T", "UV"}))
        ->capture_default_str();
    poly->add_option("--n", poly_n, "Level n")->required();
    poly->add_option("--max-level", poly_max,
                     "Exact-mode level guard (raising it past 8 warns about memory)");

    // ---- enumerate
    auto* enumerate = app.add_subcommand(
        "enumerate", "Brute-force partition function Z_n of the level-n gasket by "
                     "spin-configuration enumeration (the oracle for the recursion)");
    unsigned enum_n = 0;
    bool enum_boundary = false;
    bool enum_graph = false;
    enumerate->add_option("--n", enum_n, "Gasket level (enumeration needs <= 25 vertices)")
        ->required();
    enumerate->add_flag("--boundary", enum_boundary,
                        "Emit the corner-pinned pair U_n, V_n instead of Z_n");
    enumerate->add_flag("--graph", enum_graph, "Emit the gasket graph as JSON instead");

    // ---- zeros
    auto* zeros = app.add_subcommand(
        "zeros", "Zero clouds of T_n, M_n, or Z_n from backward orbits, with "
                 "multiplicities and provenance depth");
    std::string zeros_source = "M";
    unsigned zeros_n = 1;
    std::string zeros_format = "csv";
    unsigned zeros_guard = 20;
    zeros->add_option("--source", zeros_source, "Family: T, M, or Z")
        ->check(CLI::IsMember({"T", "M", "Z"}))
        ->capture_default_str();
    zeros->add_option("--n", zeros_n, "Level n")->required();
    zeros->add_option("--format", zeros_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    zeros->add_option("--depth-guard", zeros_guard, "Backward-orbit depth guard");

    // ---- measure
    auto* measure = app.add_subcommand(
        "measure", "Atomic root measures tau_n, mu_n, zeta_n, or truncations of their "
                   "limits, with exact rational weights");
    std::string measure_kind = "mu";
    unsigned measure_n = 1;
    int measure_truncate = -1;
    unsigned measure_point_depth = 12;
    measure->add_option("--kind", measure_kind, "tau, mu, or zeta")
        ->check(CLI::IsMember({"tau", "mu", "zeta"}))
        ->capture_default_str();
    measure->add_option("--n", measure_n, "Level n");
    measure->add_option("--truncate", measure_truncate,
                        "Build the limit measure truncated at depth J instead of level n");
    measure->add_option("--point-depth", measure_point_depth,
                        "Materialize atom locations up to this depth");

    // ---- pressure
    auto* pressure = app.add_subcommand(
        "pressure", "Pressure function p_n(y) against its asymptote (3/4) log y, or the "
                    "log-kernel potential m of the limiting root measure");
    std::vector<double> pressure_y;
    std::string pressure_grid;
    unsigned pressure_n = 50;
    bool pressure_potential = false;
    unsigned pressure_depth = gasket::kDefaultPotentialDepth;
    pressure->add_option("--y", pressure_y, "Evaluation points (repeatable)");
    pressure->add_option("--grid", pressure_grid,
                         "Log-spaced grid min:max:count (alternative to --y)");
    pressure->add_option("--n", pressure_n, "Level n")->capture_default_str();
    pressure->add_flag("--potential", pressure_potential,
                       "Evaluate the potential m at the given points instead of p");
    pressure->add_option("--depth", pressure_depth,
                         "Truncation depth J of the potential sum")
        ->capture_default_str();

    // ---- orbit
    auto* orbit = app.add_subcommand(
        "orbit", "Orbits of the inverse branch h (optionally its Fatou coordinate F), "
                 "or backward preimage orbits under f or g");
    std::string orbit_map = "h";
    std::string orbit_start = "20";
    unsigned orbit_steps = 10;
    unsigned orbit_depth = 5;
    bool orbit_fatou = false;
    unsigned orbit_precision = default_precision_bits();
    unsigned orbit_guard = 20;
    orbit->add_option("--map", orbit_map, "h (forward inverse-branch), f or g (backward)")
        ->check(CLI::IsMember({"h", "f", "g"}))
        ->capture_default_str();
    orbit->add_option("--start", orbit_start, "Start/seed point re[,im]")
        ->capture_default_str();
    orbit->add_option("--steps", orbit_steps, "Forward iteration count for h")
        ->capture_default_str();
    orbit->add_option("--depth", orbit_depth, "Backward orbit depth for f/g")
        ->capture_default_str();
    orbit->add_flag("--fatou", orbit_fatou,
                    "Emit the Fatou coordinate F_k along the orbit instead of h^k");
    orbit->add_option("--precision", orbit_precision,
                      "Working precision in bits (53 = double, up to long double)")
        ->capture_default_str();
    orbit->add_option("--depth-guard", orbit_guard, "Backward-orbit depth guard");

    // ---- verify
    auto* verify = app.add_subcommand(
        "verify", "Run the acceptance checks (exact identities, oracles, dynamics "
                  "estimates); exit 0 iff all pass");
    std::string profile = "quick";
    std::string fault_name = "none";
    verify->add_option("--profile", profile, "quick or full")
        ->check(CLI::IsMember({"quick", "full"}))
        ->capture_default_str();
    verify->add_option("--inject-fault", fault_name,
                       "Perturb one identity to prove the suite detects it");

    // lets the global --output appear after the subcommand name
    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (poly->parsed()) {
            gasket::EngineLimits limits;
            limits.max_level = poly_max;
            Json j;
            if (which == "Z") {
                j = gasket::poly_to_json(gasket::compute_Z(poly_n, limits));
            } else if (which == "M") {
                j = gasket::mn_to_json(gasket::compute_M(poly_n, limits));
            } else if (which == "T") {
                j = gasket::tn_to_json(gasket::compute_T(poly_n, limits));
            } else {
                j = gasket::uv_to_json(gasket::compute_UV(poly_n, limits));
            }
            write_output(output, dump(j));
        } else if (enumerate->parsed()) {
            const gasket::GasketGraph g = gasket::build_gasket(enum_n);
            if (enum_graph) {
                write_output(output, dump(gasket::graph_to_json(g)));
            } else if (enum_boundary) {
                const auto [u, v] = gasket::enumerate_boundary_sums(g);
                write_output(output, dump(Json{{"level", enum_n},
                                               {"U", gasket::poly_to_json(u)},
                                               {"V", gasket::poly_to_json(v)}}));
            } else {
                write_output(output, dump(gasket::poly_to_json(
                                         gasket::enumerate_partition_function(g))));
            }
        } else if (zeros->parsed()) {
            gasket::BranchConfig cfg;
            cfg.backward_depth_guard = zeros_guard;
            gasket::ZeroCloud cloud;
            if (zeros_source == "T") cloud = gasket::zeros_of_T(zeros_n, cfg);
            else if (zeros_source == "M") cloud = gasket::zeros_of_M(zeros_n, cfg);
            else cloud = gasket::zeros_of_Z(zeros_n, cfg);
            if (zeros_format == "csv") {
                write_output(output, gasket::zero_cloud_to_csv(cloud));
            } else {
                Json pts = Json::array();
                for (const auto& p : cloud.points) {
                    pts.push_back(Json{{"re", gasket::format_double(p.value.real())},
                                       {"im", gasket::format_double(p.value.imag())},
                                       {"multiplicity", p.multiplicity},
                                       {"depth", p.depth}});
                }
                write_output(output, dump(Json{{"level", cloud.level},
                                               {"source", to_string(cloud.source)},
                                               {"points", std::move(pts)}}));
            }
        } else if (measure->parsed()) {
            gasket::MeasureConfig cfg;
            cfg.point_depth = measure_point_depth;
            const auto kind = measure_kind == "tau"  ? gasket::MeasureKind::tau
                              : measure_kind == "mu" ? gasket::MeasureKind::mu
                                                     : gasket::MeasureKind::zeta;
            const gasket::AtomicMeasure m =
                measure_truncate >= 0
                    ? gasket::build_limit_truncation(
                          kind, static_cast<unsigned>(measure_truncate), cfg)
                    : gasket::build_measure(kind, measure_n, cfg);
            write_output(output, dump(gasket::measure_to_json(m)));
        } else if (pressure->parsed()) {
            std::vector<double> ys = pressure_y;
            if (!pressure_grid.empty()) {
                double lo = 0, hi = 0;
                unsigned count = 0;
                char c1 = 0, c2 = 0;
                std::istringstream in(pressure_grid);
                if (!(in >> lo >> c1 >> hi >> c2 >> count) || c1 != ':' || c2 != ':' ||
                    count < 2 || lo <= 0.0 || hi <= lo)
                    throw std::invalid_argument("bad --grid spec (want min:max:count)");
                for (unsigned i = 0; i < count; ++i) {
                    const double t = static_cast<double>(i) / (count - 1);
                    ys.push_back(lo * std::pow(hi / lo, t));
                }
            }
            if (ys.empty()) throw std::invalid_argument("pressure: no evaluation points");
            if (pressure_potential) {
                std::string csv = "x,depth,m,log_x,difference\n";
                for (double x : ys) {
                    const auto r = gasket::potential_m({x, 0.0}, pressure_depth);
                    if (r.near_atom)
                        std::cerr << "warning: x = " << x << " is within "
                                  << r.min_atom_distance << " of atom ("
                                  << r.nearest_atom.real() << ", " << r.nearest_atom.imag()
                                  << ")\n";
                    const double lx = std::log(std::abs(x));
                    csv += gasket::format_double(x) + "," + std::to_string(pressure_depth) +
                           "," + gasket::format_double(r.value) + "," +
                           gasket::format_double(lx) + "," +
                           gasket::format_double(r.value - lx) + "\n";
                }
                write_output(output, csv);
            } else {
                write_output(output, gasket::pressure_rows_to_csv(
                                         gasket::pressure_curve(ys, pressure_n)));
            }
        } else if (orbit->parsed()) {
            gasket::BranchConfig cfg;
            cfg.precision = orbit_precision;
            cfg.backward_depth_guard = orbit_guard;
            const std::complex<double> start = parse_complex(orbit_start);
            std::string csv;
            if (orbit_precision <= DBL_MANT_DIG) {
                csv = orbit_csv_typed<double>(orbit_map, start, orbit_steps, orbit_depth,
                                              orbit_fatou, cfg);
            } else if (orbit_precision <= LDBL_MANT_DIG) {
                csv = orbit_csv_typed<long double>(orbit_map, start, orbit_steps,
                                                   orbit_depth, orbit_fatou, cfg);
            } else {
                throw gasket::guard_error(
                    "precision above " + std::to_string(LDBL_MANT_DIG) +
                    " bits is not available in this build");
            }
            write_output(output, csv);
        } else if (verify->parsed()) {
            const auto fault = gasket::fault_from_name(fault_name);
            if (!fault) throw std::invalid_argument("unknown fault: " + fault_name);
            gasket::VerifyOptions options;
            options.profile = profile == "full" ? gasket::VerifyProfile::full
                                                : gasket::VerifyProfile::quick;
            options.fault = *fault;
            const auto results = gasket::run_verification(options);
            std::ostringstream report;
            const int code = gasket::print_report(results, report);
            write_output(output, report.str());
            return code;
        }
    } catch (const gasket::guard_error& e) {
        std::cerr << "guard error: " << e.what() << "\n";
        return 3;
    } catch (const gasket::numeric_error& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 4;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

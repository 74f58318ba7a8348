// relkit command-line tool: batch access to the exponent solver, potential
// forms, Clifford checks, dispersion sweeps and wavepacket propagation.
//
// One JSON config document drives every command; flags override file values.
// Exit codes: 0 = ran and all checks passed, 1 = usage/config error,
// 2 = numerical/convergence failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "relkit/clifford.hpp"
#include "relkit/dimensions.hpp"
#include "relkit/dispersion.hpp"
#include "relkit/errors.hpp"
#include "relkit/evolve.hpp"
#include "relkit/potential.hpp"
#include "relkit/rng.hpp"

using nlohmann::ordered_json;
using namespace relkit;

namespace {

constexpr const char* kToolVersion = "relkit 0.1.0";
constexpr const char* kCsvVersion = "relkit-csv v1";

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shortest representation that parses back to the same double.
std::string fmt(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

std::string cplx_str(const cplx& z) {
    if (z.imag() == 0.0) return fmt(z.real());
    if (z.real() == 0.0) return fmt(z.imag()) + "i";
    return fmt(z.real()) + (z.imag() < 0.0 ? "-" : "+") + fmt(std::abs(z.imag())) + "i";
}

ordered_json matrix_json(const ComplexMatrix4& m) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < 4; ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < 4; ++j) row.push_back(cplx_str(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

void print_matrix(std::ostream& os, const ComplexMatrix4& m, const std::string& indent) {
    for (int i = 0; i < 4; ++i) {
        os << indent << "[";
        for (int j = 0; j < 4; ++j) os << (j ? ", " : "") << cplx_str(m(i, j));
        os << "]\n";
    }
}

// ---------------------------------------------------------------------------
// config document

const std::map<std::string, std::vector<std::string>> kSchema = {
    {"", {"units", "params", "seed", "output", "exponents", "beta", "potential", "clifford",
          "dispersion", "grid", "packet", "evolve"}},
    {"params", {"m", "c", "hbar"}},
    {"exponents", {"basis", "target", "alpha4"}},
    {"beta", {"E"}},
    {"potential", {"beta", "B", "E", "r_min", "r_max", "count", "spacing"}},
    {"clifford", {"draws"}},
    {"dispersion", {"k_min", "k_max", "count", "spacing"}},
    {"grid", {"n_points", "dx", "x0"}},
    {"packet", {"x_center", "k0", "sigma"}},
    {"evolve", {"kind", "dt", "steps", "sample_every", "velocity_tolerance", "trajectory_file",
                "potential", "constant_value", "B", "singular_cap"}},
};

void reject_unknown_keys(const ordered_json& obj, const std::string& section) {
    if (!obj.is_object()) throw ConfigError("config section '" + section + "' must be an object");
    const auto& allowed = kSchema.at(section);
    for (const auto& [key, value] : obj.items()) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            const std::string path = section.empty() ? key : section + "." + key;
            throw ConfigError("unknown config key: " + path);
        }
        if (kSchema.count(key) && section.empty()) reject_unknown_keys(value, key);
    }
}

struct Config {
    ordered_json doc = ordered_json::object();

    static Config load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw ConfigError("cannot open config file: " + path);
        Config cfg;
        try {
            cfg.doc = ordered_json::parse(in);
        } catch (const nlohmann::json::exception& e) {
            throw ConfigError("config parse failure: " + std::string(e.what()));
        }
        reject_unknown_keys(cfg.doc, "");
        return cfg;
    }

    template <typename T>
    std::optional<T> get(const std::string& section, const std::string& key) const {
        if (!doc.contains(section)) return std::nullopt;
        const auto& s = doc.at(section);
        if (!s.contains(key)) return std::nullopt;
        try {
            return s.at(key).get<T>();
        } catch (const nlohmann::json::exception&) {
            throw ConfigError("config key " + section + "." + key + " has the wrong type");
        }
    }

    template <typename T>
    std::optional<T> top(const std::string& key) const {
        if (!doc.contains(key)) return std::nullopt;
        try {
            return doc.at(key).get<T>();
        } catch (const nlohmann::json::exception&) {
            throw ConfigError("config key " + key + " has the wrong type");
        }
    }
};

// Flag beats config beats default.
template <typename T>
T pick(std::size_t flag_count, const T& flag_value, const std::optional<T>& config_value,
       const T& fallback) {
    if (flag_count > 0) return flag_value;
    if (config_value) return *config_value;
    return fallback;
}

struct CommonOptions {
    std::string config_path;
    std::string units = "natural";
    double mass = 1.0, c = 1.0, hbar = 1.0;
    std::uint64_t seed = 1;
    std::string output = "csv";

    std::size_t units_count = 0, mass_count = 0, c_count = 0, hbar_count = 0, seed_count = 0,
                output_count = 0;

    Config cfg;
    PhysParams params = PhysParams::natural();

    void resolve() {
        if (!config_path.empty()) cfg = Config::load(config_path);
        units = pick(units_count, units, cfg.top<std::string>("units"), std::string("natural"));
        seed = pick(seed_count, seed, cfg.top<std::uint64_t>("seed"), std::uint64_t{1});
        output = pick(output_count, output, cfg.top<std::string>("output"), std::string("csv"));
        if (output != "csv" && output != "json")
            throw ConfigError("output must be 'csv' or 'json', got '" + output + "'");

        if (units == "natural") {
            params = PhysParams::natural();
            if (mass_count || c_count || hbar_count || cfg.doc.contains("params"))
                throw ConfigError("natural units fix m = c = hbar = 1; drop the params overrides");
        } else if (units == "si") {
            const auto m_cfg = cfg.get<double>("params", "m");
            const double m = pick(mass_count, mass, m_cfg, -1.0);
            if (m <= 0.0) throw ConfigError("si units require an explicit positive mass");
            const double c_val =
                pick(c_count, c, cfg.get<double>("params", "c"), 299792458.0);
            const double hbar_val =
                pick(hbar_count, hbar, cfg.get<double>("params", "hbar"), 1.054571817e-34);
            params = PhysParams(m, c_val, hbar_val);
        } else {
            throw ConfigError("units must be 'natural' or 'si', got '" + units + "'");
        }
    }

    bool json() const { return output == "json"; }

    ordered_json report_header(const std::string& command) const {
        ordered_json j;
        j["tool"] = kToolVersion;
        j["command"] = command;
        j["units"] = units;
        j["params"] = {{"m", params.m()}, {"c", params.c()}, {"hbar", params.hbar()}};
        j["seed"] = seed;
        return j;
    }

    void print_text_header(std::ostream& os, const std::string& command) const {
        os << kToolVersion << " — " << command << "\n";
        os << "units: " << units << " (m=" << fmt(params.m()) << ", c=" << fmt(params.c())
           << ", hbar=" << fmt(params.hbar()) << ")\n";
        os << "seed: " << seed << "\n";
    }
};

void write_csv(std::ostream& os, const std::string& command, std::span<const std::string> header,
               const std::vector<std::vector<std::string>>& rows) {
    os << "# " << kCsvVersion << " " << command << "\n";
    for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
    os << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
        os << "\n";
    }
}

// Writes the table to --out (file) or stdout. Returns false on I/O failure.
bool emit_csv(const std::string& out_path, const std::string& command,
              std::span<const std::string> header, const std::vector<std::vector<std::string>>& rows) {
    if (out_path.empty()) {
        write_csv(std::cout, command, header, rows);
        return true;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file: " << out_path << "\n";
        return false;
    }
    write_csv(out, command, header, rows);
    return true;
}

std::vector<double> sweep_points(double lo, double hi, int count, const std::string& spacing) {
    if (count < 1) throw ConfigError("sweep count must be >= 1");
    if (spacing != "linear" && spacing != "log")
        throw ConfigError("spacing must be 'linear' or 'log', got '" + spacing + "'");
    if (spacing == "log" && !(lo > 0.0)) throw ConfigError("log spacing requires a positive minimum");
    if (hi < lo) throw ConfigError("sweep maximum must be >= minimum");
    std::vector<double> pts(count);
    if (count == 1) {
        pts[0] = lo;
        return pts;
    }
    for (int i = 0; i < count; ++i) {
        const double t = double(i) / double(count - 1);
        pts[i] = (spacing == "linear") ? lo + t * (hi - lo) : lo * std::pow(hi / lo, t);
    }
    return pts;
}

// ---------------------------------------------------------------------------
// exponents

struct ExponentsOptions {
    std::string alpha4;
    std::vector<std::string> basis_names;
    std::string target;
    std::size_t alpha4_count = 0, basis_count = 0, target_count = 0;
};

Dim parse_target(const std::string& text) {
    if (text == "dimensionless") return Dim::dimensionless();
    std::vector<Rational> parts;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) parts.push_back(Rational::parse(token));
    if (parts.size() != 3)
        throw ConfigError("target must be 'dimensionless' or 'L,T,M' rationals, got '" + text + "'");
    return {parts[0], parts[1], parts[2]};
}

std::vector<Quantity> resolve_basis(const std::vector<std::string>& names) {
    const auto known = default_basis();
    if (names.empty()) return known;
    std::vector<Quantity> basis;
    for (const auto& name : names) {
        const auto it = std::find_if(known.begin(), known.end(),
                                     [&](const Quantity& q) { return q.name == name; });
        if (it == known.end()) throw ConfigError("unknown basis quantity: " + name);
        basis.push_back(*it);
    }
    return basis;
}

std::string family_line(const ExponentSolution& sol, std::size_t j) {
    std::string line = "alpha[" + sol.basis_names[j] + "] = ";
    bool first = true;
    if (!sol.particular[j].is_zero() || sol.free_directions.empty()) {
        line += sol.particular[j].str();
        first = false;
    }
    bool any_term = !first;
    for (const auto& dir : sol.free_directions) {
        const Rational& c = dir.coeffs[j];
        if (c.is_zero()) continue;
        const Rational mag = c < Rational(0) ? -c : c;
        if (first && !(c < Rational(0))) {
            // no leading plus
        } else {
            line += (c < Rational(0)) ? (first ? "-" : " - ") : " + ";
        }
        if (!(mag == Rational(1))) line += mag.str() + "*";
        line += "alpha[" + dir.name + "]";
        first = false;
        any_term = true;
    }
    if (!any_term) line += "0";
    return line;
}

int cmd_exponents(const CommonOptions& common, const ExponentsOptions& opt) {
    const std::string alpha4_text =
        pick(opt.alpha4_count, opt.alpha4, common.cfg.get<std::string>("exponents", "alpha4"),
             std::string());
    std::vector<std::string> basis_names = opt.basis_names;
    if (!opt.basis_count) {
        if (auto b = common.cfg.get<std::vector<std::string>>("exponents", "basis")) basis_names = *b;
    }
    const std::string target_text =
        pick(opt.target_count, opt.target, common.cfg.get<std::string>("exponents", "target"),
             std::string("-2/3,0,0"));

    const std::vector<Quantity> basis = resolve_basis(basis_names);
    Dim target;
    std::optional<Rational> alpha4;
    try {
        target = parse_target(target_text);
        if (!alpha4_text.empty()) alpha4 = Rational::parse(alpha4_text);
    } catch (const Error& e) {
        throw ConfigError(e.what());
    }

    const ExponentSolution sol = solve_exponent_system(basis, target);

    // Every reported member must reproduce the target exactly.
    bool family_ok = true;
    for (const Rational& probe : {Rational(0), Rational(1), Rational(-1, 2)}) {
        const std::vector<Rational> lambdas(sol.free_directions.size(), probe);
        family_ok = family_ok && combined_dimension(basis, sol.at(lambdas)) == target;
    }

    std::optional<Rational> alpha0;
    try {
        alpha0 = control_parameter_exponent(target);
    } catch (const NonLengthVariable&) {
    }

    std::vector<Rational> at_value;
    if (alpha4) {
        if (sol.free_directions.size() != 1)
            throw ConfigError("--alpha4 needs exactly one free direction, system has " +
                              std::to_string(sol.free_directions.size()));
        at_value = sol.at(std::vector<Rational>{*alpha4});
    }

    if (common.json()) {
        ordered_json j = common.report_header("exponents");
        ordered_json inputs;
        inputs["basis"] = sol.basis_names;
        inputs["target"] = target.str();
        if (alpha4) inputs["alpha4"] = alpha4->str();
        j["inputs"] = inputs;
        ordered_json family;
        family["particular"] = ordered_json::array();
        for (const auto& r : sol.particular) family["particular"].push_back(r.str());
        family["free_directions"] = ordered_json::array();
        for (const auto& d : sol.free_directions) {
            ordered_json dir;
            dir["name"] = d.name;
            dir["coeffs"] = ordered_json::array();
            for (const auto& r : d.coeffs) dir["coeffs"].push_back(r.str());
            family["free_directions"].push_back(dir);
        }
        j["family"] = family;
        if (alpha4) {
            ordered_json vals = ordered_json::array();
            for (const auto& r : at_value) vals.push_back(r.str());
            j["at_alpha4"] = vals;
        }
        if (alpha0) j["alpha0"] = alpha0->str();
        j["checks"] = {{{"name", "family reproduces target exactly"}, {"pass", family_ok}}};
        std::cout << j.dump(2) << "\n";
    } else {
        common.print_text_header(std::cout, "exponents");
        std::cout << "basis:";
        for (const auto& n : sol.basis_names) std::cout << " " << n;
        std::cout << "\ntarget: " << target.str() << "\n";
        for (std::size_t jcol = 0; jcol < sol.basis_names.size(); ++jcol)
            std::cout << family_line(sol, jcol) << "\n";
        if (sol.free_directions.empty()) std::cout << "solution is unique\n";
        if (alpha4) {
            std::cout << "with alpha[" << sol.free_directions[0].name << "] = " << alpha4->str()
                      << ":\n";
            for (std::size_t jcol = 0; jcol < at_value.size(); ++jcol)
                std::cout << "alpha" << (jcol + 1) << " = " << at_value[jcol].str() << "\n";
        }
        if (alpha0) std::cout << "alpha0 = " << alpha0->str() << "\n";
        std::cout << "family reproduces target exactly: " << (family_ok ? "PASS" : "FAIL") << "\n";
    }
    return family_ok ? 0 : 2;
}

// ---------------------------------------------------------------------------
// beta

int cmd_beta(const CommonOptions& common, double e_flag, std::size_t e_count) {
    const double E = pick(e_count, e_flag, common.cfg.get<double>("beta", "E"), 1.0);
    if (!(std::isfinite(E) && E > 0.0)) {
        std::cerr << "error: E must be positive and finite\n";
        return 1;
    }
    const double beta = beta_kg(E, common.params);
    const double residual = bracket_residual(beta, E, common.params) / (E * E);
    const bool pass = std::abs(residual) <= 1e-12;

    if (common.json()) {
        ordered_json j = common.report_header("beta");
        j["inputs"] = {{"E", E}};
        j["beta_kg"] = beta;
        j["bracket_residual_over_E2"] = residual;
        j["checks"] = {{{"name", "bracket residual <= 1e-12"}, {"pass", pass}}};
        std::cout << j.dump(2) << "\n";
    } else {
        common.print_text_header(std::cout, "beta");
        std::cout << "E: " << fmt(E) << "\n";
        std::cout << "beta_kg: " << fmt(beta) << "\n";
        std::cout << "bracket_residual/E^2: " << fmt(residual) << "\n";
        std::cout << "bracket residual <= 1e-12: " << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? 0 : 2;
}

// ---------------------------------------------------------------------------
// potential

struct PotentialOptions {
    double beta = 1.0, B = 1.0, E = 1.0, r_min = 0.1, r_max = 10.0;
    int count = 25;
    std::string spacing = "log";
    std::string out;
    std::size_t beta_count = 0, b_count = 0, e_count = 0, rmin_count = 0, rmax_count = 0,
                count_count = 0, spacing_count = 0;
};

int cmd_potential(const CommonOptions& common, const PotentialOptions& opt) {
    const auto& cfg = common.cfg;
    const double beta = pick(opt.beta_count, opt.beta, cfg.get<double>("potential", "beta"), 1.0);
    const double B = pick(opt.b_count, opt.B, cfg.get<double>("potential", "B"), 1.0);
    const double E = pick(opt.e_count, opt.E, cfg.get<double>("potential", "E"),
                          common.params.rest_energy());
    const double r_min = pick(opt.rmin_count, opt.r_min, cfg.get<double>("potential", "r_min"), 0.1);
    const double r_max = pick(opt.rmax_count, opt.r_max, cfg.get<double>("potential", "r_max"), 10.0);
    const int count = pick(opt.count_count, opt.count, cfg.get<int>("potential", "count"), 25);
    const std::string spacing =
        pick(opt.spacing_count, opt.spacing, cfg.get<std::string>("potential", "spacing"),
             std::string("log"));

    const RelativisticPotentialSpec spec(beta, B, E, common.params);
    const double mc2 = common.params.rest_energy();
    const double omega = E / common.params.hbar();

    const std::vector<std::string> header = {"r",        "V_specialized", "V_general",
                                             "V_revised", "gap_general",  "gap_revised"};
    std::vector<std::vector<std::string>> rows;
    double max_gap_general = 0.0;
    double max_gap_revised = 0.0;
    for (double r : sweep_points(r_min, r_max, count, spacing)) {
        const double v_spec = potential_specialized(r, spec);
        const double v_gen = potential_general(r, 2.0 / 3.0, spec, omega);
        const double v_rev = revised_potential(r, spec);
        const double term_scale = std::abs(beta) * E * E / mc2 + radial_term(r, spec) + mc2;
        const double gap_general = std::abs(v_gen - v_spec) / term_scale;
        const double composed = beta_kg(E, common.params) * E * E / mc2 + radial_term(r, spec);
        const double gap_revised = std::abs(v_rev - composed) / (E * E / mc2 + mc2 + radial_term(r, spec));
        max_gap_general = std::max(max_gap_general, gap_general);
        max_gap_revised = std::max(max_gap_revised, gap_revised);
        rows.push_back({fmt(r), fmt(v_spec), fmt(v_gen), fmt(v_rev), fmt(gap_general),
                        fmt(gap_revised)});
    }
    const bool pass = max_gap_general <= 1e-13 && max_gap_revised <= 1e-13;

    if (common.json()) {
        ordered_json j = common.report_header("potential");
        j["inputs"] = {{"beta", beta}, {"B", B},         {"E", E},
                       {"r_min", r_min}, {"r_max", r_max}, {"count", count},
                       {"spacing", spacing}};
        j["columns"] = header;
        ordered_json data = ordered_json::array();
        for (const auto& row : rows) data.push_back(row);
        j["rows"] = data;
        j["checks"] = {{{"name", "general form matches specialized at alpha4=2/3 (<= 1e-13)"},
                        {"pass", max_gap_general <= 1e-13}},
                       {{"name", "revised form matches beta_kg composition (<= 1e-13)"},
                        {"pass", max_gap_revised <= 1e-13}}};
        std::cout << j.dump(2) << "\n";
    } else {
        if (!emit_csv(opt.out, "potential", header, rows)) return 1;
        if (!opt.out.empty()) {
            common.print_text_header(std::cout, "potential");
            std::cout << "rows: " << rows.size() << " -> " << opt.out << "\n";
            std::cout << "max gap to specialized form: " << fmt(max_gap_general)
                      << (max_gap_general <= 1e-13 ? " PASS" : " FAIL") << "\n";
            std::cout << "max gap to beta_kg composition: " << fmt(max_gap_revised)
                      << (max_gap_revised <= 1e-13 ? " PASS" : " FAIL") << "\n";
        }
    }
    return pass ? 0 : 2;
}

// ---------------------------------------------------------------------------
// clifford

int cmd_clifford(const CommonOptions& common, int draws_flag, std::size_t draws_count) {
    const int draws =
        pick(draws_count, draws_flag, common.cfg.get<int>("clifford", "draws"), 1000);
    if (draws < 1) throw ConfigError("clifford draws must be >= 1");

    const CliffordReport rep = check_clifford(dirac_set());
    const SpinAlgebraReport spin = spin_algebra_check(common.params);

    SplitMix64 rng(common.seed);
    double max_square_dev = 0.0;
    for (int it = 0; it < draws; ++it) {
        const std::array<double, 3> k = {rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0),
                                         rng.uniform(-5.0, 5.0)};
        max_square_dev = std::max(max_square_dev, hamiltonian_square_check(k, common.params));
    }

    const bool canonical_pass = rep.passed() && spin.sigma_convention_closes();
    const bool square_pass = max_square_dev <= 1e-12;

    if (common.json()) {
        ordered_json j = common.report_header("clifford");
        j["inputs"] = {{"draws", draws}};
        j["deviations"] = {{"pair_condition", rep.pair_condition},
                           {"s0_condition", rep.s0_condition},
                           {"square_identity", rep.square_identity},
                           {"hermiticity", rep.hermiticity}};
        j["hamiltonian_square_max_relative_deviation"] = max_square_dev;
        j["spin_algebra"] = {
            {"sigma_convention_defect", spin.sigma_convention_defect},
            {"s_convention_defect", spin.s_convention_defect},
            {"s_convention_commutator_12", matrix_json(spin.s_convention_commutator_12)},
            {"s_convention_rhs_12", matrix_json(spin.s_convention_rhs_12)},
        };
        j["checks"] = {
            {{"name", "anticommutation conditions exact"}, {"pass", rep.passed()}},
            {{"name", "hamiltonian square identity (<= 1e-12 relative)"}, {"pass", square_pass}},
            {{"name", "su(2) closes for J = (hbar/2) Sigma"},
             {"pass", spin.sigma_convention_closes()}},
            {{"name", "su(2) fails for J = (hbar/2) S (expected discrepancy)"},
             {"pass", spin.s_convention_defect > 0.0}},
        };
        std::cout << j.dump(2) << "\n";
    } else {
        common.print_text_header(std::cout, "clifford");
        std::cout << "pair condition max deviation: " << fmt(rep.pair_condition) << "\n";
        std::cout << "s0 condition max deviation: " << fmt(rep.s0_condition) << "\n";
        std::cout << "square identity max deviation: " << fmt(rep.square_identity) << "\n";
        std::cout << "hermiticity max deviation: " << fmt(rep.hermiticity) << "\n";
        std::cout << "anticommutation conditions exact: " << (rep.passed() ? "PASS" : "FAIL")
                  << "\n";
        std::cout << "hamiltonian square identity over " << draws
                  << " draws, max relative deviation: " << fmt(max_square_dev)
                  << (square_pass ? " PASS" : " FAIL") << "\n";
        std::cout << "su(2) with J = (hbar/2) Sigma, defect: "
                  << fmt(spin.sigma_convention_defect)
                  << (spin.sigma_convention_closes() ? " PASS" : " FAIL") << "\n";
        std::cout << "su(2) with J = (hbar/2) S, defect: " << fmt(spin.s_convention_defect)
                  << " (relation does not close in this convention)\n";
        std::cout << "[J1, J2] with J = (hbar/2) S:\n";
        print_matrix(std::cout, spin.s_convention_commutator_12, "  ");
        std::cout << "i hbar J3 in that convention:\n";
        print_matrix(std::cout, spin.s_convention_rhs_12, "  ");
    }
    return (canonical_pass && square_pass) ? 0 : 2;
}

// ---------------------------------------------------------------------------
// dispersion

struct DispersionOptions {
    double k_min = 0.0, k_max = 4.0;
    int count = 17;
    std::string spacing = "linear";
    std::string out;
    std::size_t kmin_count = 0, kmax_count = 0, count_count = 0, spacing_count = 0;
};

int cmd_dispersion(const CommonOptions& common, const DispersionOptions& opt) {
    const auto& cfg = common.cfg;
    const double k_scale = common.params.compton_wavenumber();
    const double k_min = pick(opt.kmin_count, opt.k_min, cfg.get<double>("dispersion", "k_min"), 0.0);
    const double k_max =
        pick(opt.kmax_count, opt.k_max, cfg.get<double>("dispersion", "k_max"), 4.0 * k_scale);
    const int count = pick(opt.count_count, opt.count, cfg.get<int>("dispersion", "count"), 17);
    const std::string spacing =
        pick(opt.spacing_count, opt.spacing, cfg.get<std::string>("dispersion", "spacing"),
             std::string("linear"));

    const std::vector<std::string> header = {"k",       "E_kg",    "E_selfconsistent",
                                             "rel_gap", "dirac_e1", "dirac_e2",
                                             "dirac_e3", "dirac_e4", "nonrel_gap_ratio"};
    std::vector<std::vector<std::string>> rows;
    double max_gap = 0.0;
    for (double k : sweep_points(k_min, k_max, count, spacing)) {
        const double e_kg = kg_energy(k, common.params);
        const ModeEnergy mode = self_consistent_energy(k, common.params);
        const double gap = std::abs(mode.E - e_kg) / e_kg;
        max_gap = std::max(max_gap, gap);
        const auto dirac = dirac_spectrum({k, 0.0, 0.0}, common.params);
        rows.push_back({fmt(k), fmt(e_kg), fmt(mode.E), fmt(gap), fmt(dirac[0]), fmt(dirac[1]),
                        fmt(dirac[2]), fmt(dirac[3]), fmt(nonrel_limit_gap(k, common.params))});
    }
    const bool pass = max_gap <= 1e-10;

    if (common.json()) {
        ordered_json j = common.report_header("dispersion");
        j["inputs"] = {{"k_min", k_min}, {"k_max", k_max}, {"count", count}, {"spacing", spacing}};
        j["columns"] = header;
        ordered_json data = ordered_json::array();
        for (const auto& row : rows) data.push_back(row);
        j["rows"] = data;
        j["checks"] = {{{"name", "self-consistent energy matches closed form (<= 1e-10)"},
                        {"pass", pass}}};
        std::cout << j.dump(2) << "\n";
    } else {
        if (!emit_csv(opt.out, "dispersion", header, rows)) return 1;
        if (!opt.out.empty()) {
            common.print_text_header(std::cout, "dispersion");
            std::cout << "rows: " << rows.size() << " -> " << opt.out << "\n";
            std::cout << "max relative gap: " << fmt(max_gap) << (pass ? " PASS" : " FAIL") << "\n";
        }
    }
    return pass ? 0 : 2;
}

// ---------------------------------------------------------------------------
// evolve

struct EvolveOptions {
    std::string kind = "relativistic_free";
    double dt = 0.05;
    int steps = 4000, sample_every = 40;
    double velocity_tolerance = 0.01;
    std::string traj = "trajectory.csv";
    std::string potential = "none";
    double constant_value = 0.0, B = 0.0, singular_cap = 1e6;
    std::size_t n_points = 4096;
    double dx = 0.25, x0 = -512.0;
    double x_center = -128.0, k0 = 1.0, sigma = 16.0;
    std::size_t kind_count = 0, dt_count = 0, steps_count = 0, sample_count = 0, vtol_count = 0,
                traj_count = 0, potential_count = 0, const_count = 0, b_count = 0, cap_count = 0,
                n_count = 0, dx_count = 0, x0_count = 0, xc_count = 0, k0_count = 0, sigma_count = 0;
};

int cmd_evolve(const CommonOptions& common, const EvolveOptions& opt) {
    const auto& cfg = common.cfg;
    const std::string kind_text =
        pick(opt.kind_count, opt.kind, cfg.get<std::string>("evolve", "kind"),
             std::string("relativistic_free"));
    const double dt = pick(opt.dt_count, opt.dt, cfg.get<double>("evolve", "dt"), 0.05);
    const int steps = pick(opt.steps_count, opt.steps, cfg.get<int>("evolve", "steps"), 4000);
    const int sample_every =
        pick(opt.sample_count, opt.sample_every, cfg.get<int>("evolve", "sample_every"), 40);
    const double vtol = pick(opt.vtol_count, opt.velocity_tolerance,
                             cfg.get<double>("evolve", "velocity_tolerance"), 0.01);
    const std::string traj_path =
        pick(opt.traj_count, opt.traj, cfg.get<std::string>("evolve", "trajectory_file"),
             std::string("trajectory.csv"));
    const std::string pot_mode =
        pick(opt.potential_count, opt.potential, cfg.get<std::string>("evolve", "potential"),
             std::string("none"));
    const double const_value = pick(opt.const_count, opt.constant_value,
                                    cfg.get<double>("evolve", "constant_value"), 0.0);
    const double B = pick(opt.b_count, opt.B, cfg.get<double>("evolve", "B"), 0.0);
    const double cap =
        pick(opt.cap_count, opt.singular_cap, cfg.get<double>("evolve", "singular_cap"), 1e6);

    const auto n_points = pick(opt.n_count, opt.n_points,
                               cfg.get<std::size_t>("grid", "n_points"), std::size_t{4096});
    const double dx = pick(opt.dx_count, opt.dx, cfg.get<double>("grid", "dx"), 0.25);
    const double x0 = pick(opt.x0_count, opt.x0, cfg.get<double>("grid", "x0"), -512.0);
    const double x_center =
        pick(opt.xc_count, opt.x_center, cfg.get<double>("packet", "x_center"), -128.0);
    const double k0 = pick(opt.k0_count, opt.k0, cfg.get<double>("packet", "k0"), 1.0);
    const double sigma = pick(opt.sigma_count, opt.sigma, cfg.get<double>("packet", "sigma"), 16.0);

    PropagatorKind kind;
    if (kind_text == "schrodinger")
        kind = PropagatorKind::schrodinger;
    else if (kind_text == "relativistic_free")
        kind = PropagatorKind::relativistic_free;
    else
        throw ConfigError("evolve.kind must be 'schrodinger' or 'relativistic_free', got '" +
                          kind_text + "'");
    if (steps < 1) throw ConfigError("evolve.steps must be >= 1");
    if (sample_every < 1) throw ConfigError("evolve.sample_every must be >= 1");
    if (steps / sample_every < 10)
        throw ConfigError("evolve needs steps/sample_every >= 10 for the velocity fit");
    if (pot_mode != "none" && kind == PropagatorKind::relativistic_free)
        throw ConfigError("relativistic_free admits no potential term");

    const Grid1D grid(n_points, dx, x0);
    WaveState state = gaussian_packet(grid, x_center, k0, sigma);

    PotentialInput potential = std::monostate{};
    if (pot_mode == "constant") {
        potential = std::vector<double>(grid.n_points, const_value);
    } else if (pot_mode == "revised") {
        // E frozen per run from the packet's measured carrier.
        const double carrier = observables(state).mean_k;
        const double frozen_e = kg_energy(carrier, common.params);
        potential = RelativisticPotentialSpec(0.0, B, frozen_e, common.params);
    } else if (pot_mode != "none") {
        throw ConfigError("evolve.potential must be 'none', 'constant' or 'revised', got '" +
                          pot_mode + "'");
    }

    const PropagatorSpec spec{kind, potential, dt, common.params, {}, cap};
    const Propagator prop(grid, spec);

    const std::vector<std::string> header = {"step", "time", "norm", "mean_x", "mean_k",
                                             "variance_x"};
    std::vector<std::vector<std::string>> rows;
    std::vector<TrajectoryPoint> traj;
    double max_norm_drift = 0.0;

    auto record = [&](int step_index) {
        const Observables obs = observables(state);
        rows.push_back({std::to_string(step_index), fmt(state.time), fmt(obs.norm), fmt(obs.mean_x),
                        fmt(obs.mean_k), fmt(obs.variance_x)});
        traj.push_back({state.time, obs.mean_x});
        max_norm_drift = std::max(max_norm_drift, std::abs(obs.norm - 1.0));
    };

    record(0);
    for (int s = 1; s <= steps; ++s) {
        state = prop.step(std::move(state));
        if (s % sample_every == 0 || s == steps) record(s);
    }

    {
        std::ofstream out(traj_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot open trajectory file: " << traj_path << "\n";
            return 1;
        }
        write_csv(out, "evolve", header, rows);
    }

    const double measured = group_velocity_estimate(traj, grid.length());
    const double target = (kind == PropagatorKind::schrodinger)
                              ? schrodinger_group_velocity(k0, common.params)
                              : relativistic_group_velocity(k0, common.params);
    const double v_gap = std::abs(measured - target) / std::abs(target);
    const bool velocity_pass = v_gap <= vtol;
    const bool norm_pass = max_norm_drift <= 1e-10;

    if (common.json()) {
        ordered_json j = common.report_header("evolve");
        j["inputs"] = {{"kind", kind_text},   {"dt", dt},
                       {"steps", steps},      {"sample_every", sample_every},
                       {"n_points", n_points}, {"dx", dx},
                       {"x0", x0},            {"x_center", x_center},
                       {"k0", k0},            {"sigma", sigma},
                       {"potential", pot_mode}};
        j["trajectory_file"] = traj_path;
        j["phase_wrap_warning"] = prop.phase_wrap_warning();
        j["measured_group_velocity"] = measured;
        j["analytic_group_velocity"] = target;
        j["relative_gap"] = v_gap;
        j["max_norm_drift"] = max_norm_drift;
        j["checks"] = {
            {{"name", "group velocity within tolerance"}, {"pass", velocity_pass}},
            {{"name", "norm drift <= 1e-10"}, {"pass", norm_pass}},
        };
        std::cout << j.dump(2) << "\n";
    } else {
        common.print_text_header(std::cout, "evolve");
        std::cout << "kind: " << kind_text << ", potential: " << pot_mode << "\n";
        std::cout << "trajectory: " << rows.size() << " samples -> " << traj_path << "\n";
        if (prop.phase_wrap_warning())
            std::cout << "warning: per-step phase exceeds pi/4; reduce dt for readable phases\n";
        std::cout << "measured group velocity: " << fmt(measured) << "\n";
        std::cout << "analytic group velocity: " << fmt(target) << "\n";
        std::cout << "relative gap: " << fmt(v_gap) << " (tolerance " << fmt(vtol) << "): "
                  << (velocity_pass ? "PASS" : "FAIL") << "\n";
        std::cout << "max norm drift: " << fmt(max_norm_drift)
                  << " (<= 1e-10): " << (norm_pass ? "PASS" : "FAIL") << "\n";
    }
    return 0;  // physics misses are FAIL lines, not process failures
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"relativistic dispersion and propagation toolkit"};
    app.require_subcommand(1);
    // global options may follow the subcommand name
    app.fallthrough();

    CommonOptions common;
    app.add_option("--config", common.config_path, "JSON config document");
    auto* units_opt = app.add_option("--units", common.units, "natural | si");
    auto* mass_opt = app.add_option("--mass", common.mass, "mass (si units)");
    auto* c_opt = app.add_option("--c", common.c, "speed of light (si units)");
    auto* hbar_opt = app.add_option("--hbar", common.hbar, "reduced action (si units)");
    auto* seed_opt = app.add_option("--seed", common.seed, "seed for randomized sweeps");
    auto* output_opt = app.add_option("--output", common.output, "csv | json");

    ExponentsOptions exp_opt;
    auto* exponents = app.add_subcommand("exponents", "solve the dimensional exponent system");
    auto* alpha4_opt = exponents->add_option("--alpha4", exp_opt.alpha4, "free parameter value");
    auto* basis_opt = exponents->add_option("--basis", exp_opt.basis_names, "basis quantity names");
    auto* target_opt =
        exponents->add_option("--target", exp_opt.target, "'L,T,M' rationals or 'dimensionless'");

    double beta_e = 1.0;
    auto* beta_cmd = app.add_subcommand("beta", "beta closing the bracket condition");
    auto* beta_e_opt = beta_cmd->add_option("--E", beta_e, "plane-wave energy");

    PotentialOptions pot_opt;
    auto* potential = app.add_subcommand("potential", "radial potential forms and cross-checks");
    auto* p_beta = potential->add_option("--beta", pot_opt.beta, "uniform-term constant");
    auto* p_b = potential->add_option("--B", pot_opt.B, "singular-term constant");
    auto* p_e = potential->add_option("--E", pot_opt.E, "plane-wave energy");
    auto* p_rmin = potential->add_option("--r-min", pot_opt.r_min, "sweep start");
    auto* p_rmax = potential->add_option("--r-max", pot_opt.r_max, "sweep end");
    auto* p_count = potential->add_option("--count", pot_opt.count, "sweep points");
    auto* p_spacing = potential->add_option("--spacing", pot_opt.spacing, "linear | log");
    potential->add_option("--out", pot_opt.out, "write CSV here instead of stdout");

    int clifford_draws = 1000;
    auto* clifford = app.add_subcommand("clifford", "algebraic condition checks");
    auto* draws_opt =
        clifford->add_option("--draws", clifford_draws, "random wavevectors for the square check");

    DispersionOptions disp_opt;
    auto* dispersion = app.add_subcommand("dispersion", "energy-wavenumber sweep");
    auto* d_kmin = dispersion->add_option("--k-min", disp_opt.k_min, "sweep start");
    auto* d_kmax = dispersion->add_option("--k-max", disp_opt.k_max, "sweep end");
    auto* d_count = dispersion->add_option("--count", disp_opt.count, "sweep points");
    auto* d_spacing = dispersion->add_option("--spacing", disp_opt.spacing, "linear | log");
    dispersion->add_option("--out", disp_opt.out, "write CSV here instead of stdout");

    EvolveOptions evo_opt;
    auto* evolve = app.add_subcommand("evolve", "wavepacket propagation");
    auto* e_kind = evolve->add_option("--kind", evo_opt.kind, "schrodinger | relativistic_free");
    auto* e_dt = evolve->add_option("--dt", evo_opt.dt, "time step");
    auto* e_steps = evolve->add_option("--steps", evo_opt.steps, "step count");
    auto* e_sample = evolve->add_option("--sample-every", evo_opt.sample_every, "sampling stride");
    auto* e_vtol = evolve->add_option("--velocity-tolerance", evo_opt.velocity_tolerance,
                                      "pass/fail window for the velocity check");
    auto* e_traj = evolve->add_option("--traj", evo_opt.traj, "trajectory CSV path");
    auto* e_pot = evolve->add_option("--potential", evo_opt.potential, "none | constant | revised");
    auto* e_const = evolve->add_option("--constant-value", evo_opt.constant_value,
                                       "value for the constant potential");
    auto* e_b = evolve->add_option("--B", evo_opt.B, "singular-term constant (revised potential)");
    auto* e_cap = evolve->add_option("--singular-cap", evo_opt.singular_cap,
                                     "|V| cap in units of mc^2");
    auto* e_n = evolve->add_option("--n-points", evo_opt.n_points, "grid nodes (power of two)");
    auto* e_dx = evolve->add_option("--dx", evo_opt.dx, "grid spacing");
    auto* e_x0 = evolve->add_option("--x0", evo_opt.x0, "grid left edge");
    auto* e_xc = evolve->add_option("--x-center", evo_opt.x_center, "packet center");
    auto* e_k0 = evolve->add_option("--k0", evo_opt.k0, "packet carrier wavenumber");
    auto* e_sigma = evolve->add_option("--sigma", evo_opt.sigma, "packet width");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    common.units_count = units_opt->count();
    common.mass_count = mass_opt->count();
    common.c_count = c_opt->count();
    common.hbar_count = hbar_opt->count();
    common.seed_count = seed_opt->count();
    common.output_count = output_opt->count();

    try {
        common.resolve();

        if (exponents->parsed()) {
            exp_opt.alpha4_count = alpha4_opt->count();
            exp_opt.basis_count = basis_opt->count();
            exp_opt.target_count = target_opt->count();
            return cmd_exponents(common, exp_opt);
        }
        if (beta_cmd->parsed()) return cmd_beta(common, beta_e, beta_e_opt->count());
        if (potential->parsed()) {
            pot_opt.beta_count = p_beta->count();
            pot_opt.b_count = p_b->count();
            pot_opt.e_count = p_e->count();
            pot_opt.rmin_count = p_rmin->count();
            pot_opt.rmax_count = p_rmax->count();
            pot_opt.count_count = p_count->count();
            pot_opt.spacing_count = p_spacing->count();
            return cmd_potential(common, pot_opt);
        }
        if (clifford->parsed()) return cmd_clifford(common, clifford_draws, draws_opt->count());
        if (dispersion->parsed()) {
            disp_opt.kmin_count = d_kmin->count();
            disp_opt.kmax_count = d_kmax->count();
            disp_opt.count_count = d_count->count();
            disp_opt.spacing_count = d_spacing->count();
            return cmd_dispersion(common, disp_opt);
        }
        if (evolve->parsed()) {
            evo_opt.kind_count = e_kind->count();
            evo_opt.dt_count = e_dt->count();
            evo_opt.steps_count = e_steps->count();
            evo_opt.sample_count = e_sample->count();
            evo_opt.vtol_count = e_vtol->count();
            evo_opt.traj_count = e_traj->count();
            evo_opt.potential_count = e_pot->count();
            evo_opt.const_count = e_const->count();
            evo_opt.b_count = e_b->count();
            evo_opt.cap_count = e_cap->count();
            evo_opt.n_count = e_n->count();
            evo_opt.dx_count = e_dx->count();
            evo_opt.x0_count = e_x0->count();
            evo_opt.xc_count = e_xc->count();
            evo_opt.k0_count = e_k0->count();
            evo_opt.sigma_count = e_sigma->count();
            return cmd_evolve(common, evo_opt);
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}

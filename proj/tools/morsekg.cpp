// morsekg command-line front end: closed-form Klein-Gordon/Morse spectra,
// reference-table reproduction, mass-dependence sweeps, series
// wavefunctions, and the finite-difference verification report.

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "morsekg/constants.hpp"
#include "morsekg/errors.hpp"
#include "morsekg/molecules.hpp"
#include "morsekg/oracle.hpp"
#include "morsekg/potential.hpp"
#include "morsekg/spectrum.hpp"
#include "morsekg/wavefunction.hpp"

namespace {

using json = nlohmann::ordered_json;
using morsekg::Branch;
using morsekg::cplx;

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_domain = 2;
constexpr int exit_mismatch = 3;

// Published reference bound-state energies (MeV) for the bundled
// molecules, used for the deviation column of `table1`.
constexpr int table1_n[8] = {0, 2, 4, 10, 20, 30, 40, 50};
constexpr double table1_ref[8][3] = {
    {663.819, 1159.420, 1291.130}, {663.827, 1159.430, 1291.140},
    {663.835, 1159.440, 1291.150}, {663.859, 1159.470, 1291.190},
    {663.899, 1159.520, 1291.260}, {663.939, 1159.570, 1291.330},
    {663.979, 1159.620, 1291.390}, {664.020, 1159.670, 1291.460}};
constexpr const char* table1_names[3] = {"H2", "LiH", "HCl"};

std::string fmt6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

struct OutputSink {
    std::string format = "csv";  // csv | json
    std::string path;            // empty = stdout

    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
        out << text;
    }
};

std::string csv_table(const std::vector<std::string>& comments, const std::string& header,
                      const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream os;
    for (const auto& c : comments) os << "# " << c << "\n";
    os << header << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
        os << "\n";
    }
    return os.str();
}

struct LevelRange {
    int lo = 0;
    int hi = 0;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

LevelRange parse_range(const std::string& text) {
    LevelRange r;
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            r.lo = r.hi = std::stoi(text);
        } else {
            r.lo = std::stoi(text.substr(0, dots));
            r.hi = std::stoi(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw UsageError("--n: expected N or A..B, got '" + text + "'");
    }
    if (r.lo < 0 || r.hi < r.lo)
        throw UsageError("--n: range must be non-empty and non-negative");
    return r;
}

morsekg::MoleculeRegistry load_registry(const std::string& override_path) {
    const std::string path =
        override_path.empty() ? morsekg::default_registry_path() : override_path;
    return morsekg::MoleculeRegistry::from_file(path);
}

// ---------------------------------------------------------------- levels

struct LevelsConfig {
    std::string molecule;
    double v1 = 1.0, v2 = 2.0, beta = 1.0, m0 = 1.0, m1 = 0.0, q_inv = 1.0;
    bool complex_mode = false;
    double u1 = 1.0, u2 = 0.0, u3 = 0.0, q_prime_inv = 1.0;
    std::string n_range = "0..4";
    bool constant_mass = false;
    bool special_case = false;
    double m1_over_m0 = 0.0;
};

json level_to_json(const morsekg::QuantizedLevel& plus,
                   const morsekg::QuantizedLevel& minus) {
    json j;
    j["n"] = plus.n;
    j["source"] = morsekg::to_string(plus.source);
    j["e_plus_re"] = plus.energy.real();
    j["e_plus_im"] = plus.energy.imag();
    j["e_minus_re"] = minus.energy.real();
    j["e_minus_im"] = minus.energy.imag();
    j["L_re"] = plus.L.real();
    j["L_im"] = plus.L.imag();
    return j;
}

int run_levels(const LevelsConfig& cfg, const std::string& registry_path,
               const OutputSink& sink) {
    const LevelRange range = parse_range(cfg.n_range);

    std::vector<morsekg::QuantizedLevel> plus, minus;
    for (int n = range.lo; n <= range.hi; ++n) {
        if (cfg.complex_mode) {
            if (cfg.m1 == 0.0) {
                plus.push_back(morsekg::complex_constant_mass_energy(
                    n, cfg.u1, cfg.u2, cfg.u3, cfg.m0, Branch::particle, cfg.q_prime_inv));
                minus.push_back(morsekg::complex_constant_mass_energy(
                    n, cfg.u1, cfg.u2, cfg.u3, cfg.m0, Branch::antiparticle,
                    cfg.q_prime_inv));
            } else {
                const morsekg::MassModel mass(cfg.m0, cfg.m1);
                plus.push_back(morsekg::complex_energy(n, cfg.u1, cfg.u2, cfg.u3, mass,
                                                       Branch::particle, cfg.q_prime_inv));
                minus.push_back(morsekg::complex_energy(n, cfg.u1, cfg.u2, cfg.u3, mass,
                                                        Branch::antiparticle,
                                                        cfg.q_prime_inv));
            }
        } else {
            morsekg::PotentialSpec pot(cfg.v1, cfg.v2, cfg.beta);
            double m0 = cfg.m0, m1 = cfg.m1, q_inv = cfg.q_inv;
            if (!cfg.molecule.empty()) {
                const auto setup =
                    morsekg::molecular_setup(load_registry(registry_path).lookup(cfg.molecule));
                pot = setup.pot;
                m0 = setup.m0c2;
                q_inv = setup.q_inv;
                m1 = cfg.m1_over_m0 * m0;
            }
            const morsekg::MassModel mass(m0, m1);
            if (cfg.special_case) {
                plus.push_back(morsekg::special_case_energy(n, pot, mass, q_inv,
                                                            Branch::particle));
                minus.push_back(morsekg::special_case_energy(n, pot, mass, q_inv,
                                                             Branch::antiparticle));
            } else if (cfg.constant_mass || m1 == 0.0) {
                plus.push_back(
                    morsekg::constant_mass_energy(n, pot, m0, q_inv, Branch::particle));
                minus.push_back(
                    morsekg::constant_mass_energy(n, pot, m0, q_inv, Branch::antiparticle));
            } else {
                plus.push_back(morsekg::pdm_energy(n, pot, mass, q_inv, Branch::particle));
                minus.push_back(
                    morsekg::pdm_energy(n, pot, mass, q_inv, Branch::antiparticle));
            }
        }
    }

    if (sink.format == "json") {
        json doc;
        doc["command"] = "levels";
        doc["rows"] = json::array();
        for (std::size_t i = 0; i < plus.size(); ++i)
            doc["rows"].push_back(level_to_json(plus[i], minus[i]));
        sink.write(doc.dump(2) + "\n");
    } else {
        std::vector<std::vector<std::string>> rows;
        for (std::size_t i = 0; i < plus.size(); ++i)
            rows.push_back({std::to_string(plus[i].n), morsekg::to_string(plus[i].source),
                            fmt6(plus[i].energy.real()), fmt6(plus[i].energy.imag()),
                            fmt6(minus[i].energy.real()), fmt6(minus[i].energy.imag()),
                            fmt6(plus[i].L.real()), fmt6(plus[i].L.imag())});
        sink.write(csv_table({}, "n,source,e_plus_re,e_plus_im,e_minus_re,e_minus_im,L_re,L_im",
                             rows));
    }
    return exit_ok;
}

// ---------------------------------------------------------------- table1

int run_table1(const std::string& registry_path, const OutputSink& sink) {
    const auto registry = load_registry(registry_path);
    std::vector<std::vector<std::string>> rows;
    json jrows = json::array();
    for (int i = 0; i < 8; ++i) {
        const int n = table1_n[i];
        std::vector<std::string> row{std::to_string(n)};
        json jrow;
        jrow["n"] = n;
        for (int m = 0; m < 3; ++m) {
            const auto setup = morsekg::molecular_setup(registry.lookup(table1_names[m]));
            const double e = morsekg::constant_mass_energy(n, setup.pot, setup.m0c2,
                                                           setup.q_inv, Branch::particle)
                                 .energy.real();
            const double dev = e - table1_ref[i][m];
            row.push_back(fmt6(e));
            row.push_back(fmt6(dev));
            jrow[std::string(table1_names[m]) + "_mev"] = e;
            jrow[std::string(table1_names[m]) + "_dev"] = dev;
        }
        rows.push_back(row);
        jrows.push_back(jrow);
    }
    if (sink.format == "json") {
        json doc;
        doc["command"] = "table1";
        doc["rows"] = jrows;
        sink.write(doc.dump(2) + "\n");
    } else {
        sink.write(csv_table({"bound-state energies (MeV), +E branch, against published values"},
                             "n,H2_mev,H2_dev,LiH_mev,LiH_dev,HCl_mev,HCl_dev", rows));
    }
    return exit_ok;
}

// ---------------------------------------------------------------- sweep

struct SweepConfig {
    std::string molecule = "H2";
    int n = 0;
    // 301 log-spaced points keep adjacent-point relative changes below 1%
    // at the steep upper end of the 1/M range
    int points = 301;
    double inv_m_min = 1e-6;
    double inv_m_max = 1e-4;
};

int run_sweep(const SweepConfig& cfg, const std::string& registry_path,
              const OutputSink& sink) {
    if (cfg.points < 2) throw std::invalid_argument("sweep: need at least 2 points");
    if (!(cfg.inv_m_min > 0.0) || !(cfg.inv_m_max > cfg.inv_m_min))
        throw std::invalid_argument("sweep: need 0 < min < max");
    if (!(cfg.inv_m_max < 1.0))
        throw std::invalid_argument("sweep: 1/M must stay below 1 (m1 < m0)");

    const auto setup =
        morsekg::molecular_setup(load_registry(registry_path).lookup(cfg.molecule));

    // leading row: the 1/M -> 0 (constant mass) limit
    std::vector<std::array<double, 3>> data;
    {
        const auto lim = morsekg::constant_mass_energy(cfg.n, setup.pot, setup.m0c2,
                                                       setup.q_inv, Branch::particle);
        data.push_back({0.0, lim.energy.real(), -lim.energy.real()});
    }
    const double log_lo = std::log10(cfg.inv_m_min);
    const double log_hi = std::log10(cfg.inv_m_max);
    for (int i = 0; i < cfg.points; ++i) {
        const double inv_m =
            std::pow(10.0, log_lo + (log_hi - log_lo) * i / (cfg.points - 1));
        const morsekg::MassModel mass(setup.m0c2, inv_m * setup.m0c2);
        const auto lvl =
            morsekg::pdm_energy(cfg.n, setup.pot, mass, setup.q_inv, Branch::particle);
        data.push_back({inv_m, lvl.energy.real(), -lvl.energy.real()});
    }

    if (sink.format == "json") {
        json doc;
        doc["command"] = "sweep";
        doc["molecule"] = cfg.molecule;
        doc["n"] = cfg.n;
        doc["rows"] = json::array();
        for (const auto& d : data) {
            json j;
            j["inv_m"] = d[0];
            j["e_particle_mev"] = d[1];
            j["e_antiparticle_mev"] = d[2];
            doc["rows"].push_back(j);
        }
        sink.write(doc.dump(2) + "\n");
    } else {
        std::vector<std::vector<std::string>> rows;
        for (const auto& d : data)
            rows.push_back({fmt6(d[0]), fmt6(d[1]), fmt6(d[2])});
        sink.write(csv_table({"ground-state dependence on 1/M = m1/m0; first row is the limit"},
                             "inv_m,e_particle_mev,e_antiparticle_mev", rows));
    }
    return exit_ok;
}

// ---------------------------------------------------------------- wavefn

struct WavefnConfig {
    std::string molecule;
    double v1 = 1.0, v2 = 2.0, beta = 1.0, m0 = 1.0, m1 = 0.0, q_inv = 1.0;
    double m1_over_m0 = 0.0;
    int n = 0;
    int num_terms = 16;
    int samples = 65;
    double x_max = 5.0;
    bool paper_signs = false;
};

int run_wavefn(const WavefnConfig& cfg, const std::string& registry_path,
               const OutputSink& sink) {
    morsekg::PotentialSpec pot(cfg.v1, cfg.v2, cfg.beta);
    double m0 = cfg.m0, m1 = cfg.m1, q_inv = cfg.q_inv;
    if (!cfg.molecule.empty()) {
        const auto setup =
            morsekg::molecular_setup(load_registry(registry_path).lookup(cfg.molecule));
        pot = setup.pot;
        m0 = setup.m0c2;
        q_inv = setup.q_inv;
        m1 = cfg.m1_over_m0 * m0;
    }
    const morsekg::MassModel mass(m0, m1);
    const auto signs = cfg.paper_signs ? morsekg::SignConvention::paper
                                       : morsekg::SignConvention::consistent;
    const morsekg::ReducedParams rp = morsekg::reduce(pot, mass, q_inv, cplx(0.0), signs);
    const cplx L = morsekg::quantization_L(cfg.n, rp);
    const auto series = morsekg::build_series(rp, L, std::max(2, cfg.num_terms));
    const auto level = morsekg::pdm_energy(cfg.n, pot, mass, q_inv, Branch::particle);

    std::vector<std::array<double, 3>> samples;
    for (int i = 0; i < cfg.samples; ++i) {
        const double x = cfg.x_max * i / (cfg.samples - 1);
        const cplx psi = morsekg::evaluate_psi(series, x, pot.beta());
        samples.push_back({x, psi.real(), psi.imag()});
    }

    if (sink.format == "json") {
        json doc;
        doc["command"] = "wavefn";
        doc["metadata"] = {{"n", cfg.n},
                           {"p_re", series.p.real()},
                           {"p_im", series.p.imag()},
                           {"q_re", series.q.real()},
                           {"q_im", series.q.imag()},
                           {"L_re", series.L.real()},
                           {"L_im", series.L.imag()},
                           {"truncation_index", series.truncation_index},
                           {"truncated_exactly", series.truncated_exactly},
                           {"e_plus", level.energy.real()},
                           {"sign_mode", cfg.paper_signs ? "paper-signs" : "consistent"}};
        doc["rows"] = json::array();
        for (const auto& s : samples)
            doc["rows"].push_back({{"x", s[0]}, {"psi_re", s[1]}, {"psi_im", s[2]}});
        sink.write(doc.dump(2) + "\n");
    } else {
        std::vector<std::string> comments{
            "n=" + std::to_string(cfg.n),
            "p=" + fmt6(series.p.real()) + (series.p.imag() != 0.0 ? "+" + fmt6(series.p.imag()) + "i" : ""),
            "q=" + fmt6(series.q.real()),
            "L=" + fmt6(series.L.real()) + (series.L.imag() != 0.0 ? "+" + fmt6(series.L.imag()) + "i" : ""),
            "truncation_index=" + std::to_string(series.truncation_index),
            std::string("truncated_exactly=") + (series.truncated_exactly ? "true" : "false"),
            "e_plus=" + fmt6(level.energy.real()),
            std::string("sign_mode=") + (cfg.paper_signs ? "paper-signs" : "consistent")};
        std::vector<std::vector<std::string>> rows;
        for (const auto& s : samples)
            rows.push_back({fmt6(s[0]), fmt6(s[1]), fmt6(s[2])});
        sink.write(csv_table(comments, "x,psi_re,psi_im", rows));
    }
    return exit_ok;
}

// ---------------------------------------------------------------- verify

struct VerifyConfig {
    std::string molecule = "H2";
    int levels = 8;
    int points = 4096;
    double x_max = 0.0;  // 0 = default from beta
    double tolerance = 1e-6;
};

int run_verify(const VerifyConfig& cfg, const std::string& registry_path,
               const OutputSink& sink) {
    const auto setup =
        morsekg::molecular_setup(load_registry(registry_path).lookup(cfg.molecule));
    const morsekg::MassModel mass(setup.m0c2, 0.0);

    std::vector<morsekg::QuantizedLevel> levels;
    for (int n = 0; n < cfg.levels; ++n)
        levels.push_back(morsekg::constant_mass_energy(n, setup.pot, setup.m0c2,
                                                       setup.q_inv, Branch::particle));

    const double x_max = cfg.x_max > 0.0 ? cfg.x_max : morsekg::default_x_max(setup.beta);
    const morsekg::GridSpec grid(x_max, cfg.points);
    const auto oracle =
        morsekg::solve_effective(setup.pot, mass, setup.q_inv, grid, cfg.levels);
    const auto report = morsekg::compare_report(
        levels, morsekg::input_fingerprint(setup.pot, mass, setup.q_inv), oracle,
        cfg.tolerance);

    if (sink.format == "json") {
        json doc;
        doc["command"] = "verify";
        doc["molecule"] = cfg.molecule;
        doc["tolerance"] = report.tolerance;
        doc["all_match"] = report.all_match;
        doc["rows"] = json::array();
        for (const auto& r : report.rows)
            doc["rows"].push_back({{"n", r.n},
                                   {"closed_form_mev", r.closed_form},
                                   {"oracle_mev", r.oracle},
                                   {"abs_dev", r.abs_deviation},
                                   {"rel_dev", r.rel_deviation},
                                   {"match", r.match}});
        sink.write(doc.dump(2) + "\n");
    } else {
        std::vector<std::vector<std::string>> rows;
        for (const auto& r : report.rows)
            rows.push_back({std::to_string(r.n), fmt6(r.closed_form), fmt6(r.oracle),
                            fmt6(r.abs_deviation), fmt6(r.rel_deviation),
                            r.match ? "yes" : "no"});
        sink.write(csv_table({"closed form vs finite-difference oracle, constant mass",
                              "tolerance=" + fmt6(cfg.tolerance)},
                             "n,closed_form_mev,oracle_mev,abs_dev,rel_dev,match", rows));
    }
    return report.all_match ? exit_ok : exit_mismatch;
}

// ------------------------------------------------------- validate-oracle

int run_validate_oracle(int points, const OutputSink& sink) {
    const auto rep = morsekg::validate_oracle(morsekg::GridSpec(30.0, points));
    if (sink.format == "json") {
        json doc;
        doc["command"] = "validate-oracle";
        doc["passed"] = rep.passed;
        doc["box_error_coarse"] = rep.box_error_coarse;
        doc["box_error_fine"] = rep.box_error_fine;
        doc["box_convergence_ratio"] = rep.box_convergence_ratio;
        doc["richardson_consistency"] = rep.richardson_consistency;
        doc["bound_states"] = rep.morse_bound_states;
        doc["morse_levels"] = json::array();
        for (const auto& lvl : rep.morse_levels)
            doc["morse_levels"].push_back({{"n", lvl.n},
                                           {"computed", lvl.computed},
                                           {"exact", lvl.exact},
                                           {"rel_error", lvl.rel_error}});
        sink.write(doc.dump(2) + "\n");
    } else {
        sink.write(rep.summary());
    }
    return rep.passed ? exit_ok : exit_domain;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bound states of the one-dimensional effective-mass Klein-Gordon "
                 "equation with the generalized Morse potential"};
    app.require_subcommand(1);

    OutputSink sink;
    std::string registry_path;
    bool paper_signs = false;
    app.add_option("--format", sink.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--output", sink.path, "output file (default stdout)");
    app.add_option("--registry", registry_path,
                   "molecule registry file (default: MORSEKG_REGISTRY or built-in path)");
    app.add_flag("--paper-signs", paper_signs,
                 "use the published sign of p in series exponents");

    LevelsConfig lv;
    auto* levels = app.add_subcommand("levels", "quantized energy levels");
    levels->fallthrough();
    auto* lv_mol = levels->add_option("--molecule", lv.molecule, "registry molecule name");
    levels->add_option("--n", lv.n_range, "level index or range A..B")->required();
    levels->add_flag("--constant-mass", lv.constant_mass, "force the m1 = 0 formula");
    levels->add_flag("--special-case", lv.special_case, "A2 = A4 = 0 reduction (needs V2 = m1)");
    levels->add_option("--m1-over-m0", lv.m1_over_m0, "1/M for molecular runs");
    // exactly one of molecule / raw-parameter block
    lv_mol->excludes(levels->add_option("--v1", lv.v1, "raw V1"));
    lv_mol->excludes(levels->add_option("--v2", lv.v2, "raw V2"));
    lv_mol->excludes(levels->add_option("--beta", lv.beta, "raw beta"));
    lv_mol->excludes(levels->add_option("--m0", lv.m0, "rest energy m0 c^2"));
    lv_mol->excludes(levels->add_option("--m1", lv.m1, "mass-profile amplitude m1 c^2"));
    lv_mol->excludes(levels->add_option("--q-inv", lv.q_inv, "1/Q in energy units"));
    lv_mol->excludes(
        levels->add_flag("--complex", lv.complex_mode, "complex (u1,u2,u3) parameterization"));
    levels->add_option("--u1", lv.u1, "complex-case u1");
    levels->add_option("--u2", lv.u2, "complex-case u2");
    levels->add_option("--u3", lv.u3, "complex-case u3");
    levels->add_option("--qprime", lv.q_prime_inv, "1/Q' for the complex case");

    auto* table1 = app.add_subcommand("table1", "reproduce the published reference table");
    table1->fallthrough();

    SweepConfig sw;
    auto* sweep = app.add_subcommand("sweep", "ground-state dependence on 1/M");
    sweep->fallthrough();
    sweep->add_option("--molecule", sw.molecule, "registry molecule name");
    sweep->add_option("--n", sw.n, "level index");
    sweep->add_option("--points", sw.points, "log-grid points");
    sweep->add_option("--min", sw.inv_m_min, "lower 1/M");
    sweep->add_option("--max", sw.inv_m_max, "upper 1/M");

    WavefnConfig wf;
    auto* wavefn = app.add_subcommand("wavefn", "series wavefunction samples");
    wavefn->fallthrough();
    auto* wf_mol = wavefn->add_option("--molecule", wf.molecule, "registry molecule name");
    wavefn->add_option("--m1-over-m0", wf.m1_over_m0, "1/M for molecular runs");
    wavefn->add_option("--n", wf.n, "level index");
    wf_mol->excludes(wavefn->add_option("--v1", wf.v1, "raw V1"));
    wf_mol->excludes(wavefn->add_option("--v2", wf.v2, "raw V2"));
    wf_mol->excludes(wavefn->add_option("--beta", wf.beta, "raw beta"));
    wf_mol->excludes(wavefn->add_option("--m0", wf.m0, "rest energy m0 c^2"));
    wf_mol->excludes(wavefn->add_option("--m1", wf.m1, "mass-profile amplitude m1 c^2"));
    wf_mol->excludes(wavefn->add_option("--q-inv", wf.q_inv, "1/Q in energy units"));
    wavefn->add_option("--num-terms", wf.num_terms, "series length N");
    wavefn->add_option("--samples", wf.samples, "sample count");
    wavefn->add_option("--x-max", wf.x_max, "sample range [0, x_max]");

    VerifyConfig vf;
    auto* verify = app.add_subcommand("verify", "closed form vs finite-difference oracle");
    verify->fallthrough();
    verify->add_option("--molecule", vf.molecule, "registry molecule name");
    verify->add_option("--levels", vf.levels, "number of levels to compare");
    verify->add_option("--points", vf.points, "oracle grid points");
    verify->add_option("--x-max", vf.x_max, "oracle domain length");
    verify->add_option("--tolerance", vf.tolerance, "relative match tolerance");

    int vo_points = 4096;
    auto* validate = app.add_subcommand("validate-oracle", "oracle self-test");
    validate->fallthrough();
    validate->add_option("--points", vo_points, "grid points");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        wf.paper_signs = paper_signs;
        if (levels->parsed()) return run_levels(lv, registry_path, sink);
        if (table1->parsed()) return run_table1(registry_path, sink);
        if (sweep->parsed()) return run_sweep(sw, registry_path, sink);
        if (wavefn->parsed()) return run_wavefn(wf, registry_path, sink);
        if (verify->parsed()) return run_verify(vf, registry_path, sink);
        if (validate->parsed()) return run_validate_oracle(vo_points, sink);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_domain;
    }
    return exit_usage;
}

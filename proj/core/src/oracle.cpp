#include "morsekg/oracle.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "morsekg/errors.hpp"
#include "morsekg/tridiagonal.hpp"

namespace morsekg {

GridSpec::GridSpec(double x_max, int points) : x_max_(x_max), points_(points) {
    if (!(x_max > 0.0)) throw std::invalid_argument("GridSpec: x_max must be > 0");
    if (points < 64) throw std::invalid_argument("GridSpec: points must be >= 64");
}

std::vector<double> dirichlet_eigenvalues(const std::function<double(double)>& w,
                                          const GridSpec& grid, int k) {
    const int interior = grid.points() - 2;
    if (k < 1 || k > interior)
        throw std::invalid_argument("dirichlet_eigenvalues: need 1 <= k <= points-2");
    const double h = grid.spacing();
    const double inv_h2 = 1.0 / (h * h);

    SymTridiag t;
    t.diag.resize(static_cast<std::size_t>(interior));
    t.off.assign(static_cast<std::size_t>(interior) - 1, -inv_h2);
    for (int i = 0; i < interior; ++i)
        t.diag[static_cast<std::size_t>(i)] = 2.0 * inv_h2 + w((i + 1) * h);
    return lowest_eigenvalues(t, k);
}

namespace {

GridSpec refined(const GridSpec& g) { return GridSpec(g.x_max(), 2 * g.points() - 1); }

std::vector<double> richardson(const std::vector<double>& coarse,
                               const std::vector<double>& fine) {
    std::vector<double> out(coarse.size());
    for (std::size_t i = 0; i < coarse.size(); ++i)
        out[i] = (4.0 * fine[i] - coarse[i]) / 3.0;
    return out;
}

}  // namespace

OracleResult solve_effective(const PotentialSpec& pot, const MassModel& mass, double q_inv,
                             const GridSpec& grid, int k) {
    if (!pot.is_real())
        throw UnsupportedCaseError("solve_effective: complex potentials are out of scope");
    if (k < 1 || k >= grid.points())
        throw std::invalid_argument("solve_effective: need 1 <= k << points");

    const LinePotential u = effective_line_potential(pot, mass, q_inv);
    const auto w = [&u](double x) { return -u(x); };

    OracleResult res;
    res.grid = grid;
    res.eigenvalues = dirichlet_eigenvalues(w, grid, k);
    const std::vector<double> fine = dirichlet_eigenvalues(w, refined(grid), k);
    res.richardson_estimate = richardson(res.eigenvalues, fine);

    res.fingerprint = input_fingerprint(pot, mass, q_inv);
    res.m0c2 = mass.m0();
    const double qb = pot.beta() / q_inv;
    res.q2beta2 = qb * qb;

    res.energies.reserve(res.richardson_estimate.size());
    for (double lam : res.richardson_estimate) {
        const double e2 = res.m0c2 * res.m0c2 + lam / res.q2beta2;
        const double e = e2 >= 0.0 ? std::sqrt(e2) : std::nan("");
        res.energies.push_back({e, -e});
    }

    // Decay flag from the inverse-iteration eigenvector: tail (last 2%
    // of the grid) negligible against the peak.
    const int interior = grid.points() - 2;
    const double h = grid.spacing();
    const double inv_h2 = 1.0 / (h * h);
    SymTridiag t;
    t.diag.resize(static_cast<std::size_t>(interior));
    t.off.assign(static_cast<std::size_t>(interior) - 1, -inv_h2);
    for (int i = 0; i < interior; ++i)
        t.diag[static_cast<std::size_t>(i)] = 2.0 * inv_h2 + w((i + 1) * h);
    const std::size_t tail = std::max<std::size_t>(2, static_cast<std::size_t>(interior) / 50);
    for (double lam : res.eigenvalues) {
        const std::vector<double> v = inverse_iteration(t, lam);
        double peak = 0.0, edge = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i) peak = std::max(peak, std::abs(v[i]));
        for (std::size_t i = v.size() - tail; i < v.size(); ++i)
            edge = std::max(edge, std::abs(v[i]));
        res.decays_before_boundary.push_back(edge <= 1e-6 * peak);
    }
    return res;
}

double default_x_max(double beta) {
    if (!(beta > 0.0)) throw std::invalid_argument("default_x_max: beta must be > 0");
    // slowest term is e^{-beta x}; below 1e-12 of its x = 0 value
    return 12.0 * std::log(10.0) / beta;
}

OracleValidation validate_oracle(const GridSpec& grid) {
    OracleValidation rep;

    // Particle in a box: -v'' = lambda v on [0, pi], lowest lambda -> 1.
    const double pi = 3.14159265358979323846;
    const auto zero = [](double) { return 0.0; };
    const int box_pts = std::max(128, grid.points() / 8);
    const GridSpec box_coarse(pi, box_pts);
    const GridSpec box_fine(pi, 2 * box_pts - 1);
    rep.box_error_coarse = std::abs(dirichlet_eigenvalues(zero, box_coarse, 1)[0] - 1.0);
    rep.box_error_fine = std::abs(dirichlet_eigenvalues(zero, box_fine, 1)[0] - 1.0);
    rep.box_convergence_ratio =
        rep.box_error_fine > 0.0 ? rep.box_error_coarse / rep.box_error_fine : 0.0;
    const bool box_ok = rep.box_convergence_ratio > 3.5 && rep.box_convergence_ratio < 4.5;

    // Dimensionless reference Morse well, shifted so the domain covers
    // the barrier side: x = y + x_lo with x_lo = -5, solved as
    //   -v'' + 2 m D (e^{-2 b x} - 2 e^{-b x}) v = (2 m E) v.
    const double d_well = 50.0, b = 1.0, m = 0.5, x_lo = -5.0;
    const auto w_morse = [&](double y) {
        const double x = y + x_lo;
        return 2.0 * m * d_well * (std::exp(-2.0 * b * x) - 2.0 * std::exp(-b * x));
    };
    const double omega = b * std::sqrt(2.0 * d_well / m);
    const GridSpec g1(30.0, grid.points());
    const GridSpec g2 = refined(g1);
    const GridSpec g3 = refined(g2);
    const int k = 3;
    const std::vector<double> lam1 = dirichlet_eigenvalues(w_morse, g1, k);
    const std::vector<double> lam2 = dirichlet_eigenvalues(w_morse, g2, k);
    const std::vector<double> lam3 = dirichlet_eigenvalues(w_morse, g3, k);
    const std::vector<double> rich12 = richardson(lam1, lam2);
    const std::vector<double> rich23 = richardson(lam2, lam3);

    bool morse_ok = true;
    for (int n = 0; n < k; ++n) {
        OracleValidation::MorseLevel lvl;
        lvl.n = n;
        lvl.computed = rich12[static_cast<std::size_t>(n)] / (2.0 * m);
        lvl.exact = -d_well + omega * (n + 0.5) -
                    omega * omega * (n + 0.5) * (n + 0.5) / (4.0 * d_well);
        lvl.rel_error = std::abs(lvl.computed - lvl.exact) / std::abs(lvl.exact);
        morse_ok = morse_ok && lvl.rel_error < 1e-6;
        rep.morse_levels.push_back(lvl);
    }
    rep.richardson_consistency =
        std::abs(rich12[0] - rich23[0]) / std::max(std::abs(rich23[0]), 1e-300);

    const std::vector<double> lam_window = dirichlet_eigenvalues(w_morse, g1, 10);
    for (double lam : lam_window)
        if (lam < 0.0) ++rep.morse_bound_states;

    rep.passed = box_ok && morse_ok && rep.richardson_consistency < 1e-4;
    return rep;
}

std::string OracleValidation::summary() const {
    std::ostringstream os;
    os.precision(6);
    os << "oracle self-validation: " << (passed ? "PASS" : "FAIL") << "\n";
    os << "  box lowest-eigenvalue error: coarse " << box_error_coarse << ", fine "
       << box_error_fine << ", ratio " << box_convergence_ratio << " (expect ~4)\n";
    os << "  reference Morse well (D=50, beta=1, m=1/2), Richardson-extrapolated:\n";
    for (const auto& lvl : morse_levels)
        os << "    n=" << lvl.n << "  computed " << lvl.computed << "  exact " << lvl.exact
           << "  rel err " << lvl.rel_error << "\n";
    os << "  bound states found (lambda < 0, first 10): " << morse_bound_states << "\n";
    os << "  richardson consistency (h,h/2) vs (h/2,h/4): " << richardson_consistency
       << "\n";
    return os.str();
}

ComparisonReport compare_report(const std::vector<QuantizedLevel>& levels,
                                std::uint64_t levels_fingerprint, const OracleResult& oracle,
                                double tolerance) {
    if (levels_fingerprint != oracle.fingerprint)
        throw ProvenanceMismatchError(
            "compare_report: closed-form and oracle inputs have different fingerprints");

    ComparisonReport rep;
    rep.tolerance = tolerance;
    rep.fingerprint = oracle.fingerprint;
    rep.all_match = true;
    const std::size_t count = std::min(levels.size(), oracle.energies.size());
    for (std::size_t i = 0; i < count; ++i) {
        const QuantizedLevel& lvl = levels[i];
        ComparisonRow row;
        row.n = lvl.n;
        row.closed_form = lvl.energy.real();
        row.oracle = lvl.branch == Branch::particle ? oracle.energies[i].plus
                                                    : oracle.energies[i].minus;
        row.abs_deviation = std::abs(row.closed_form - row.oracle);
        row.rel_deviation = row.abs_deviation / std::max(std::abs(row.closed_form), 1e-300);
        row.match = !(row.rel_deviation > tolerance);
        rep.all_match = rep.all_match && row.match;
        rep.rows.push_back(row);
    }
    return rep;
}

}  // namespace morsekg

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "morsekg/potential.hpp"
#include "morsekg/spectrum.hpp"

namespace morsekg {

/// Uniform grid on [0, x_max] with Dirichlet conditions at both ends.
class GridSpec {
public:
    GridSpec(double x_max, int points);

    double x_max() const { return x_max_; }
    int points() const { return points_; }
    double spacing() const { return x_max_ / (points_ - 1); }

private:
    double x_max_;
    int points_;
};

struct EnergyPair {
    double plus = 0.0;
    double minus = 0.0;
};

/// Output of the finite-difference eigensolve of
///   -psi'' - U(x) psi = lambda psi,   lambda = Q^2 beta^2 (E^2 - m0^2 c^4).
struct OracleResult {
    GridSpec grid{1.0, 64};
    std::vector<double> eigenvalues;          ///< k lowest lambda, ascending
    std::vector<double> richardson_estimate;  ///< extrapolated from (h, h/2)
    std::vector<EnergyPair> energies;         ///< +/-E from the extrapolated lambda
    std::vector<bool> decays_before_boundary; ///< eigenfunction tail negligible at x_max
    std::uint64_t fingerprint = 0;
    double m0c2 = 0.0;
    double q2beta2 = 0.0;
};

/// Second-order central-difference eigensolve of -v'' + W(y) v = lambda v
/// on [0, x_max] with Dirichlet ends; k lowest eigenvalues by Sturm
/// bisection. Shared by the physical solve and the self-test.
std::vector<double> dirichlet_eigenvalues(const std::function<double(double)>& w,
                                          const GridSpec& grid, int k);

/// Solve the effective equation of the real case for the k lowest
/// eigenvalues, on the given grid plus a once-refined grid for
/// Richardson extrapolation. Rejects complex potentials and k out of
/// range; energies are derived as E = +/- sqrt(m0^2 c^4 + lambda/(Q^2 beta^2)).
OracleResult solve_effective(const PotentialSpec& pot, const MassModel& mass, double q_inv,
                             const GridSpec& grid, int k);

/// Default domain length: every exponential term of the effective
/// potential below 1e-12 of its x = 0 magnitude.
double default_x_max(double beta);

/// Self-test results: particle-in-a-box convergence order and the
/// dimensionless reference Morse well against its closed-form spectrum.
struct OracleValidation {
    bool passed = false;

    double box_error_coarse = 0.0;
    double box_error_fine = 0.0;
    double box_convergence_ratio = 0.0;  // expected ~4 (second order)

    struct MorseLevel {
        int n = 0;
        double computed = 0.0;
        double exact = 0.0;
        double rel_error = 0.0;
    };
    std::vector<MorseLevel> morse_levels;
    int morse_bound_states = 0;           // lambda < 0 count among the solved window
    double richardson_consistency = 0.0;  // |extrap(h,h/2) - extrap(h/2,h/4)| / |...|

    std::string summary() const;
};

/// Validate the solver against the particle-in-a-box and a desk-scale
/// dimensionless Morse well (D = 50, beta = 1, m = 1/2), whose spectrum
///   E_n = -D + w(n + 1/2) - w^2 (n + 1/2)^2 / (4D),  w = beta sqrt(2D/m),
/// is known in closed form. Passes when the three lowest levels match
/// to 1e-6 relative after Richardson extrapolation.
OracleValidation validate_oracle(const GridSpec& grid);

struct ComparisonRow {
    int n = 0;
    double closed_form = 0.0;
    double oracle = 0.0;
    double abs_deviation = 0.0;
    double rel_deviation = 0.0;
    bool match = false;
};

/// Side-by-side table of closed-form levels against oracle energies.
/// Documents deviations; never fails on mismatch. Refuses to compare
/// results carrying different input fingerprints.
struct ComparisonReport {
    std::vector<ComparisonRow> rows;
    double tolerance = 0.0;
    bool all_match = false;
    std::uint64_t fingerprint = 0;
};

ComparisonReport compare_report(const std::vector<QuantizedLevel>& levels,
                                std::uint64_t levels_fingerprint, const OracleResult& oracle,
                                double tolerance);

}  // namespace morsekg

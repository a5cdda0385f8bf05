#pragma once

#include <complex>
#include <cstdint>

namespace morsekg {

using cplx = std::complex<double>;

/// Generalized Morse potential V_s(x) = V1 e^{-2 beta x} - V2 e^{-beta x}
/// on the half line x >= 0. V1, V2 may be complex; beta > 0; V1 != 0
/// (V1 = 0 degenerates the quartic term and the Gaussian exponent).
class PotentialSpec {
public:
    PotentialSpec(cplx v1, cplx v2, double beta);

    cplx v1() const { return v1_; }
    cplx v2() const { return v2_; }
    double beta() const { return beta_; }
    bool is_real() const { return is_real_; }

    /// V_s at a real coordinate.
    cplx value(double x) const;

private:
    cplx v1_, v2_;
    double beta_;
    bool is_real_;
};

/// Standard Morse well of depth D: V1 = D, V2 = 2D, so that
/// V_s(0) = -D and V_s'(0) = 0.
PotentialSpec morse_from_dissociation(double dissociation_energy, double beta = 1.0);

/// Complex non-PT-symmetric parameterization (beta fixed to 1):
///   V1 = (u1 + i u2)^2,  V2 = (u1 + i u2)(1 + 2 u3).
PotentialSpec complex_potential_params(double u1, double u2, double u3);

/// Exponential mass profile m(x) c^2 = m0 c^2 + m1 c^2 e^{-beta x},
/// stored as rest energies. Requires m0 > 0 and positivity of the
/// profile on x >= 0, i.e. m0 + min(0, m1) > 0.
class MassModel {
public:
    MassModel(double m0_energy, double m1_energy);

    double m0() const { return m0_; }
    double m1() const { return m1_; }
    double rest_energy_at(double x, double beta) const;

private:
    double m0_, m1_;
};

enum class SignConvention {
    consistent,  ///< p = -Q(V2 - m1 c^2): satisfies q^2 = A5 and 2pq = A4
    paper        ///< p = +Q(V2 - m1 c^2): published sign choice (2pq = -A4)
};

/// Coefficients of the transformed equation
///   phi'' + (A1/z^2 + A2/z - A3 - A4 z - A5 z^2) phi = 0,  z = e^{-beta x},
/// together with the Gaussian-exponent parameters p, q of the series
/// ansatz. A1 depends on the energy E passed to reduce(); everything
/// else is energy-free.
struct ReducedParams {
    double q_inv = 1.0;  ///< 1/Q (energy units)
    cplx a1, a2, a3, a4, a5;
    cplx p, q;
    bool energy_dependent = false;
};

/// Build the A1..A5, p, q set from potential, mass profile, 1/Q and an
/// energy E (E enters A1 only). With SignConvention::consistent,
/// q = -Q V1 and p = -Q(V2 - m1 c^2), the unique pair satisfying both
/// q^2 = A5 and 2pq = A4 exactly.
ReducedParams reduce(const PotentialSpec& pot, const MassModel& mass, double q_inv,
                     cplx energy, SignConvention signs = SignConvention::consistent);

/// The effective one-dimensional line potential of the real case:
/// the solver works on  -psi'' - U(x) psi = lambda psi  with
/// lambda = Q^2 beta^2 (E^2 - m0^2 c^4). U collects the four
/// exponential terms scaled by Q^2 beta^2 and decays to 0 as x grows.
class LinePotential {
public:
    double operator()(double x) const;
    double beta() const { return beta_; }

private:
    friend LinePotential effective_line_potential(const PotentialSpec&, const MassModel&,
                                                  double);
    double beta_ = 1.0;
    double c1_ = 0.0, c2_ = 0.0, c3_ = 0.0, c4_ = 0.0;  // e^{-k beta x} coefficients
};

/// Collect U(x) for the real, self-adjoint case. Complex potentials are
/// rejected with UnsupportedCaseError.
LinePotential effective_line_potential(const PotentialSpec& pot, const MassModel& mass,
                                       double q_inv);

/// Fingerprint of the physical inputs (potential, mass profile, 1/Q),
/// used to refuse cross-comparisons between results computed from
/// different inputs.
std::uint64_t input_fingerprint(const PotentialSpec& pot, const MassModel& mass,
                                double q_inv);

}  // namespace morsekg

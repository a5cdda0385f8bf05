#pragma once

#include <string>

#include "morsekg/molecules.hpp"
#include "morsekg/potential.hpp"

namespace morsekg {

/// Particle (+E) / antiparticle (-E) root of the relativistic spectrum.
enum class Branch { particle, antiparticle };

inline double branch_sign(Branch b) { return b == Branch::particle ? 1.0 : -1.0; }

/// Which closed form produced a level.
enum class FormulaTag {
    pdm_real,            ///< position-dependent mass, real potential
    const_mass_real,     ///< m1 = 0 limit, real potential
    pdm_complex,         ///< position-dependent mass, complex parameterization
    const_mass_complex,  ///< m1 = 0 limit, complex parameterization
    special_case         ///< A2 = A4 = 0 reduction
};

std::string to_string(FormulaTag tag);

/// One quantized level: E_n for a branch, with the leading-power
/// parameter L satisfying L^2 = Q^2 (E^2 - m0^2 c^4).
struct QuantizedLevel {
    int n = 0;
    Branch branch = Branch::particle;
    cplx energy;  ///< same unit as the energy inputs (MeV in molecular use)
    cplx L;
    FormulaTag source = FormulaTag::const_mass_real;
};

/// The combinations that absorb the potential into the spectrum:
///   v1_tilde = V2^2/(2 V1) + m0 c^2
///   v2_tilde = -V2/V1 + m1 c^2/(2 V1)
struct TildeParams {
    cplx v1_tilde;
    cplx v2_tilde;
};

TildeParams tilde_params(const PotentialSpec& pot, double m0c2, double m1c2);

/// Primed analogues of the complex (u1, u2, u3) parameterization:
///   v1_tilde' = (u3 + 1)^2 + m0 c^2      (reading the published 2(u3+1)^2/2)
///   v2_tilde' = (2 u3 + 1)/(u1 + i u2) + m1 c^2 / (2 (u1 + i u2)^2)
TildeParams complex_tilde_params(double u1, double u2, double u3, double m0c2,
                                 double m1c2);

/// Solve the truncation condition 2q(2n + L + 1) = A3 for L.
/// Throws std::domain_error when q = 0 (degenerate potential).
cplx quantization_L(int n, const ReducedParams& rp);

/// Position-dependent-mass spectrum,
///   E_n = +/- sqrt( m0^2 c^4 + (1/Q^2)[2n+1+Q v1~]^2
///                   + (m1 c^2 v2~/Q)[2(2n+1) + 2 Q v1~ + Q m1 c^2 v2~] ).
/// Principal-branch square root; the +/- is applied after the root so
/// the two branches are exact negatives.
QuantizedLevel pdm_energy(int n, const PotentialSpec& pot, const MassModel& mass,
                          double q_inv, Branch branch);

/// Constant-mass limit for a real potential:
///   E_n = +/- sqrt( ((2n+1)/Q + v1~)^2 + m0^2 c^4 ).
/// Complex potentials are rejected (use complex_energy).
QuantizedLevel constant_mass_energy(int n, const PotentialSpec& pot, double m0c2,
                                    double q_inv, Branch branch);

/// Complex non-PT-symmetric spectrum built from the primed quantities.
/// q_prime is the inverse-energy parameter 1/Q'; it defaults to 1
/// (natural units), since no numeric convention is fixed for it.
/// The imaginary part vanishes identically when m1 = 0.
QuantizedLevel complex_energy(int n, double u1, double u2, double u3,
                              const MassModel& mass, Branch branch,
                              double q_prime_inv = 1.0);

/// Constant-mass limit of the complex case. By default every
/// occurrence of the tilde parameter is the primed one; with
/// literal_mixed_radicand the inner radicand instead uses the
/// unprimed v1~ of the (u1,u2,u3) potential, reproducing the published
/// mixed form for side-by-side comparison.
QuantizedLevel complex_constant_mass_energy(int n, double u1, double u2, double u3,
                                            double m0c2, Branch branch,
                                            double q_prime_inv = 1.0,
                                            bool literal_mixed_radicand = false);

/// A2 = A4 = 0 special case,
///   E_n = -/+ sqrt( m0^2 c^4
///                   + 4 Q^2 (m0 c^2 + m1 c^2)^2 [2n+1+sqrt(1/4 - V1^2 Q^2)]^{-2}
///                   - 1/(4 Q^2) ).
/// Note the inverted sign convention: branch 'particle' carries the
/// leading minus. Requires V2 = m1 c^2 to 1e-9 relative, else
/// SpecialCaseError. Complex results are permitted.
QuantizedLevel special_case_energy(int n, const PotentialSpec& pot, const MassModel& mass,
                                   double q_inv, Branch branch);

/// Molecular wiring of the real Morse case, everything in MeV:
/// V1 = D, V2 = 2D, beta = a r0, 1/Q = hbar c a r0.
struct MolecularSetup {
    PotentialSpec pot;
    double m0c2 = 0.0;   ///< MeV
    double q_inv = 0.0;  ///< MeV
    double beta = 0.0;
};

MolecularSetup molecular_setup(const MoleculeParams& mol);

}  // namespace morsekg

#include "morsekg/spectrum.hpp"

#include <cmath>
#include <stdexcept>

#include "morsekg/constants.hpp"
#include "morsekg/errors.hpp"

namespace morsekg {

namespace {

void require_level_index(int n, const char* where) {
    if (n < 0) throw std::invalid_argument(std::string(where) + ": n must be >= 0");
}

}  // namespace

std::string to_string(FormulaTag tag) {
    switch (tag) {
        case FormulaTag::pdm_real: return "pdm-real";
        case FormulaTag::const_mass_real: return "const-mass-real";
        case FormulaTag::pdm_complex: return "pdm-complex";
        case FormulaTag::const_mass_complex: return "const-mass-complex";
        case FormulaTag::special_case: return "special-case";
    }
    return "unknown";
}

TildeParams tilde_params(const PotentialSpec& pot, double m0c2, double m1c2) {
    const cplx v1 = pot.v1();
    const cplx v2 = pot.v2();
    return {v2 * v2 / (2.0 * v1) + m0c2, -v2 / v1 + m1c2 / (2.0 * v1)};
}

TildeParams complex_tilde_params(double u1, double u2, double u3, double m0c2,
                                 double m1c2) {
    if (u1 == 0.0 && u2 == 0.0)
        throw std::invalid_argument("complex_tilde_params: u1 = u2 = 0");
    const cplx u(u1, u2);
    const double s = u3 + 1.0;
    return {cplx(s * s + m0c2, 0.0), (2.0 * u3 + 1.0) / u + m1c2 / (2.0 * u * u)};
}

cplx quantization_L(int n, const ReducedParams& rp) {
    require_level_index(n, "quantization_L");
    if (rp.q == cplx(0.0, 0.0))
        throw std::domain_error("quantization_L: q = 0 (degenerate potential)");
    return rp.a3 / (2.0 * rp.q) - (2.0 * n + 1.0);
}

QuantizedLevel pdm_energy(int n, const PotentialSpec& pot, const MassModel& mass,
                          double q_inv, Branch branch) {
    require_level_index(n, "pdm_energy");
    if (!(q_inv > 0.0)) throw std::invalid_argument("pdm_energy: 1/Q must be > 0");

    const double Q = 1.0 / q_inv;
    const double m0 = mass.m0();
    const double m1 = mass.m1();
    const TildeParams t = tilde_params(pot, m0, m1);

    const cplx b = (2.0 * n + 1.0) + Q * t.v1_tilde;
    const cplx mv2 = m1 * t.v2_tilde;
    const cplx e2 = m0 * m0 + (b * b) * (q_inv * q_inv) +
                    (mv2 * q_inv) * (2.0 * (2.0 * n + 1.0) + 2.0 * Q * t.v1_tilde + Q * mv2);

    QuantizedLevel lvl;
    lvl.n = n;
    lvl.branch = branch;
    lvl.energy = branch_sign(branch) * std::sqrt(e2);
    lvl.L = -(Q * (t.v1_tilde + mv2) + (2.0 * n + 1.0));
    lvl.source = pot.is_real() ? FormulaTag::pdm_real : FormulaTag::pdm_complex;
    return lvl;
}

QuantizedLevel constant_mass_energy(int n, const PotentialSpec& pot, double m0c2,
                                    double q_inv, Branch branch) {
    require_level_index(n, "constant_mass_energy");
    if (!pot.is_real())
        throw UnsupportedCaseError("constant_mass_energy: complex potential; use complex_energy");
    if (!(q_inv > 0.0)) throw std::invalid_argument("constant_mass_energy: 1/Q must be > 0");

    const double Q = 1.0 / q_inv;
    const double vt1 = tilde_params(pot, m0c2, 0.0).v1_tilde.real();
    const double x = (2.0 * n + 1.0) * q_inv + vt1;

    QuantizedLevel lvl;
    lvl.n = n;
    lvl.branch = branch;
    lvl.energy = branch_sign(branch) * std::sqrt(x * x + m0c2 * m0c2);
    lvl.L = -((2.0 * n + 1.0) + Q * vt1);
    lvl.source = FormulaTag::const_mass_real;
    return lvl;
}

QuantizedLevel complex_energy(int n, double u1, double u2, double u3,
                              const MassModel& mass, Branch branch, double q_prime_inv) {
    require_level_index(n, "complex_energy");
    if (!(q_prime_inv > 0.0))
        throw std::invalid_argument("complex_energy: 1/Q' must be > 0");

    const double Qp = 1.0 / q_prime_inv;
    const double m0 = mass.m0();
    const double m1 = mass.m1();
    const TildeParams t = complex_tilde_params(u1, u2, u3, m0, m1);

    const cplx b = (2.0 * n + 1.0) + Qp * t.v1_tilde;
    const cplx mv2 = m1 * t.v2_tilde;
    const cplx e2 = m0 * m0 + (b * b) * (q_prime_inv * q_prime_inv) +
                    (mv2 * q_prime_inv) *
                        (2.0 * (2.0 * n + 1.0) + 2.0 * Qp * t.v1_tilde + Qp * mv2);

    QuantizedLevel lvl;
    lvl.n = n;
    lvl.branch = branch;
    lvl.energy = branch_sign(branch) * std::sqrt(e2);
    lvl.L = -(Qp * (t.v1_tilde + mv2) + (2.0 * n + 1.0));
    lvl.source = FormulaTag::pdm_complex;
    return lvl;
}

QuantizedLevel complex_constant_mass_energy(int n, double u1, double u2, double u3,
                                            double m0c2, Branch branch, double q_prime_inv,
                                            bool literal_mixed_radicand) {
    require_level_index(n, "complex_constant_mass_energy");
    if (!(q_prime_inv > 0.0))
        throw std::invalid_argument("complex_constant_mass_energy: 1/Q' must be > 0");

    const double Qp = 1.0 / q_prime_inv;
    const cplx vt1p = complex_tilde_params(u1, u2, u3, m0c2, 0.0).v1_tilde;
    // The published form mixes the primed prefactor with an unprimed inner
    // radicand; the default reads both as primed (the consistent m1 = 0
    // limit), the literal mode evaluates the mixing as published.
    cplx vt1_inner = vt1p;
    if (literal_mixed_radicand) {
        const PotentialSpec pot = complex_potential_params(u1, u2, u3);
        vt1_inner = tilde_params(pot, m0c2, 0.0).v1_tilde;
    }

    const cplx pre = (2.0 * n + 1.0) + Qp * vt1p;
    const cplx inner = (2.0 * n + 1.0) + Qp * vt1_inner;
    const cplx ratio = m0c2 / inner;
    const cplx e = pre * std::sqrt(q_prime_inv * q_prime_inv + ratio * ratio);

    QuantizedLevel lvl;
    lvl.n = n;
    lvl.branch = branch;
    lvl.energy = branch_sign(branch) * e;
    if (literal_mixed_radicand) {
        lvl.L = std::sqrt(Qp * Qp * (e * e - m0c2 * m0c2));
    } else {
        lvl.L = -((2.0 * n + 1.0) + Qp * vt1p);
    }
    lvl.source = FormulaTag::const_mass_complex;
    return lvl;
}

QuantizedLevel special_case_energy(int n, const PotentialSpec& pot, const MassModel& mass,
                                   double q_inv, Branch branch) {
    require_level_index(n, "special_case_energy");
    if (!(q_inv > 0.0)) throw std::invalid_argument("special_case_energy: 1/Q must be > 0");

    const double m1 = mass.m1();
    const double gap = std::abs(pot.v2() - cplx(m1, 0.0));
    const double scale = std::max(std::abs(pot.v2()), std::abs(m1));
    if (gap > 1e-9 * scale)
        throw SpecialCaseError(
            "special_case_energy: requires V2 = m1 c^2 (A2 = A4 = 0); relative gap " +
            std::to_string(scale > 0.0 ? gap / scale : gap));

    const double Q = 1.0 / q_inv;
    const double m0 = mass.m0();
    const cplx v1q = pot.v1() * Q;
    const cplx root = std::sqrt(cplx(0.25, 0.0) - v1q * v1q);
    const cplx denom = (2.0 * n + 1.0) + root;
    const cplx msum = m0 + m1;
    const cplx e2 = m0 * m0 + 4.0 * Q * Q * (msum * msum) / (denom * denom) -
                    0.25 * q_inv * q_inv;

    QuantizedLevel lvl;
    lvl.n = n;
    lvl.branch = branch;
    // Inverted convention: the 'particle' branch carries the leading minus.
    lvl.energy = -branch_sign(branch) * std::sqrt(e2);
    lvl.L = std::sqrt(Q * Q * (e2 - m0 * m0));
    lvl.source = FormulaTag::special_case;
    return lvl;
}

MolecularSetup molecular_setup(const MoleculeParams& mol) {
    const double d_mev = wavenumber_to_energy(mol.dissociation_energy) * 1e-6;
    const double beta = morse_beta(mol);
    return MolecularSetup{morse_from_dissociation(d_mev, beta), rest_energy(mol),
                          inverse_q(mol) * 1e-6, beta};
}

}  // namespace morsekg

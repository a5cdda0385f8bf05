#include "morsekg/potential.hpp"

#include <cmath>
#include <cstring>
#include <stdexcept>

#include "morsekg/errors.hpp"

namespace morsekg {

PotentialSpec::PotentialSpec(cplx v1, cplx v2, double beta)
    : v1_(v1), v2_(v2), beta_(beta) {
    if (!(beta > 0.0)) throw std::invalid_argument("PotentialSpec: beta must be > 0");
    if (v1 == cplx(0.0, 0.0))
        throw std::invalid_argument("PotentialSpec: V1 = 0 degenerates the reduction");
    is_real_ = (v1.imag() == 0.0 && v2.imag() == 0.0);
}

cplx PotentialSpec::value(double x) const {
    const double z = std::exp(-beta_ * x);
    return v1_ * (z * z) - v2_ * z;
}

PotentialSpec morse_from_dissociation(double dissociation_energy, double beta) {
    if (!(dissociation_energy > 0.0))
        throw std::invalid_argument("morse_from_dissociation: D must be > 0");
    return PotentialSpec(dissociation_energy, 2.0 * dissociation_energy, beta);
}

PotentialSpec complex_potential_params(double u1, double u2, double u3) {
    if (u1 == 0.0 && u2 == 0.0)
        throw std::invalid_argument("complex_potential_params: u1 = u2 = 0 gives V1 = 0");
    const cplx u(u1, u2);
    return PotentialSpec(u * u, u * (1.0 + 2.0 * u3), 1.0);
}

MassModel::MassModel(double m0_energy, double m1_energy) : m0_(m0_energy), m1_(m1_energy) {
    if (!(m0_energy > 0.0)) throw std::invalid_argument("MassModel: m0 c^2 must be > 0");
    // e^{-beta x} spans (0, 1] on x >= 0, so positivity there reduces to
    // m0 + min(0, m1) > 0.
    if (!(m0_energy + std::min(0.0, m1_energy) > 0.0))
        throw std::invalid_argument("MassModel: mass profile not positive on x >= 0");
}

double MassModel::rest_energy_at(double x, double beta) const {
    return m0_ + m1_ * std::exp(-beta * x);
}

ReducedParams reduce(const PotentialSpec& pot, const MassModel& mass, double q_inv,
                     cplx energy, SignConvention signs) {
    if (!(q_inv > 0.0)) throw std::invalid_argument("reduce: 1/Q must be > 0");
    const double Q = 1.0 / q_inv;
    const double Q2 = Q * Q;
    const cplx v1 = pot.v1();
    const cplx v2 = pot.v2();
    const double m0 = mass.m0();
    const double m1 = mass.m1();
    const cplx w = v2 - m1;  // V2 - m1 c^2

    ReducedParams rp;
    rp.q_inv = q_inv;
    rp.a1 = Q2 * (energy * energy - m0 * m0) + 0.25;
    rp.a2 = 2.0 * Q2 * m0 * w;
    rp.a3 = Q2 * (v2 * v2 + 2.0 * v1 * m0 - 2.0 * v2 * m1 + m1 * m1);
    const cplx qv = Q * v1;
    const cplx pw = Q * w;
    rp.a4 = 2.0 * (qv * pw);
    rp.a5 = qv * qv;
    rp.q = -qv;
    rp.p = (signs == SignConvention::consistent) ? -pw : pw;
    rp.energy_dependent = true;
    return rp;
}

double LinePotential::operator()(double x) const {
    const double z = std::exp(-beta_ * x);
    return ((((c4_ * z) + c3_) * z + c2_) * z + c1_) * z;
}

LinePotential effective_line_potential(const PotentialSpec& pot, const MassModel& mass,
                                       double q_inv) {
    if (!pot.is_real())
        throw UnsupportedCaseError(
            "effective_line_potential: only the real, self-adjoint case is supported");
    if (!(q_inv > 0.0))
        throw std::invalid_argument("effective_line_potential: 1/Q must be > 0");

    const double v1 = pot.v1().real();
    const double v2 = pot.v2().real();
    const double m0 = mass.m0();
    const double m1 = mass.m1();
    const double beta = pot.beta();
    // Q^2 beta^2 is the numeric stand-in for 1/(hbar c)^2.
    const double s = (beta / q_inv) * (beta / q_inv);

    LinePotential U;
    U.beta_ = beta;
    U.c1_ = s * 2.0 * m0 * (v2 - m1);
    U.c2_ = -s * (v2 * v2 + 2.0 * v1 * m0 - 2.0 * v2 * m1 + m1 * m1);
    U.c3_ = s * 2.0 * v1 * (v2 - m1);
    U.c4_ = -s * v1 * v1;
    return U;
}

std::uint64_t input_fingerprint(const PotentialSpec& pot, const MassModel& mass,
                                double q_inv) {
    const double parts[] = {pot.v1().real(), pot.v1().imag(), pot.v2().real(),
                            pot.v2().imag(), pot.beta(),      mass.m0(),
                            mass.m1(),       q_inv};
    // FNV-1a over the raw bit patterns.
    std::uint64_t h = 1469598103934665603ull;
    for (double d : parts) {
        std::uint64_t bits;
        std::memcpy(&bits, &d, sizeof bits);
        for (int i = 0; i < 8; ++i) {
            h ^= (bits >> (8 * i)) & 0xffu;
            h *= 1099511628211ull;
        }
    }
    return h;
}

}  // namespace morsekg

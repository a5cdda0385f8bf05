#pragma once

#include <stdexcept>

namespace morsekg {

/// CODATA-2018-derived conversion factors, fixed at construction.
///
/// hbar_c_ev_angstrom : hbar*c in eV*Angstrom
/// amu_mev            : rest energy of one atomic mass unit in MeV
/// ev_per_wavenumber  : energy of 1 cm^-1 in eV ( = h*c/(1 cm) / e )
struct PhysicalConstants {
    double hbar_c_ev_angstrom = 1973.269804;
    double amu_mev = 931.49410242;
    double ev_per_wavenumber = 1.239841984e-4;
};

inline constexpr PhysicalConstants codata{};

/// Spectroscopic wavenumber (cm^-1) to energy in eV.
inline double wavenumber_to_energy(double wavenumber_cm1) {
    if (wavenumber_cm1 < 0.0)
        throw std::domain_error("wavenumber_to_energy: negative wavenumber");
    return wavenumber_cm1 * codata.ev_per_wavenumber;
}

/// Inverse of wavenumber_to_energy.
inline double energy_to_wavenumber(double energy_ev) {
    if (energy_ev < 0.0)
        throw std::domain_error("energy_to_wavenumber: negative energy");
    return energy_ev / codata.ev_per_wavenumber;
}

/// Mass in amu to rest energy m*c^2 in MeV.
inline double amu_to_rest_energy(double mass_amu) {
    if (mass_amu < 0.0)
        throw std::domain_error("amu_to_rest_energy: negative mass");
    return mass_amu * codata.amu_mev;
}

}  // namespace morsekg

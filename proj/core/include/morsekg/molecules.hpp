#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace morsekg {

/// Spectroscopic constants for one diatomic molecule.
struct MoleculeParams {
    std::string name;
    double dissociation_energy = 0.0;   ///< D, cm^-1
    double width = 0.0;                 ///< a, 1/Angstrom
    double equilibrium_distance = 0.0;  ///< r0, Angstrom
    double rest_mass = 0.0;             ///< m0, amu
};

/// Registry of molecules loaded from a plain-text data file.
///
/// File format: UTF-8, '#' starts a comment line, data lines are
///   name,D_cm-1,a_A-1,r0_A,m0_amu
/// with '.' as decimal separator. Names must be unique (case-insensitive)
/// and every numeric field strictly positive.
///
/// Immutable after construction; safe for concurrent reads.
class MoleculeRegistry {
public:
    static MoleculeRegistry from_file(const std::string& path);
    static MoleculeRegistry from_stream(std::istream& in, const std::string& origin);

    /// Case-insensitive lookup; throws NotFoundError listing the
    /// available names.
    const MoleculeParams& lookup(std::string_view name) const;

    const std::vector<MoleculeParams>& molecules() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

private:
    std::vector<MoleculeParams> entries_;
};

/// Registry path resolution: MORSEKG_REGISTRY environment variable if
/// set, otherwise the path the library was configured with.
std::string default_registry_path();

/// 1/Q = hbar*c * a * r0, read numerically in eV (hbar*c in eV*A,
/// a in 1/A, r0 in A).
double inverse_q(const MoleculeParams& mol);

/// Dimensionless Morse length scale beta = a * r0.
double morse_beta(const MoleculeParams& mol);

/// Rest energy m0*c^2 in MeV.
double rest_energy(const MoleculeParams& mol);

}  // namespace morsekg

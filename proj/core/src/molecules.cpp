#include "morsekg/molecules.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "morsekg/constants.hpp"
#include "morsekg/errors.hpp"

#ifndef MORSEKG_REGISTRY_DEFAULT
#define MORSEKG_REGISTRY_DEFAULT "molecules.csv"
#endif

namespace morsekg {

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_positive(const std::string& field, const std::string& context) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(field, &pos);
    } catch (const std::exception&) {
        throw std::runtime_error(context + ": cannot parse '" + field + "'");
    }
    if (pos != field.size())
        throw std::runtime_error(context + ": trailing characters in '" + field + "'");
    if (!(v > 0.0))
        throw std::runtime_error(context + ": field must be strictly positive, got '" + field + "'");
    return v;
}

}  // namespace

MoleculeRegistry MoleculeRegistry::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("molecule registry: cannot open '" + path + "'");
    return from_stream(in, path);
}

MoleculeRegistry MoleculeRegistry::from_stream(std::istream& in, const std::string& origin) {
    MoleculeRegistry reg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;

        std::string context = origin + ":" + std::to_string(lineno);
        std::vector<std::string> fields;
        std::stringstream ss(t);
        std::string field;
        while (std::getline(ss, field, ',')) fields.push_back(trim(field));
        if (fields.size() != 5)
            throw std::runtime_error(context + ": expected 5 comma-separated fields, got " +
                                     std::to_string(fields.size()));

        MoleculeParams m;
        m.name = fields[0];
        if (m.name.empty()) throw std::runtime_error(context + ": empty molecule name");
        m.dissociation_energy = parse_positive(fields[1], context);
        m.width = parse_positive(fields[2], context);
        m.equilibrium_distance = parse_positive(fields[3], context);
        m.rest_mass = parse_positive(fields[4], context);

        for (const auto& existing : reg.entries_)
            if (lower(existing.name) == lower(m.name))
                throw std::runtime_error(context + ": duplicate molecule '" + m.name + "'");
        reg.entries_.push_back(std::move(m));
    }
    return reg;
}

const MoleculeParams& MoleculeRegistry::lookup(std::string_view name) const {
    const std::string key = lower(name);
    for (const auto& m : entries_)
        if (lower(m.name) == key) return m;

    std::string available;
    for (const auto& m : entries_) {
        if (!available.empty()) available += ", ";
        available += m.name;
    }
    throw NotFoundError("unknown molecule '" + std::string(name) + "'; available: " +
                        (available.empty() ? "<none>" : available));
}

std::string default_registry_path() {
    if (const char* env = std::getenv("MORSEKG_REGISTRY"); env && *env) return env;
    return MORSEKG_REGISTRY_DEFAULT;
}

double inverse_q(const MoleculeParams& mol) {
    return codata.hbar_c_ev_angstrom * mol.width * mol.equilibrium_distance;
}

double morse_beta(const MoleculeParams& mol) {
    return mol.width * mol.equilibrium_distance;
}

double rest_energy(const MoleculeParams& mol) {
    return amu_to_rest_energy(mol.rest_mass);
}

}  // namespace morsekg

#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "morsekg/errors.hpp"
#include "morsekg/molecules.hpp"
#include "morsekg/spectrum.hpp"

using namespace morsekg;

namespace {

double crel(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

MoleculeRegistry registry() { return MoleculeRegistry::from_file(MORSEKG_DATA_FILE); }

ReducedParams synthetic_rp(cplx a2, cplx a3, cplx p, cplx q, double q_inv = 1.0) {
    ReducedParams rp;
    rp.q_inv = q_inv;
    rp.a2 = a2;
    rp.a3 = a3;
    rp.a4 = 2.0 * p * q;
    rp.a5 = q * q;
    rp.p = p;
    rp.q = q;
    return rp;
}

void check_L_definition(const QuantizedLevel& lvl, double m0c2, double q_inv) {
    const cplx l2 = lvl.L * lvl.L;
    const cplx rhs = (lvl.energy * lvl.energy - m0c2 * m0c2) / (q_inv * q_inv);
    CHECK(std::abs(l2 - rhs) < 1e-9 * (1.0 + std::abs(l2)));
}

}  // namespace

TEST_CASE("quantization_L solves the truncation condition") {
    SUBCASE("A3 = 2q, n = 0 gives L = 0") {
        const auto rp = synthetic_rp(cplx(0.3), cplx(-2.0), cplx(0.4), cplx(-1.0));
        CHECK(std::abs(quantization_L(0, rp)) == 0.0);
    }
    SUBCASE("q = 0 is degenerate") {
        const auto rp = synthetic_rp(cplx(0.3), cplx(1.0), cplx(0.4), cplx(0.0));
        CHECK_THROWS_AS(quantization_L(0, rp), std::domain_error);
    }
    SUBCASE("substituting back annihilates 2q(2n+L+1) - A3") {
        std::mt19937_64 rng(3);
        std::uniform_real_distribution<double> draw(-2.0, 2.0);
        for (int i = 0; i < 100; ++i) {
            const auto rp = synthetic_rp(cplx(draw(rng)), cplx(draw(rng), draw(rng)),
                                         cplx(draw(rng)), cplx(draw(rng), draw(rng)) + 3.0);
            const int n = i % 8;
            const cplx L = quantization_L(n, rp);
            const cplx resid = 2.0 * rp.q * (2.0 * n + L + 1.0) - rp.a3;
            CHECK(std::abs(resid) <= 1e-12 * std::max(1.0, std::abs(rp.a3)));
        }
    }
}

// The central algebra as an executable identity: L from the truncation
// condition, then E = sqrt(m0^2 c^4 + L^2/Q^2), must reproduce the
// closed-form spectrum.
TEST_CASE("route equivalence: quantization vs closed form") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> pos(0.3, 3.0);
    std::uniform_real_distribution<double> sym(-2.0, 2.0);
    std::uniform_real_distribution<double> small(-0.25, 0.25);
    for (int i = 0; i < 300; ++i) {
        const PotentialSpec pot(cplx(pos(rng)), cplx(sym(rng)), 1.0);
        const MassModel mass(pos(rng), small(rng));
        const double q_inv = pos(rng);
        const int n = i % 21;

        const auto rp = reduce(pot, mass, q_inv, cplx(0.0));
        const cplx L = quantization_L(n, rp);
        const cplx e_route = std::sqrt(cplx(mass.m0() * mass.m0()) + (L * q_inv) * (L * q_inv));
        const cplx e_closed = pdm_energy(n, pot, mass, q_inv, Branch::particle).energy;
        CHECK(crel(e_route, e_closed) < 1e-12);
    }
}

TEST_CASE("route equivalence on molecular constants") {
    const auto setup = molecular_setup(registry().lookup("H2"));
    const auto rp = reduce(setup.pot, MassModel(setup.m0c2, 0.0), setup.q_inv, cplx(0.0));
    const cplx L = quantization_L(0, rp);
    const double e_route =
        std::sqrt(setup.m0c2 * setup.m0c2 + std::norm(L) * setup.q_inv * setup.q_inv);
    const auto lvl = constant_mass_energy(0, setup.pot, setup.m0c2, setup.q_inv,
                                          Branch::particle);
    CHECK(crel(e_route, lvl.energy) < 1e-12);
    CHECK(std::abs(lvl.energy.real() - 663.819) < 0.02);
}

TEST_CASE("published reference energies reproduce within 0.02 MeV") {
    const auto reg = registry();
    const auto h2 = molecular_setup(reg.lookup("H2"));
    CHECK(std::abs(constant_mass_energy(0, h2.pot, h2.m0c2, h2.q_inv, Branch::particle)
                       .energy.real() -
                   663.819) < 0.02);
    const auto lih = molecular_setup(reg.lookup("LiH"));
    CHECK(std::abs(constant_mass_energy(50, lih.pot, lih.m0c2, lih.q_inv, Branch::particle)
                       .energy.real() -
                   1159.670) < 0.02);
    const auto hcl = molecular_setup(reg.lookup("HCl"));
    CHECK(std::abs(constant_mass_energy(0, hcl.pot, hcl.m0c2, hcl.q_inv, Branch::antiparticle)
                       .energy.real() -
                   (-1291.130)) < 0.02);
}

TEST_CASE("constant-mass limit of the position-dependent-mass spectrum") {
    const auto setup = molecular_setup(registry().lookup("H2"));
    const MassModel mass0(setup.m0c2, 0.0);
    for (int n = 0; n <= 100; n += 5) {
        const cplx pdm = pdm_energy(n, setup.pot, mass0, setup.q_inv, Branch::particle).energy;
        const cplx cm = constant_mass_energy(n, setup.pot, setup.m0c2, setup.q_inv,
                                             Branch::particle)
                            .energy;
        CHECK(crel(pdm, cm) < 1e-14);
        CHECK(pdm.imag() == 0.0);
    }
}

TEST_CASE("pdm energy is continuous as m1 -> 0") {
    const auto setup = molecular_setup(registry().lookup("H2"));
    const double e0 = constant_mass_energy(0, setup.pot, setup.m0c2, setup.q_inv,
                                           Branch::particle)
                          .energy.real();
    double prev_gap = 1e300;
    for (double ratio : {1e-5, 1e-6, 1e-7, 1e-8}) {
        const MassModel mass(setup.m0c2, ratio * setup.m0c2);
        const double e = pdm_energy(0, setup.pot, mass, setup.q_inv, Branch::particle)
                             .energy.real();
        const double gap = std::abs(e - e0);
        CHECK(std::isfinite(e));
        CHECK(gap < prev_gap);
        prev_gap = gap;
    }
    CHECK(prev_gap < 1e-3 * std::abs(e0));
}

TEST_CASE("branch antisymmetry is exact for every operation") {
    const auto setup = molecular_setup(registry().lookup("LiH"));
    const MassModel mass(setup.m0c2, 1e-5 * setup.m0c2);
    for (int n : {0, 3, 17}) {
        const auto p1 = pdm_energy(n, setup.pot, mass, setup.q_inv, Branch::particle);
        const auto m1 = pdm_energy(n, setup.pot, mass, setup.q_inv, Branch::antiparticle);
        CHECK(m1.energy == -p1.energy);

        const auto p2 = constant_mass_energy(n, setup.pot, setup.m0c2, setup.q_inv,
                                             Branch::particle);
        const auto m2 = constant_mass_energy(n, setup.pot, setup.m0c2, setup.q_inv,
                                             Branch::antiparticle);
        CHECK(m2.energy == -p2.energy);

        const MassModel nat(1.0, 0.3);
        const auto p3 = complex_energy(n, 0.8, 0.6, 0.4, nat, Branch::particle);
        const auto m3 = complex_energy(n, 0.8, 0.6, 0.4, nat, Branch::antiparticle);
        CHECK(m3.energy == -p3.energy);

        const auto p4 = complex_constant_mass_energy(n, 0.8, 0.6, 0.4, 1.0, Branch::particle);
        const auto m4 =
            complex_constant_mass_energy(n, 0.8, 0.6, 0.4, 1.0, Branch::antiparticle);
        CHECK(m4.energy == -p4.energy);

        const PotentialSpec sp(cplx(0.1), cplx(0.25), 1.0);
        const MassModel spm(1.0, 0.25);
        const auto p5 = special_case_energy(n, sp, spm, 1.0, Branch::particle);
        const auto m5 = special_case_energy(n, sp, spm, 1.0, Branch::antiparticle);
        CHECK(m5.energy == -p5.energy);
    }
}

TEST_CASE("real constant-mass spectrum increases with n") {
    const auto setup = molecular_setup(registry().lookup("HCl"));
    double prev = 0.0;
    for (int n = 0; n <= 60; ++n) {
        const double e = constant_mass_energy(n, setup.pot, setup.m0c2, setup.q_inv,
                                              Branch::particle)
                             .energy.real();
        if (n > 0) CHECK(e > prev);
        prev = e;
    }
}

TEST_CASE("complex spectra: reality in the constant-mass limit") {
    SUBCASE("u2 = 0, m1 = 0: exactly real") {
        const auto lvl = complex_energy(2, 1.3, 0.0, 0.4, MassModel(1.0, 0.0),
                                        Branch::particle);
        CHECK(lvl.energy.imag() == 0.0);
    }
    SUBCASE("any u2 with m1 = 0: exactly real") {
        for (double u2 : {0.3, -1.2, 2.5}) {
            const auto lvl = complex_energy(1, 0.7, u2, -0.3, MassModel(2.0, 0.0),
                                            Branch::particle);
            CHECK(lvl.energy.imag() == 0.0);
        }
    }
    SUBCASE("m1 != 0 and u2 != 0: generically complex") {
        const auto lvl = complex_energy(0, 1.0, 0.8, 0.2, MassModel(1.0, 0.4),
                                        Branch::particle);
        CHECK(lvl.energy.imag() != 0.0);
        CHECK(to_string(lvl.source) == "pdm-complex");
    }
}

TEST_CASE("complex constant-mass limit identity") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> draw(-1.5, 1.5);
    for (int i = 0; i < 100; ++i) {
        const double u1 = draw(rng) + 2.0, u2 = draw(rng), u3 = draw(rng);
        const double m0 = draw(rng) + 2.0;
        const int n = i % 11;
        const cplx full =
            complex_energy(n, u1, u2, u3, MassModel(m0, 0.0), Branch::particle).energy;
        const cplx limit =
            complex_constant_mass_energy(n, u1, u2, u3, m0, Branch::particle).energy;
        CHECK(crel(full, limit) < 1e-14);
        CHECK(limit.imag() == 0.0);
    }
}

TEST_CASE("literal mixed-radicand mode differs from the consistent reading") {
    // unprimed v1~ = (1+2u3)^2/2 + m0 differs from (u3+1)^2 + m0 unless
    // the parameterization makes them collide
    const cplx consistent =
        complex_constant_mass_energy(0, 1.0, 0.5, 0.7, 1.0, Branch::particle).energy;
    const cplx literal =
        complex_constant_mass_energy(0, 1.0, 0.5, 0.7, 1.0, Branch::particle, 1.0, true)
            .energy;
    CHECK(std::abs(consistent - literal) > 1e-6);
}

TEST_CASE("special case requires V2 = m1 c^2") {
    const PotentialSpec bad(cplx(1.0), cplx(0.5), 1.0);
    CHECK_THROWS_AS(special_case_energy(0, bad, MassModel(1.0, 0.3), 1.0, Branch::particle),
                    SpecialCaseError);
}

TEST_CASE("special case: boundary and duplicate-evaluation oracle") {
    SUBCASE("V1 Q = 1/2 boundary keeps E finite") {
        const PotentialSpec pot(cplx(0.5), cplx(0.2), 1.0);
        const auto lvl = special_case_energy(0, pot, MassModel(1.0, 0.2), 1.0,
                                             Branch::particle);
        CHECK(std::isfinite(lvl.energy.real()));
        CHECK(std::isfinite(lvl.energy.imag()));
    }
    SUBCASE("independent re-typing agrees") {
        // V1 Q = 0.1, V2 = m1 c^2 matched
        const double v1 = 0.1, v2 = 0.25, m0 = 1.0, m1 = 0.25, q_inv = 1.0;
        const PotentialSpec pot(cplx(v1), cplx(v2), 1.0);
        for (int n : {0, 1, 4}) {
            const auto lvl =
                special_case_energy(n, pot, MassModel(m0, m1), q_inv, Branch::particle);

            using cl = std::complex<long double>;
            const long double q = 1.0L / static_cast<long double>(q_inv);
            const cl root = std::sqrt(cl(0.25L) - cl(v1) * q * cl(v1) * q);
            const cl term = 4.0L * q * q * (cl(m0) + cl(m1)) * (cl(m0) + cl(m1)) /
                            ((cl(2.0L * n + 1.0L) + root) * (cl(2.0L * n + 1.0L) + root));
            const cl eps2 = cl(m0) * cl(m0) + term - cl(0.25L) / (q * q);
            const cl expected = -std::sqrt(eps2);  // particle branch: leading minus
            CHECK(std::abs(cplx(static_cast<double>(expected.real()),
                                static_cast<double>(expected.imag())) -
                           lvl.energy) < 1e-12 * std::abs(lvl.energy));
        }
    }
}

TEST_CASE("the leading-power parameter satisfies its definition") {
    const auto setup = molecular_setup(registry().lookup("H2"));
    check_L_definition(
        constant_mass_energy(3, setup.pot, setup.m0c2, setup.q_inv, Branch::particle),
        setup.m0c2, setup.q_inv);
    check_L_definition(pdm_energy(2, setup.pot, MassModel(setup.m0c2, 1e-5 * setup.m0c2),
                                  setup.q_inv, Branch::particle),
                       setup.m0c2, setup.q_inv);
    check_L_definition(complex_energy(1, 0.9, 0.4, 0.2, MassModel(1.0, 0.3),
                                      Branch::particle),
                       1.0, 1.0);
    check_L_definition(complex_constant_mass_energy(2, 0.9, 0.4, 0.2, 1.0, Branch::particle),
                       1.0, 1.0);
    const PotentialSpec sp(cplx(0.1), cplx(0.25), 1.0);
    check_L_definition(special_case_energy(1, sp, MassModel(1.0, 0.25), 1.0,
                                           Branch::particle),
                       1.0, 1.0);
}

TEST_CASE("tilde parameters reproduce their defining combinations") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> pos(0.3, 3.0);
    std::uniform_real_distribution<double> sym(-2.0, 2.0);
    for (int i = 0; i < 50; ++i) {
        const double v1 = pos(rng), v2 = sym(rng), m0 = pos(rng);
        const double m1 = 0.2 * m0 * sym(rng);
        const PotentialSpec pot(cplx(v1), cplx(v2), 1.0);
        const auto t = tilde_params(pot, m0, m1);
        CHECK(crel(t.v1_tilde, cplx(v2 * v2 / (2.0 * v1) + m0)) < 1e-14);
        CHECK(crel(t.v2_tilde, cplx(-v2 / v1 + m1 / (2.0 * v1))) < 1e-14);
    }
}

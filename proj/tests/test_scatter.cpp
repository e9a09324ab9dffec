#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "brach/cliffrep.hpp"
#include "brach/scatter.hpp"
#include "oracles.hpp"

using namespace brach;

TEST_CASE("Compton formula")
{
    CHECK(compton_omega2(1.0, 1.3, 0.0) == doctest::Approx(1.3));
    CHECK(compton_omega2(1.0, 1.0, std::numbers::pi / 2) == doctest::Approx(0.5));
    CHECK(compton_omega2(2.0, 1.0, std::numbers::pi) == doctest::Approx(0.5));
}

TEST_CASE("embeddings are Clifford triples")
{
    for (ScatterRep rep : {ScatterRep::Gamma, ScatterRep::Majorana}) {
        const Embedding e = embedding(rep);
        const ComplexMat one = ComplexMat::identity(4);
        CHECK(max_abs_diff(e.t * e.t, one) == 0.0);
        CHECK(max_abs_diff(e.x * e.x, one) == 0.0);
        CHECK(max_abs_diff(e.y * e.y, one) == 0.0);
        CHECK(anticommutator(e.t, e.x).max_abs() == 0.0);
        CHECK(anticommutator(e.t, e.y).max_abs() == 0.0);
        CHECK(anticommutator(e.x, e.y).max_abs() == 0.0);
    }
    const GammaSet g = build_gamma_scatter();
    CHECK(embedding(ScatterRep::Gamma).t == g.t());
    CHECK(embedding(ScatterRep::Majorana).t == kI * build_majorana().beta);
}

TEST_CASE("momenta")
{
    for (ScatterRep rep : {ScatterRep::Gamma, ScatterRep::Majorana}) {
        ScatterConfig cfg;
        cfg.rep = rep;
        cfg.m = 1.0;
        cfg.omega1 = 1.0;
        cfg.theta = std::numbers::pi / 2;
        const Momenta k = build_momenta(cfg);
        const Embedding e = embedding(rep);
        CHECK(max_abs_diff(k.q1.mat, 1.0 * (e.t + kI * e.x)) == 0.0);
        CHECK((k.q1.mat * k.q1.mat).max_abs() < 1e-12);
        CHECK((k.q2.mat * k.q2.mat).max_abs() < 1e-12);
        CHECK(max_abs_diff(k.p1.mat * k.p1.mat, ComplexMat::identity(4)) < 1e-12);
        const double w1 = cfg.omega1, w2 = k.omega2;
        CHECK(max_abs_diff(anticommutator(k.q1.mat, k.q2.mat),
                           2.0 * w1 * w2 * (1.0 - std::cos(cfg.theta)) * ComplexMat::identity(4)) < 1e-12);
        CHECK(max_abs_diff(anticommutator(k.q1.mat - k.q2.mat, k.p1.mat),
                           2.0 * cfg.m * (w1 - w2) * ComplexMat::identity(4)) < 1e-12);
        CHECK(k.q1.kind == MomentumKind::Lightlike);
        CHECK(k.p2.kind == MomentumKind::Timelike);
    }
}

TEST_CASE("q1 dagger q1 for the gamma set")
{
    const GammaSet g = build_gamma_scatter();
    ScatterConfig cfg;
    cfg.omega1 = 0.7;
    const Momenta k = build_momenta(cfg);
    const ComplexMat lhs = k.q1.mat.adjoint() * k.q1.mat;
    const ComplexMat rhs = 0.49 * (2.0 * ComplexMat::identity(4) + kI * commutator(g.t(), g.x()));
    CHECK(max_abs_diff(lhs, rhs) < 1e-12);
}

TEST_CASE("forward scattering")
{
    ScatterConfig cfg;
    cfg.m = 1.2;
    cfg.omega1 = 0.9;
    cfg.theta = 0.0;
    const Momenta k = build_momenta(cfg);
    CHECK(std::abs(k.omega2 - cfg.omega1) < 1e-15);
    CHECK(max_abs_diff(k.q1.mat, k.q2.mat) < 1e-15);
    const ConservationReport r = verify_conservation(cfg);
    CHECK(r.residual_energy < 1e-14);
    CHECK(r.residual_compton < 1e-15);
}

TEST_CASE("conservation residuals in both embeddings")
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> um(0.5, 5.0), uw(0.1, 5.0), ut(0.0, std::numbers::pi);
    for (int n = 0; n < 100; ++n) {
        ScatterConfig cfg;
        cfg.m = um(rng);
        cfg.omega1 = uw(rng);
        cfg.theta = ut(rng);
        cfg.rep = ScatterRep::Gamma;
        const ConservationReport g = verify_conservation(cfg);
        cfg.rep = ScatterRep::Majorana;
        const ConservationReport m = verify_conservation(cfg);
        for (const auto* r : {&g, &m}) {
            CHECK(r->residual_energy < 1e-12);
            CHECK(r->residual_compton < 1e-12);
            CHECK(r->residual_matrix < 1e-12);
            CHECK(r->residual_momentum < 1e-12);
            CHECK(r->nilpotency < 1e-12);
            CHECK(std::abs(r->omega2_matrix - r->omega2) < 1e-12);
        }
        CHECK(g.omega2 == m.omega2);
    }
}

TEST_CASE("invalid kinematics")
{
    ScatterConfig cfg;
    cfg.m = -1.0;
    CHECK_THROWS_AS(build_momenta(cfg), KinematicsError);
    cfg.m = 1.0;
    cfg.theta = 4.0;
    CHECK_THROWS_AS(build_momenta(cfg), KinematicsError);
    cfg.theta = 1.0;
    cfg.omega2 = -0.5;
    CHECK_THROWS_AS(build_momenta(cfg), KinematicsError);
    cfg.omega2.reset();
    cfg.rotating_mass = true;
    CHECK_THROWS_AS(build_momenta(cfg), KinematicsError);
    CHECK_THROWS(parse_scatter_rep("weyl"));
}

TEST_CASE("phased block anticommutator")
{
    const Vec3 p{0.3, -1.2, 0.8};
    const Vec3 q{1.1, 0.4, -0.6};
    const double dot = p[0] * q[0] + p[1] * q[1] + p[2] * q[2];
    CHECK(max_abs_diff(phased_anticommutator_block(p, q, 0.0), dot * ComplexMat::identity(4)) < 1e-15);
    const Vec3 par{2 * p[0], 2 * p[1], 2 * p[2]};
    const double pp = 2 * (p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
    CHECK(max_abs_diff(phased_anticommutator_block(p, par, 0.9), std::cos(0.9) * pp * ComplexMat::identity(4)) < 1e-14);

    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int n = 0; n < 200; ++n) {
        const Vec3 a{u(rng), u(rng), u(rng)}, b{u(rng), u(rng), u(rng)};
        const double th = u(rng);
        const ComplexMat pa = phased_block_momentum(a, th), pb = phased_block_momentum(b, 0.0);
        const ComplexMat brute = 0.5 * (oracle::product(pa, pb) + oracle::product(pb, pa));
        CHECK(max_abs_diff(brute, phased_anticommutator_block(a, b, th)) < 1e-12);
    }

    // Derivative at theta = 0 against a central difference.
    const double h = 1e-5;
    const ComplexMat fd = (phased_anticommutator_block(p, q, h) - phased_anticommutator_block(p, q, -h)) * (0.5 / h);
    const Vec3 x{p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0]};
    const ComplexMat xs = x[0] * pauli(Pauli::X) + x[1] * pauli(Pauli::Y) + x[2] * pauli(Pauli::Z);
    CHECK(max_abs_diff(fd, kron(pauli(Pauli::Z), xs)) < 1e-6);
}

TEST_CASE("Majorana phased dot")
{
    const Vec3 p{0.4, 1.1, -0.3};
    const Vec3 q{-0.7, 0.5, 0.9};
    CHECK(majorana_phased_dot(p, q, 0.0) == doctest::Approx(p[0] * q[0] + p[1] * q[1] + p[2] * q[2]));
    CHECK(majorana_phased_dot({0, 1, 0}, {0, 1, 0}, std::numbers::pi) == doctest::Approx(-1.0));
    CHECK(max_abs_diff(majorana_phased_momentum(p, 0.0), build_majorana().hamiltonian(0.0, p)) == 0.0);

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int n = 0; n < 200; ++n) {
        const Vec3 a{u(rng), u(rng), u(rng)}, b{u(rng), u(rng), u(rng)};
        const double phi = u(rng);
        const ComplexMat pa = majorana_phased_momentum(a, phi), pb = majorana_phased_momentum(b, 0.0);
        const ComplexMat half = 0.5 * (oracle::product(pa, pb) + oracle::product(pb, pa));
        CHECK(max_abs_diff(half, majorana_phased_dot(a, b, phi) * ComplexMat::identity(4)) < 1e-12);
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "brach/angmom4.hpp"
#include "brach/qbe.hpp"
#include "oracles.hpp"

using namespace brach;

namespace {

Vec3 rand3(std::mt19937_64& rng, double a = 1.0)
{
    std::uniform_real_distribution<double> u(-a, a);
    return {u(rng), u(rng), u(rng)};
}

ComplexMat sym_traceless(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    ComplexMat f(4);
    for (int r = 0; r < 4; ++r)
        for (int c = r; c < 4; ++c) f(r, c) = f(c, r) = u(rng);
    const cplx s = f.trace() / 4.0;
    for (int r = 0; r < 4; ++r) f(r, r) -= s;
    return f;
}

}  // namespace

TEST_CASE("tensor layout")
{
    const ComplexMat m = assemble_tensor({1.0, 0.0, 0.0}, {0.0, 0.0, 0.0});
    CHECK(m(0, 1) == cplx(-1.0));
    CHECK(m(1, 0) == cplx(1.0));
    CHECK(m.max_abs() == 1.0);
    CHECK(assemble_tensor({0, 0, 0}, {0, 0, 0}).max_abs() == 0.0);

    std::mt19937_64 rng(1);
    for (int n = 0; n < 20; ++n) {
        const Vec3 nv = rand3(rng), lv = rand3(rng);
        const ComplexMat t = assemble_tensor(nv, lv);
        CHECK((t + t.transpose()).max_abs() == 0.0);
        CHECK(t.max_imag() == 0.0);
        CHECK(is_hermitian(kI * t, 0.0));
        const AngMomTensor back = tensor_components(t);
        CHECK(back.n == nv);
        CHECK(back.l == lv);
    }
}

TEST_CASE("invariant equals the sum of squares")
{
    // Tr[(iM)^2 / 2] = |n|^2 + |l|^2 for this layout.
    CHECK(angmom_invariant({1, 0, 0}, {0, 0, 0}) == doctest::Approx(1.0));
    CHECK(angmom_invariant({0, 0, 0}, {0, 0, 0}) == 0.0);
    std::mt19937_64 rng(2);
    for (int n = 0; n < 100; ++n) {
        const Vec3 nv = rand3(rng, 2.0), lv = rand3(rng, 2.0);
        const ComplexMat h = kI * assemble_tensor(nv, lv);
        const double direct = (oracle::product(h, h).trace() / 2.0).real();
        CHECK(std::abs(angmom_invariant(nv, lv) - direct) < 1e-12);
        double sq = 0.0;
        for (int i = 0; i < 3; ++i) sq += nv[i] * nv[i] + lv[i] * lv[i];
        CHECK(std::abs(angmom_invariant(nv, lv) - sq) < 1e-12);
    }
}

TEST_CASE("spans")
{
    CHECK(angmom_h_span().size() == 6);
    CHECK(angmom_f_span().size() == 9);
    for (KronLabel l : angmom_h_span()) {
        const ComplexMat b = kron(l);
        CHECK((b + b.transpose()).max_abs() == 0.0);  // imaginary antisymmetric
    }
    for (KronLabel l : angmom_f_span()) {
        const ComplexMat b = kron(l);
        CHECK(b.max_imag() == 0.0);
        CHECK(max_abs_diff(b, b.transpose()) == 0.0);
    }
}

TEST_CASE("tensor is conserved and F rotates")
{
    std::mt19937_64 rng(3);
    for (int n = 0; n < 2; ++n) {
        const AngMomTensor m{rand3(rng), rand3(rng)};
        const AngMomConservation c = qbe_conservation(m, sym_traceless(rng), 5.0, 1e-3);
        CHECK(c.max_component_drift < 1e-8);
        CHECK(c.max_h_drift < 1e-8);
        CHECK(c.max_f_residual < 1e-6);
        CHECK(c.samples == 5001);
    }
}

TEST_CASE("zero constraint")
{
    const AngMomTensor m{{0.3, 0.1, -0.2}, {0.5, 0.0, 0.4}};
    const AngMomConservation c = qbe_conservation(m, std::vector<double>(9, 0.0), 1.0, 1e-2);
    CHECK(c.max_h_drift < 1e-15);
    CHECK(c.max_f_residual < 1e-15);
}

TEST_CASE("invalid constraints")
{
    const AngMomTensor m{{0.3, 0.1, -0.2}, {0.5, 0.0, 0.4}};
    // Not symmetric: overlaps with H.
    ComplexMat f = kI * assemble_tensor(m);
    CHECK_THROWS_AS(qbe_conservation(m, f, 1.0, 1e-2), QbeError);
    ComplexMat g = ComplexMat::identity(4);
    CHECK_THROWS_AS(qbe_conservation(m, g, 1.0, 1e-2), QbeError);
}

TEST_CASE("block propagator")
{
    const double nx = 0.8, lyz = -1.3, t = 0.7;
    const ComplexMat u = block_propagator(nx, lyz, t);
    CHECK(u(0, 0) == cplx(std::cos(nx * t)));
    CHECK(u(2, 3) == cplx(-std::sin(lyz * t)));
    CHECK(block_propagator(nx, lyz, 0.0) == ComplexMat::identity(4));
    CHECK(max_abs_diff(oracle::product(u.transpose(), u), ComplexMat::identity(4)) < 1e-12);

    // W exp(-itD) W^-1 with the printed eigenmatrix.
    const ComplexMat w(4, {-kI, kI, 0, 0, 1, 1, 0, 0, 0, 0, -kI, kI, 0, 0, 1, 1});
    const ComplexMat w_inv(4, {0.5 * kI, 0.5, 0, 0, -0.5 * kI, 0.5, 0, 0, 0, 0, 0.5 * kI, 0.5, 0, 0, -0.5 * kI, 0.5});
    CHECK(max_abs_diff(oracle::product(w, w_inv), ComplexMat::identity(4)) < 1e-15);
    const ComplexMat d = ComplexMat::diagonal(std::array<cplx, 4>{nx, -nx, lyz, -lyz});
    CHECK(max_abs_diff(oracle::product(oracle::product(w, mat_exp_diag(d, t)), w_inv), u) < 1e-12);

    // exp(-i H t) for H = i M with the reduced data.
    ComplexMat h(4);
    h(0, 1) = -kI * nx;
    h(1, 0) = kI * nx;
    h(2, 3) = -kI * lyz;
    h(3, 2) = kI * lyz;
    CHECK(max_abs_diff(oracle::expm(-kI * t * h), u) < 1e-12);

    // The invariant is unchanged by conjugation.
    const ComplexMat hm = kI * assemble_tensor({nx, 0, 0}, {lyz, 0, 0});
    const ComplexMat rotated = u * hm * u.transpose();
    CHECK(std::abs((rotated * rotated).trace() - (hm * hm).trace()) < 1e-12);
}

TEST_CASE("Levi-Civita")
{
    CHECK(levi_civita(0, 1, 2, 3) == 1);
    CHECK(levi_civita(1, 0, 2, 3) == -1);
    CHECK(levi_civita(1, 2, 3, 0) == -1);
    CHECK(levi_civita(0, 0, 2, 3) == 0);
}

TEST_CASE("Pauli-Lubanski vector")
{
    const double mass = 1.5;
    const Vec3 l{0.2, -0.7, 1.1};
    const PLVector w = pauli_lubanski({0, 0, 0}, l, {mass, 0, 0, 0});
    CHECK(w.w[0] == 0.0);
    for (int i = 0; i < 3; ++i) CHECK(std::abs(std::abs(w.w[i + 1]) - mass * std::abs(l[i])) < 1e-14);

    const PLVector zero = pauli_lubanski({0, 0, 0}, {0, 0, 0}, {1, 2, 3, 4});
    for (double x : zero.w) CHECK(x == 0.0);

    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int n = 0; n < 50; ++n) {
        const Vec3 nv = rand3(rng, 2.0), lv = rand3(rng, 2.0);
        const Vec4 p{u(rng), u(rng), u(rng), u(rng)};
        const PLVector pl = pauli_lubanski(nv, lv, p);
        double dot = 0.0;
        for (int mu = 0; mu < 4; ++mu) dot += pl.w[mu] * p[mu];
        CHECK(std::abs(dot) < 1e-12);
        CHECK(std::abs(minkowski_dot(raise_index(pl.w), p)) < 1e-12);

        // Linear in M and in P.
        const Vec3 n2 = rand3(rng), l2 = rand3(rng);
        const PLVector a = pauli_lubanski(n2, l2, p);
        const PLVector sum = pauli_lubanski({nv[0] + n2[0], nv[1] + n2[1], nv[2] + n2[2]},
                                            {lv[0] + l2[0], lv[1] + l2[1], lv[2] + l2[2]}, p);
        for (int mu = 0; mu < 4; ++mu) CHECK(std::abs(sum.w[mu] - pl.w[mu] - a.w[mu]) < 1e-12);
        const PLVector twice = pauli_lubanski(nv, lv, {2 * p[0], 2 * p[1], 2 * p[2], 2 * p[3]});
        for (int mu = 0; mu < 4; ++mu) CHECK(std::abs(twice.w[mu] - 2.0 * pl.w[mu]) < 1e-12);
    }
}

TEST_CASE("metric")
{
    CHECK(minkowski_dot({1, 0, 0, 0}, {1, 0, 0, 0}) == 1.0);
    CHECK(minkowski_dot({0, 1, 0, 0}, {0, 1, 0, 0}) == -1.0);
    const Vec4 up = raise_index({1, 2, 3, 4});
    CHECK(up == Vec4{1, -2, -3, -4});
}

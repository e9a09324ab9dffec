#include "brach/cliffrep.hpp"

#include <algorithm>
#include <stdexcept>

namespace brach {

namespace {

constexpr const char* kAxis = "xyz";

std::array<ComplexMat, 3> spin_from_alpha(const std::array<ComplexMat, 3>& alpha)
{
    std::array<ComplexMat, 3> spin;
    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3;
        const int k = (i + 2) % 3;
        spin[i] = 0.5 * commutator(alpha[j], alpha[k]);
    }
    return spin;
}

SpinorRep complete(RepKind kind, ComplexMat beta, std::array<ComplexMat, 3> alpha, double beta_square)
{
    SpinorRep rep{kind, beta, alpha, beta * alpha[0] * alpha[1] * alpha[2], spin_from_alpha(alpha), beta_square};
    return rep;
}

std::string axis_name(int i)
{
    return std::string(1, kAxis[i]);
}

}  // namespace

std::string to_string(RepKind kind)
{
    return kind == RepKind::Majorana ? "majorana" : "dirac";
}

RepKind parse_rep_kind(const std::string& name)
{
    if (name == "majorana") return RepKind::Majorana;
    if (name == "dirac") return RepKind::Dirac;
    throw std::invalid_argument("unknown representation '" + name + "'");
}

ComplexMat SpinorRep::mass_generator() const
{
    return kind == RepKind::Majorana ? kI * beta : beta;
}

ComplexMat SpinorRep::hamiltonian(double m, const Vec3& p) const
{
    ComplexMat h = m * mass_generator();
    for (int i = 0; i < 3; ++i) h += p[i] * alpha[i];
    return h;
}

std::array<ComplexMat, 3> SpinorRep::hermitian_spin() const
{
    return {(0.5 * kI) * spin[0], (0.5 * kI) * spin[1], (0.5 * kI) * spin[2]};
}

SpinorRep build_majorana()
{
    // Real matrices; beta is antisymmetric with beta^2 = -1.
    ComplexMat beta(4, {0, 0, 1, 0,  //
                        0, 0, 0, 1,  //
                        -1, 0, 0, 0, //
                        0, -1, 0, 0});
    ComplexMat ax(4, {1, 0, 0, 0,  //
                      0, -1, 0, 0, //
                      0, 0, -1, 0, //
                      0, 0, 0, 1});
    ComplexMat ay(4, {0, 0, 1, 0, //
                      0, 0, 0, 1, //
                      1, 0, 0, 0, //
                      0, 1, 0, 0});
    ComplexMat az(4, {0, 1, 0, 0, //
                      1, 0, 0, 0, //
                      0, 0, 0, -1, //
                      0, 0, -1, 0});
    return complete(RepKind::Majorana, beta, {ax, ay, az}, -1.0);
}

SpinorRep build_dirac()
{
    const ComplexMat beta = kron(pauli(Pauli::Z), pauli(Pauli::I));
    std::array<ComplexMat, 3> alpha{kron(pauli(Pauli::X), pauli(Pauli::X)), kron(pauli(Pauli::X), pauli(Pauli::Y)),
                                    kron(pauli(Pauli::X), pauli(Pauli::Z))};
    return complete(RepKind::Dirac, beta, alpha, 1.0);
}

SpinorRep build_rep(RepKind kind)
{
    return kind == RepKind::Majorana ? build_majorana() : build_dirac();
}

GammaSet build_gamma_scatter()
{
    const SpinorRep dirac = build_dirac();
    GammaSet out;
    out.g[0] = dirac.beta;
    for (int i = 0; i < 3; ++i) out.g[i + 1] = kI * (dirac.beta * dirac.alpha[i]);
    return out;
}

double AlgebraReport::max_violation() const
{
    double m = 0.0;
    for (const auto& [name, value] : relations) m = std::max(m, value);
    return m;
}

AlgebraReport verify_algebra(const SpinorRep& rep)
{
    const ComplexMat one = ComplexMat::identity(4);
    const ComplexMat zero = ComplexMat::zero(4);
    AlgebraReport report;
    report.rep = to_string(rep.kind);
    auto& rel = report.relations;

    for (int i = 0; i < 3; ++i) {
        const std::string ai = "alpha_" + axis_name(i);
        rel["anticomm_beta_" + ai] = max_abs_diff(anticommutator(rep.beta, rep.alpha[i]), zero);
        rel["square_" + ai] = max_abs_diff(rep.alpha[i] * rep.alpha[i], one);
        rel["gamma0_anticomm_" + ai] = max_abs_diff(anticommutator(rep.gamma0, rep.alpha[i]), zero);
        for (int j = i + 1; j < 3; ++j) {
            rel["anticomm_" + ai + "_alpha_" + axis_name(j)] =
                max_abs_diff(anticommutator(rep.alpha[i], rep.alpha[j]), zero);
        }
    }
    rel["square_beta"] = max_abs_diff(rep.beta * rep.beta, rep.beta_square * one);
    const ComplexMat g = rep.mass_generator();
    rel["square_mass_generator"] = max_abs_diff(g * g, one);
    rel["gamma0_anticomm_beta"] = max_abs_diff(anticommutator(rep.gamma0, rep.beta), zero);
    rel["gamma0_product"] = max_abs_diff(rep.gamma0, rep.beta * rep.alpha[0] * rep.alpha[1] * rep.alpha[2]);

    const auto s = rep.hermitian_spin();
    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3;
        const int k = (i + 2) % 3;
        // (i/2) eps_ijk [S_j, S_k] summed over j, k is i [S_j, S_k] for cyclic (j, k).
        rel["spin_closure_" + axis_name(i)] = max_abs_diff(s[i], kI * commutator(s[j], s[k]));
    }
    return report;
}

AlgebraReport verify_gamma_algebra(const GammaSet& gammas)
{
    static constexpr const char* kNames[] = {"t", "x", "y", "z"};
    const ComplexMat one = ComplexMat::identity(4);
    AlgebraReport report;
    report.rep = "gamma";
    for (int a = 0; a < 4; ++a) {
        report.relations[std::string("square_gamma_") + kNames[a]] = max_abs_diff(gammas.g[a] * gammas.g[a], one);
        for (int b = a + 1; b < 4; ++b) {
            report.relations[std::string("anticomm_gamma_") + kNames[a] + kNames[b]] =
                anticommutator(gammas.g[a], gammas.g[b]).max_abs();
        }
    }
    for (int i = 1; i <= 3; ++i) {
        const int j = i % 3 + 1;
        const int k = j % 3 + 1;
        report.notes[std::string("commutator_closure_") + kNames[i] + kNames[j]] =
            max_abs_diff(commutator(gammas.g[i], gammas.g[j]), gammas.g[k]);
    }
    return report;
}

}  // namespace brach

#pragma once

// Spinor representations: the real Majorana set, the Dirac-Pauli set and the
// gamma set used for the scattering algebra.

#include <array>
#include <map>
#include <string>

#include "brach/matcore.hpp"

namespace brach {

enum class RepKind { Majorana, Dirac };

std::string to_string(RepKind kind);
RepKind parse_rep_kind(const std::string& name);

/**
 * beta, alpha_{x,y,z} and the operators derived from them:
 *   gamma0 = beta alpha_x alpha_y alpha_z
 *   spin_i = 1/2 [alpha_j, alpha_k]        (i, j, k cyclic)
 *
 * beta_square is the sign s with beta^2 = s 1_4: +1 for Dirac, -1 for the
 * real Majorana beta, whose Hermitian mass term is i beta.
 */
struct SpinorRep {
    RepKind kind;
    ComplexMat beta;
    std::array<ComplexMat, 3> alpha;
    ComplexMat gamma0;
    std::array<ComplexMat, 3> spin;
    double beta_square = 1.0;

    /// Hermitian matrix multiplying the mass in H: beta (Dirac) or i beta (Majorana).
    ComplexMat mass_generator() const;
    /// H = m * mass_generator() + alpha . p
    ComplexMat hamiltonian(double m, const Vec3& p) const;
    /// Hermitian spin operators (i/2) spin_i; these satisfy S_i = (i/2) eps_ijk [S_j, S_k].
    std::array<ComplexMat, 3> hermitian_spin() const;
};

SpinorRep build_majorana();
SpinorRep build_dirac();
SpinorRep build_rep(RepKind kind);

/// gamma_t, gamma_x, gamma_y, gamma_z with gamma_a^2 = 1 and pairwise anticommutation.
struct GammaSet {
    std::array<ComplexMat, 4> g;
    const ComplexMat& t() const { return g[0]; }
    const ComplexMat& x() const { return g[1]; }
    const ComplexMat& y() const { return g[2]; }
    const ComplexMat& z() const { return g[3]; }
};

/// gamma_t = beta, gamma_i = i beta alpha_i from the Dirac-Pauli set.
GammaSet build_gamma_scatter();

/**
 * Max-abs residual per named relation. `relations` must all vanish for a
 * valid representation; `notes` holds residuals of relations that are
 * reported but not required (see verify_gamma_algebra).
 */
struct AlgebraReport {
    std::string rep;
    std::map<std::string, double> relations;
    std::map<std::string, double> notes;

    double max_violation() const;
    bool passes(double tol = 1e-12) const { return max_violation() < tol; }
};

AlgebraReport verify_algebra(const SpinorRep& rep);
/// Clifford relations of the gamma set. The commutator closure
/// [gamma_i, gamma_j] = eps_ijk gamma_k is recorded under `notes`.
AlgebraReport verify_gamma_algebra(const GammaSet& gammas);

}  // namespace brach

#pragma once

// Compton kinematics written as 4x4 matrix momenta, and the phase-deformed
// anticommutators of two spinor momenta.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

#include "brach/matcore.hpp"

namespace brach {

enum class ScatterRep { Gamma, Majorana };

std::string to_string(ScatterRep rep);
ScatterRep parse_scatter_rep(const std::string& name);

class KinematicsError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/**
 * Inputs of a Compton event. omega2 and phi are derived from energy-momentum
 * conservation unless supplied. `rotating_mass` is reserved and must stay off.
 */
struct ScatterConfig {
    double m = 1.0;
    double omega1 = 1.0;
    double theta = 0.0;
    std::optional<double> omega2;
    std::optional<double> phi;
    ScatterRep rep = ScatterRep::Gamma;
    bool rotating_mass = false;
};

/// Throws KinematicsError unless m > 0, omega1 > 0 and theta in [0, pi].
void validate(const ScatterConfig& cfg);

enum class MomentumKind { Timelike, Lightlike };

struct MatMomentum {
    ComplexMat mat;
    MomentumKind kind;
};

/// Electron before/after (p1, p2) and photon before/after (q1, q2).
struct Momenta {
    MatMomentum p1;
    MatMomentum p2;
    MatMomentum q1;
    MatMomentum q2;
    double omega2 = 0.0;
    double e2 = 0.0;  ///< outgoing electron energy
    double p2_mag = 0.0;
    double phi = 0.0;  ///< electron recoil angle
};

/// 1 / (1/omega1 + (1 - cos theta) / m).
double compton_omega2(double m, double omega1, double theta);

/**
 * Time generator T and spatial generators X, Y of an embedding:
 *   gamma:    T = gamma_t, X = gamma_x, Y = gamma_y
 *   majorana: T = i beta,  X = alpha_x, Y = alpha_y
 * In both, T^2 = X^2 = Y^2 = 1 and the three anticommute pairwise.
 */
struct Embedding {
    ComplexMat t;
    ComplexMat x;
    ComplexMat y;
};

Embedding embedding(ScatterRep rep);

/**
 *   p1 = m T
 *   p2 = E2 T + i |p2| (X cos phi + Y sin phi)
 *   q1 = omega1 (T + i X)
 *   q2 = omega2 (T + i (X cos theta + Y sin theta))
 * Throws KinematicsError if omega2 <= 0 or E2 <= 0.
 */
Momenta build_momenta(const ScatterConfig& cfg);

struct ConservationReport {
    double omega2 = 0.0;
    double omega2_matrix = 0.0;    ///< omega2 solved from the matrix anticommutators
    double residual_energy = 0.0;  ///< |E2^2 - |p2|^2 - m^2|
    double residual_compton = 0.0; ///< |2m(w1 - w2) - 2 w1 w2 (1 - cos theta)|
    double residual_matrix = 0.0;  ///< max |p2^2 - (p1^2 + {q1 - q2, p1} - {q1, q2})|
    double residual_momentum = 0.0;///< max |p2 - (p1 + q1 - q2)|
    double nilpotency = 0.0;       ///< max(|q1^2|, |q2^2|)
};

ConservationReport verify_conservation(const ScatterConfig& cfg);

/**
 * 1/2 (p q + q p) for
 *   p = [[0, -i e^{-i theta} p.sigma], [i e^{i theta} p.sigma, 0]]
 *   q = [[0, -i q.sigma], [i q.sigma, 0]],
 * in closed form: cos(theta) (p.q) 1 + sin(theta) diag((p x q).sigma, -(p x q).sigma).
 */
ComplexMat phased_anticommutator_block(const Vec3& p, const Vec3& q, double theta);

/// The block-embedded momentum p(theta) above.
ComplexMat phased_block_momentum(const Vec3& p, double theta);

/// Majorana momentum with its p_y entries phased by e^{-/+ i phi}.
ComplexMat majorana_phased_momentum(const Vec3& p, double phi);

/// p_x q_x + cos(phi) p_y q_y + p_z q_z, the scalar of 1/2 {p(phi), q(0)}.
double majorana_phased_dot(const Vec3& p, const Vec3& q, double phi);

}  // namespace brach

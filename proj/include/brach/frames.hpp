#pragma once

// Fixed-operator versus fixed-state descriptions of the Majorana system:
// the bilinear identities linking Psi(0) = v and Psi(t) = w, the diagonal
// unitary they imply, and the Klein-Gordon identity H(t)^2 = E^2 1.

#include <map>
#include <string>
#include <vector>

#include "brach/matcore.hpp"

namespace brach {

/// psi^dagger h psi.
cplx expectation(const ComplexMat& h, const Spinor& psi);

struct FrameCase {
    Spinor v{};
    Spinor w{};
    double t = 0.0;
    double m = 0.0;
    Vec3 p{};
};

/**
 * Case with w = U(t,0)^dagger v, the state for which
 * <w|H(0)|w> = <v|H(t)|v> when H(t) = U(t,0) H(0) U(t,0)^dagger.
 */
FrameCase make_frame_case(const Spinor& v, double t, double m, const Vec3& p);

struct FrameReport {
    /// "norm_balance", "pz_bilinear", "py_bilinear", "mass_bilinear", "expectation".
    std::map<std::string, double> residuals;
    double max_residual = 0.0;
    bool pass = false;
};

inline constexpr double kFrameTol = 1e-10;

/**
 * |w1|^2 - |w3|^2 + |w4|^2 - |w2|^2                = same in v
 * w1* w2 + w2* w1 - w3* w4 - w4* w3                = same in v
 * w1* w3 + w3* w1 + w2* w4 + w4* w2                = v1* v3 e^{-2iEt} + c.c. + v2* v4 e^{-2iEt} + c.c.
 * w1* w3 - w3* w1 + w2* w4 - w4* w2                = v1* v3 e^{-2iEt} - c.c. + v2* v4 e^{-2iEt} - c.c.
 * <w|H(0)|w>                                       = <v|H(t)|v>
 * Residuals are max-abs; the verdict is PASS when all are below tol.
 */
FrameReport check_frame_equivalence(const FrameCase& fc, double tol = kFrameTol);

/// Diagonal unitary R with w = R v solved from the bilinear identities:
/// diag(e^{2iEt}, e^{2iEt}, 1, 1).
ComplexMat recover_diagonal_unitary(double m, const Vec3& p, double t);

/// max over t of max |H(t)^2 - (m^2 + |p|^2) 1|.
double check_klein_gordon(double m, const Vec3& p, const std::vector<double>& t_grid);

}  // namespace brach

#pragma once

// Closed-form diagonalisation of the Majorana Hamiltonian, the
// time-dependent eigenmatrix W(t) = exp(-i t D) W(0), the two-time
// propagator U(t,s) = W(t) W^-1(s), and the mass-constancy classifier.

#include <array>
#include <string>
#include <vector>

#include "brach/cliffrep.hpp"
#include "brach/matcore.hpp"

namespace brach {

/**
 * Eigenvector matrix w, its inverse and D = E diag(1, 1, -1, -1).
 * `degenerate` marks a frame built by the numerical fallback (p_y = m = 0),
 * where the closed form is singular.
 */
struct EigenFrame {
    ComplexMat w;
    ComplexMat w_inv;
    ComplexMat d;
    double energy = 0.0;
    bool degenerate = false;
};

/// |p_y - i m| below this fraction of E selects the numerical fallback frame.
inline constexpr double kDegeneracyThreshold = 1e-9;

EigenFrame majorana_eigenframe(double m, const Vec3& p);

/**
 * kStripped folds the universal factor e^{-iEt} into W(t), giving
 * U(t,s) = diag(e^{-2iE(t-s)}, e^{-2iE(t-s)}, 1, 1). kEigen keeps
 * W(t) = exp(-i t D) W(0), so U(t,s) = exp(-i (t-s) D).
 */
enum class PhaseConvention { kStripped, kEigen };

ComplexMat eigenframe_at(const EigenFrame& frame, double t, PhaseConvention conv = PhaseConvention::kStripped);
ComplexMat eigenframe_inv_at(const EigenFrame& frame, double t, PhaseConvention conv = PhaseConvention::kStripped);

class Propagator {
public:
    Propagator(EigenFrame frame, PhaseConvention conv) : frame_(std::move(frame)), conv_(conv) {}

    /// W(t) W^-1(s).
    ComplexMat u(double t, double s) const;
    /// The diagonal closed form of u(t, s) for this convention.
    ComplexMat closed_form(double t, double s) const;

    const EigenFrame& frame() const { return frame_; }
    PhaseConvention convention() const { return conv_; }

private:
    EigenFrame frame_;
    PhaseConvention conv_;
};

Propagator propagator(const EigenFrame& frame, PhaseConvention conv = PhaseConvention::kStripped);

/// diag(e^{-2iEt}, e^{-2iEt}, 1, 1).
ComplexMat block_phase_unitary(double energy, double t);

/// U(t,0) h0 U(t,0)^dagger. Throws std::invalid_argument if frame does not diagonalise h0.
ComplexMat evolve_hamiltonian(const EigenFrame& frame, const ComplexMat& h0, double t);

/// c_a = Tr[h Upsilon_a] / 4 in basis16() order.
std::array<cplx, 16> project_coeffs(const ComplexMat& h);

enum class MassVerdict { Constant, Rotating, Unclassified };
std::string to_string(MassVerdict v);

struct MassReport {
    std::string rep;
    MassVerdict verdict = MassVerdict::Unclassified;
    std::vector<double> times;
    std::vector<cplx> mass_series;
    std::vector<double> modulus_series;
    std::vector<double> phase_series;  ///< unwrapped arg m(t)
    double phase_rate = 0.0;           ///< least-squares slope of phase_series
    double expected_rate = 0.0;        ///< 2E for Majorana, 0 for Dirac
    double max_deviation = 0.0;        ///< max |m(t) - m(0)|
    double modulus_deviation = 0.0;    ///< max ||m(t)| - |m(0)||
    double phase_fit_residual = 0.0;   ///< max |phase - linear fit|
};

/**
 * Complex amplitude of the mass channel of h: Tr[h Q] / Tr[G Q], where G is
 * the rep's mass generator and Q is its upper-right block when G is
 * block-off-diagonal (Majorana), otherwise G itself (Dirac).
 */
cplx mass_channel(const SpinorRep& rep, const ComplexMat& h);

/// H(t) for the rep: the analytic Majorana propagator, or the block-phase
/// unitary for Dirac.
ComplexMat evolved_hamiltonian(const SpinorRep& rep, double m0, const Vec3& p, double t);

/**
 * Mass series m(t) = m0 c(t) / c(0) with c = mass_channel(H(t)).
 * CONSTANT when max |m(t) - m(0)| < tol max(1, |m0|); ROTATING when the
 * modulus is constant to the same tolerance and the unwrapped phase is
 * linear to `phase_tol`; UNCLASSIFIED otherwise.
 */
MassReport classify_mass(const SpinorRep& rep, double m0, const Vec3& p, const std::vector<double>& t_grid,
                         double tol = 1e-10, double phase_tol = 1e-8);

}  // namespace brach

#pragma once

// Brachistochrone systems: a Hamiltonian H spanned by a set of Kronecker
// labels, a constraint F spanned by the trace-orthogonal complement, and the
// matrix flow
//
//     i d/dt (H + F) = [H, F].

#include <stdexcept>
#include <string>
#include <vector>

#include "brach/matcore.hpp"

namespace brach {

class QbeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Traceless labels not in h_span. Throws if h_span contains the identity.
std::vector<KronLabel> complement_span(const std::vector<KronLabel>& h_span);

/// sum_a lambda_a Upsilon_a over f_span.
ComplexMat assemble_constraint(const std::vector<KronLabel>& f_span, const std::vector<double>& lambda);

/// Tr[[h, f] g].
cplx trace_project_rhs(const ComplexMat& h, const ComplexMat& f, const ComplexMat& g);

/// Projection sum_a Re(Tr[a Upsilon_a]) / 4 Upsilon_a onto the given labels.
ComplexMat project_onto(const ComplexMat& a, const std::vector<KronLabel>& labels);

/// |Tr[h^2 / 2] - k|.
double check_isotropic(const ComplexMat& h, double k);

/// <psi|h^2|psi> - <psi|h|psi>^2; psi must be normalised to 1e-12.
double energy_variance(const ComplexMat& h, const Spinor& psi);

/**
 * Initial data for the brachistochrone flow. Membership of a label in
 * h_span or f_span is declared, never inferred from coefficient values.
 */
struct BrachSystem {
    ComplexMat h0;
    std::vector<KronLabel> h_span;
    std::vector<KronLabel> f_span;
    std::vector<double> lambda0;
    double k = 0.0;

    ComplexMat f0() const { return assemble_constraint(f_span, lambda0); }
};

/**
 * Validated constructor. Checks Tr[h0] = 0, h0 inside span(h_span),
 * disjoint spans without the identity, Tr[h0 F0] = 0, and sets
 * k = Tr[h0^2 / 2]. Throws QbeError on any violation.
 */
BrachSystem make_brach_system(const ComplexMat& h0, std::vector<KronLabel> h_span, std::vector<KronLabel> f_span,
                              std::vector<double> lambda0, double tol = kDefaultTol);

/// Labels of the Majorana Hamiltonian i beta m + alpha . p: (y,1), (z,z), (x,1), (z,x).
std::vector<KronLabel> majorana_h_span();

/**
 * Majorana system for (m, p). The constraint is lambda_(z,1) = -E and zero
 * elsewhere; with that choice the flow reproduces the closed-form
 * H(t) = U(t,0) H(0) U(t,0)^dagger of the propagate module.
 */
BrachSystem majorana_system(double m, const Vec3& p);

struct Trajectory {
    std::vector<double> times;
    std::vector<ComplexMat> h_t;
    std::vector<ComplexMat> f_t;
    double step = 0.0;
    /// Largest |Tr A| of the un-projected RK4 output over all steps.
    double max_raw_trace = 0.0;
    /// Largest component of the raw output outside span(h_span + f_span).
    double max_leak = 0.0;
};

/**
 * Fixed-step classical RK4 on A = H + F with dA/dt = -i [P_h(A), P_f(A)],
 * re-projecting A onto the traceless Hermitian basis after each step.
 * Every `record_every`-th state (and the last) is stored. When t_end is not
 * a multiple of step the final step is shortened.
 */
Trajectory integrate_qbe(const BrachSystem& sys, double t_end, double step, int record_every = 1);

struct ConservationResiduals {
    double trace_a2 = 0.0;     ///< max |Tr[A^2](t) - Tr[A^2](0)|
    double trace_h = 0.0;      ///< max |Tr H(t)|, including the raw RK4 output
    double trace_f = 0.0;      ///< max |Tr F(t)|
    double trace_hf = 0.0;     ///< max |Tr[H F](t)|
    double spectrum = 0.0;     ///< max eigenvalue drift of A(t)
    double hermiticity = 0.0;  ///< max |A - A^dagger|
};

ConservationResiduals conservation_residuals(const Trajectory& traj);

/// Residuals of a single state relative to the initial one (used for CSV rows).
ConservationResiduals state_residuals(const ComplexMat& h, const ComplexMat& f, const ComplexMat& h0,
                                      const ComplexMat& f0);

}  // namespace brach

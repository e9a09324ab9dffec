#pragma once

// Four-dimensional angular momentum: the antisymmetric tensor M built from
// boosts N and rotations L, the toy Hamiltonian H = iM, its brachistochrone
// conservation, the reduced block propagator and the Pauli-Lubanski vector.

#include <array>
#include <vector>

#include "brach/matcore.hpp"

namespace brach {

using Vec4 = std::array<double, 4>;

/// n = (N_x, N_y, N_z), l = (L_yz, L_zx, L_xy).
struct AngMomTensor {
    Vec3 n{};
    Vec3 l{};
};

/**
 *     [ 0    -N_x   -N_y   -N_z ]
 *     [ N_x   0      L_xy  -L_zx]
 *     [ N_y  -L_xy   0      L_yz]
 *     [ N_z   L_zx  -L_yz   0   ]
 */
ComplexMat assemble_tensor(const Vec3& n, const Vec3& l);
inline ComplexMat assemble_tensor(const AngMomTensor& m) { return assemble_tensor(m.n, m.l); }

/// Reads (n, l) back out of an antisymmetric tensor.
AngMomTensor tensor_components(const ComplexMat& m);

/// Tr[(iM)^2 / 2].
double angmom_invariant(const Vec3& n, const Vec3& l);

/// Labels spanning iM for real antisymmetric M (odd number of sigma_y factors).
std::vector<KronLabel> angmom_h_span();
/// Labels spanning real symmetric traceless matrices.
std::vector<KronLabel> angmom_f_span();

struct AngMomConservation {
    double max_h_drift = 0.0;          ///< max_t max |H(t) - H(0)|
    double max_component_drift = 0.0;  ///< max over the six N_i, L_ij
    double max_f_residual = 0.0;       ///< max |F(t) - e^{Mt} F(0) e^{-Mt}|
    double trace_hf0 = 0.0;            ///< |Tr[H F]| at t = 0
    std::size_t samples = 0;
};

/**
 * Integrates the brachistochrone flow for H = iM with the symmetric
 * traceless constraint F0 given as 9 coefficients over angmom_f_span().
 * Throws QbeError if Tr[H F0] != 0.
 */
AngMomConservation qbe_conservation(const AngMomTensor& m, const std::vector<double>& f0, double t_end, double step);
/// Same, with F0 as a matrix. Throws QbeError if Tr[H F0] != 0 or F0 is not
/// real symmetric traceless.
AngMomConservation qbe_conservation(const AngMomTensor& m, const ComplexMat& f0, double t_end, double step);

/// Block rotation by N_x t (upper) and L_yz t (lower), reduced data N_y = N_z = 0.
ComplexMat block_propagator(double n_x, double l_yz, double t);

/// W_mu = 1/2 eps_{mu nu rho sigma} M^{nu rho} P^sigma with eps_{0123} = +1.
/// Returned with lower index.
struct PLVector {
    Vec4 w{};
};

PLVector pauli_lubanski(const Vec3& n, const Vec3& l, const Vec4& p);

/// Minkowski product with signature (+, -, -, -) for two contravariant vectors.
double minkowski_dot(const Vec4& a, const Vec4& b);
/// Raises the index of a covariant vector with diag(+1, -1, -1, -1).
Vec4 raise_index(const Vec4& lower);

/// Levi-Civita symbol with eps_{0123} = +1.
int levi_civita(int a, int b, int c, int d);

}  // namespace brach

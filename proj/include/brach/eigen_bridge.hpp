#pragma once

// Conversions between ComplexMat and Eigen, plus the dense eigensolvers used
// for spectra and fallback frames.

#include <array>

#include <Eigen/Dense>

#include "brach/matcore.hpp"

namespace brach {

using EigenMat4 = Eigen::Matrix<cplx, 4, 4>;

inline EigenMat4 to_eigen(const ComplexMat& a)
{
    if (a.dim() != 4) throw DimensionError("to_eigen: expects a 4x4 matrix");
    EigenMat4 out;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out(r, c) = a(r, c);
    return out;
}

inline ComplexMat from_eigen(const EigenMat4& a)
{
    ComplexMat out(4);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out(r, c) = a(r, c);
    return out;
}

/// Ascending eigenvalues of the Hermitian part of a.
inline std::array<double, 4> hermitian_eigenvalues(const ComplexMat& a)
{
    const EigenMat4 m = to_eigen(a);
    Eigen::SelfAdjointEigenSolver<EigenMat4> solver(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
    const auto& ev = solver.eigenvalues();
    return {ev(0), ev(1), ev(2), ev(3)};
}

}  // namespace brach

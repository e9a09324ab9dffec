#include "brach/frames.hpp"

#include <algorithm>
#include <cmath>

#include "brach/cliffrep.hpp"
#include "brach/propagate.hpp"

namespace brach {

namespace {

double energy_of(double m, const Vec3& p)
{
    return std::sqrt(m * m + p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
}

ComplexMat hamiltonian_at(double m, const Vec3& p, double t)
{
    return evolved_hamiltonian(build_majorana(), m, p, t);
}

}  // namespace

cplx expectation(const ComplexMat& h, const Spinor& psi)
{
    if (h.dim() != 4) throw DimensionError("expectation: expects a 4x4 matrix");
    return inner(psi, brach::apply(h, psi));
}

FrameCase make_frame_case(const Spinor& v, double t, double m, const Vec3& p)
{
    const ComplexMat u = block_phase_unitary(energy_of(m, p), t);
    return {v, brach::apply(u.adjoint(), v), t, m, p};
}

FrameReport check_frame_equivalence(const FrameCase& fc, double tol)
{
    const Spinor& v = fc.v;
    const Spinor& w = fc.w;
    const double energy = energy_of(fc.m, fc.p);
    const cplx ph = std::exp(-2.0 * kI * energy * fc.t);
    auto b = [](const Spinor& s, int i, int j) { return std::conj(s[i]) * s[j]; };

    FrameReport r;
    auto norm_balance = [&](const Spinor& s) { return std::norm(s[0]) - std::norm(s[2]) + std::norm(s[3]) - std::norm(s[1]); };
    r.residuals["norm_balance"] = std::abs(norm_balance(w) - norm_balance(v));

    auto pz = [&](const Spinor& s) { return b(s, 0, 1) + b(s, 1, 0) - b(s, 2, 3) - b(s, 3, 2); };
    r.residuals["pz_bilinear"] = std::abs(pz(w) - pz(v));

    const cplx py_w = b(w, 0, 2) + b(w, 2, 0) + b(w, 1, 3) + b(w, 3, 1);
    const cplx py_v = b(v, 0, 2) * ph + b(v, 2, 0) * std::conj(ph) + b(v, 1, 3) * ph + b(v, 3, 1) * std::conj(ph);
    r.residuals["py_bilinear"] = std::abs(py_w - py_v);

    const cplx mass_w = b(w, 0, 2) - b(w, 2, 0) + b(w, 1, 3) - b(w, 3, 1);
    const cplx mass_v = b(v, 0, 2) * ph - b(v, 2, 0) * std::conj(ph) + b(v, 1, 3) * ph - b(v, 3, 1) * std::conj(ph);
    r.residuals["mass_bilinear"] = std::abs(mass_w - mass_v);

    const cplx lhs = expectation(hamiltonian_at(fc.m, fc.p, 0.0), w);
    const cplx rhs = expectation(hamiltonian_at(fc.m, fc.p, fc.t), v);
    r.residuals["expectation"] = std::abs(lhs - rhs);

    for (const auto& [name, value] : r.residuals) r.max_residual = std::max(r.max_residual, value);
    r.pass = r.max_residual < tol;
    return r;
}

ComplexMat recover_diagonal_unitary(double m, const Vec3& p, double t)
{
    // The py and mass identities together fix w1* w3 = v1* v3 e^{-2iEt} and
    // w2* w4 = v2* v4 e^{-2iEt}; with |w_i| = |v_i| and the lower pair held
    // fixed, the upper pair picks up e^{2iEt}.
    const cplx a = std::exp(2.0 * kI * energy_of(m, p) * t);
    const std::array<cplx, 4> d{a, a, 1.0, 1.0};
    return ComplexMat::diagonal(d);
}

double check_klein_gordon(double m, const Vec3& p, const std::vector<double>& t_grid)
{
    const double e2 = m * m + p[0] * p[0] + p[1] * p[1] + p[2] * p[2];
    const ComplexMat target = e2 * ComplexMat::identity(4);
    double worst = 0.0;
    for (double t : t_grid) {
        const ComplexMat h = hamiltonian_at(m, p, t);
        worst = std::max(worst, max_abs_diff(h * h, target));
    }
    return worst;
}

}  // namespace brach

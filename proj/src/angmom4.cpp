#include "brach/angmom4.hpp"

#include <algorithm>
#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

#include "brach/eigen_bridge.hpp"
#include "brach/qbe.hpp"

namespace brach {

namespace {

int odd_y_count(KronLabel l)
{
    return (l.first == Pauli::Y ? 1 : 0) + (l.second == Pauli::Y ? 1 : 0);
}

}  // namespace

ComplexMat assemble_tensor(const Vec3& n, const Vec3& l)
{
    const double lyz = l[0];
    const double lzx = l[1];
    const double lxy = l[2];
    return ComplexMat(4, {0.0, -n[0], -n[1], -n[2], //
                          n[0], 0.0, lxy, -lzx,     //
                          n[1], -lxy, 0.0, lyz,     //
                          n[2], lzx, -lyz, 0.0});
}

AngMomTensor tensor_components(const ComplexMat& m)
{
    return {{m(1, 0).real(), m(2, 0).real(), m(3, 0).real()}, {m(2, 3).real(), m(3, 1).real(), m(1, 2).real()}};
}

double angmom_invariant(const Vec3& n, const Vec3& l)
{
    const ComplexMat h = kI * assemble_tensor(n, l);
    return (trace_pair(h, h) / 2.0).real();
}

std::vector<KronLabel> angmom_h_span()
{
    std::vector<KronLabel> out;
    for (KronLabel l : traceless_labels())
        if (odd_y_count(l) == 1) out.push_back(l);
    return out;
}

std::vector<KronLabel> angmom_f_span()
{
    std::vector<KronLabel> out;
    for (KronLabel l : traceless_labels())
        if (odd_y_count(l) != 1) out.push_back(l);
    return out;
}

AngMomConservation qbe_conservation(const AngMomTensor& m, const std::vector<double>& f0, double t_end, double step)
{
    return qbe_conservation(m, assemble_constraint(angmom_f_span(), f0), t_end, step);
}

AngMomConservation qbe_conservation(const AngMomTensor& m, const ComplexMat& f0, double t_end, double step)
{
    const ComplexMat tensor = assemble_tensor(m);
    const ComplexMat h0 = kI * tensor;

    AngMomConservation out;
    out.trace_hf0 = std::abs(trace_pair(h0, f0));
    if (out.trace_hf0 > kDefaultTol) throw QbeError("qbe_conservation: Tr[H F] != 0 at t = 0");
    if (f0.max_imag() > kDefaultTol || max_abs_diff(f0, f0.transpose()) > kDefaultTol ||
        std::abs(f0.trace()) > kDefaultTol) {
        throw QbeError("qbe_conservation: constraint must be real, symmetric and traceless");
    }

    const auto f_span = angmom_f_span();
    std::vector<double> lambda;
    for (KronLabel l : f_span) lambda.push_back(trace_pair(f0, kron(l)).real() / 4.0);

    const BrachSystem sys = make_brach_system(h0, angmom_h_span(), f_span, lambda);
    const Trajectory traj = integrate_qbe(sys, t_end, step);

    const EigenMat4 gen = to_eigen(tensor);
    const EigenMat4 f_init = to_eigen(sys.f0());
    const AngMomTensor c0 = tensor_components(-kI * traj.h_t.front());
    for (std::size_t k = 0; k < traj.times.size(); ++k) {
        const double t = traj.times[k];
        out.max_h_drift = std::max(out.max_h_drift, max_abs_diff(traj.h_t[k], h0));

        const AngMomTensor c = tensor_components(-kI * traj.h_t[k]);
        for (int i = 0; i < 3; ++i) {
            out.max_component_drift = std::max(out.max_component_drift, std::abs(c.n[i] - c0.n[i]));
            out.max_component_drift = std::max(out.max_component_drift, std::abs(c.l[i] - c0.l[i]));
        }

        const EigenMat4 rot = (gen * t).exp();
        const ComplexMat exact = from_eigen(rot * f_init * rot.inverse());
        out.max_f_residual = std::max(out.max_f_residual, max_abs_diff(traj.f_t[k], exact));
    }
    out.samples = traj.times.size();
    return out;
}

ComplexMat block_propagator(double n_x, double l_yz, double t)
{
    const double c1 = std::cos(n_x * t);
    const double s1 = std::sin(n_x * t);
    const double c2 = std::cos(l_yz * t);
    const double s2 = std::sin(l_yz * t);
    return ComplexMat(4, {c1, -s1, 0.0, 0.0, //
                          s1, c1, 0.0, 0.0,  //
                          0.0, 0.0, c2, -s2, //
                          0.0, 0.0, s2, c2});
}

int levi_civita(int a, int b, int c, int d)
{
    const std::array<int, 4> idx{a, b, c, d};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (idx[i] == idx[j]) return 0;
    int sign = 1;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (idx[i] > idx[j]) sign = -sign;
    return sign;
}

PLVector pauli_lubanski(const Vec3& n, const Vec3& l, const Vec4& p)
{
    const ComplexMat m = assemble_tensor(n, l);
    PLVector out;
    for (int mu = 0; mu < 4; ++mu) {
        double acc = 0.0;
        for (int nu = 0; nu < 4; ++nu)
            for (int rho = 0; rho < 4; ++rho)
                for (int sigma = 0; sigma < 4; ++sigma) {
                    const int eps = levi_civita(mu, nu, rho, sigma);
                    if (eps != 0) acc += eps * m(nu, rho).real() * p[sigma];
                }
        out.w[mu] = 0.5 * acc;
    }
    return out;
}

double minkowski_dot(const Vec4& a, const Vec4& b)
{
    return a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3];
}

Vec4 raise_index(const Vec4& lower)
{
    return {lower[0], -lower[1], -lower[2], -lower[3]};
}

}  // namespace brach

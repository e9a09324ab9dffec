#include "brach/qbe.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "brach/eigen_bridge.hpp"

namespace brach {

namespace {

bool contains(const std::vector<KronLabel>& labels, KronLabel l)
{
    return std::find(labels.begin(), labels.end(), l) != labels.end();
}

void require_4x4(const ComplexMat& a, const char* what)
{
    if (a.dim() != 4) throw DimensionError(std::string(what) + ": expects 4x4 matrices");
}

bool finite(const ComplexMat& a)
{
    for (const cplx& z : a.entries())
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

}  // namespace

std::vector<KronLabel> complement_span(const std::vector<KronLabel>& h_span)
{
    for (KronLabel l : h_span) {
        if (l.is_identity()) throw QbeError("complement_span: identity label in Hamiltonian span");
    }
    std::vector<KronLabel> out;
    for (KronLabel l : traceless_labels())
        if (!contains(h_span, l)) out.push_back(l);
    return out;
}

ComplexMat assemble_constraint(const std::vector<KronLabel>& f_span, const std::vector<double>& lambda)
{
    if (f_span.size() != lambda.size()) {
        throw std::invalid_argument("assemble_constraint: " + std::to_string(f_span.size()) + " labels but " +
                                    std::to_string(lambda.size()) + " coefficients");
    }
    ComplexMat f(4);
    for (std::size_t a = 0; a < f_span.size(); ++a) f += lambda[a] * kron(f_span[a]);
    return f;
}

cplx trace_project_rhs(const ComplexMat& h, const ComplexMat& f, const ComplexMat& g)
{
    return trace_pair(commutator(h, f), g);
}

ComplexMat project_onto(const ComplexMat& a, const std::vector<KronLabel>& labels)
{
    require_4x4(a, "project_onto");
    ComplexMat out(4);
    const auto& basis = basis16();
    for (KronLabel l : labels) {
        const ComplexMat& u = basis[l.index()].mat;
        out += (trace_pair(a, u).real() / 4.0) * u;
    }
    return out;
}

double check_isotropic(const ComplexMat& h, double k)
{
    return std::abs(trace_pair(h, h) / 2.0 - k);
}

double energy_variance(const ComplexMat& h, const Spinor& psi)
{
    if (std::abs(norm(psi) - 1.0) > 1e-12) throw std::invalid_argument("energy_variance: state is not normalised");
    const Spinor hpsi = brach::apply(h, psi);
    const double mean = inner(psi, hpsi).real();
    const double mean_sq = inner(hpsi, hpsi).real();  // <psi|h^2|psi> for Hermitian h
    return std::max(0.0, mean_sq - mean * mean);
}

BrachSystem make_brach_system(const ComplexMat& h0, std::vector<KronLabel> h_span, std::vector<KronLabel> f_span,
                              std::vector<double> lambda0, double tol)
{
    require_4x4(h0, "make_brach_system");
    for (KronLabel l : h_span)
        if (l.is_identity()) throw QbeError("Hamiltonian span contains the identity label");
    for (KronLabel l : f_span) {
        if (l.is_identity()) throw QbeError("constraint span contains the identity label");
        if (contains(h_span, l)) throw QbeError("label " + l.name() + " is in both spans");
    }
    if (!is_hermitian(h0, tol)) throw QbeError("initial Hamiltonian is not Hermitian");
    if (std::abs(h0.trace()) > tol) throw QbeError("initial Hamiltonian is not trace-free");
    if (max_abs_diff(project_onto(h0, h_span), h0) > tol) {
        throw QbeError("initial Hamiltonian has components outside its declared span");
    }
    BrachSystem sys{h0, std::move(h_span), std::move(f_span), std::move(lambda0), 0.0};
    const ComplexMat f0 = sys.f0();
    if (std::abs(trace_pair(h0, f0)) > tol) throw QbeError("Tr[H F] != 0 at t = 0");
    sys.k = (trace_pair(h0, h0) / 2.0).real();
    return sys;
}

std::vector<KronLabel> majorana_h_span()
{
    return {KronLabel::parse("y1"), KronLabel::parse("zz"), KronLabel::parse("x1"), KronLabel::parse("zx")};
}

BrachSystem majorana_system(double m, const Vec3& p)
{
    // i beta m + alpha . p written directly in the Kronecker basis.
    const ComplexMat h0 = -m * kron(KronLabel::parse("y1")) + p[0] * kron(KronLabel::parse("zz")) +
                          p[1] * kron(KronLabel::parse("x1")) + p[2] * kron(KronLabel::parse("zx"));
    const double energy = std::sqrt(m * m + p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
    auto h_span = majorana_h_span();
    auto f_span = complement_span(h_span);
    std::vector<double> lambda(f_span.size(), 0.0);
    const auto it = std::find(f_span.begin(), f_span.end(), KronLabel::parse("z1"));
    lambda[static_cast<std::size_t>(it - f_span.begin())] = -energy;
    return make_brach_system(h0, std::move(h_span), std::move(f_span), std::move(lambda));
}

Trajectory integrate_qbe(const BrachSystem& sys, double t_end, double step, int record_every)
{
    if (!(step > 0.0) || !(t_end > 0.0)) throw std::invalid_argument("integrate_qbe: step and t_end must be positive");
    if (record_every < 1) throw std::invalid_argument("integrate_qbe: record_every must be >= 1");

    std::vector<KronLabel> all = sys.h_span;
    all.insert(all.end(), sys.f_span.begin(), sys.f_span.end());

    auto rhs = [&](const ComplexMat& a) {
        const ComplexMat h = project_onto(a, sys.h_span);
        const ComplexMat f = project_onto(a, sys.f_span);
        return -kI * commutator(h, f);
    };

    Trajectory traj;
    traj.step = step;
    ComplexMat a = sys.h0 + sys.f0();
    auto record = [&](double t) {
        traj.times.push_back(t);
        traj.h_t.push_back(project_onto(a, sys.h_span));
        traj.f_t.push_back(project_onto(a, sys.f_span));
    };
    record(0.0);

    const auto n_full = static_cast<long>(std::floor(t_end / step * (1.0 + 1e-12)));
    const double remainder = t_end - static_cast<double>(n_full) * step;
    const long n_steps = n_full + (remainder > step * 1e-9 ? 1 : 0);

    for (long n = 1; n <= n_steps; ++n) {
        const double dt = (n > n_full) ? remainder : step;
        const ComplexMat k1 = rhs(a);
        const ComplexMat k2 = rhs(a + (0.5 * dt) * k1);
        const ComplexMat k3 = rhs(a + (0.5 * dt) * k2);
        const ComplexMat k4 = rhs(a + dt * k3);
        const ComplexMat raw = a + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        const double t = (n > n_full) ? t_end : static_cast<double>(n) * step;
        if (!finite(raw)) {
            std::ostringstream msg;
            msg << "integrate_qbe: non-finite state at t = " << t;
            throw QbeError(msg.str());
        }
        traj.max_raw_trace = std::max(traj.max_raw_trace, std::abs(raw.trace()));
        a = project_onto(raw, traceless_labels());
        traj.max_leak = std::max(traj.max_leak, max_abs_diff(a, project_onto(a, all)));
        if (n % record_every == 0 || n == n_steps) record(t);
    }
    return traj;
}

ConservationResiduals state_residuals(const ComplexMat& h, const ComplexMat& f, const ComplexMat& h0,
                                      const ComplexMat& f0)
{
    const ComplexMat a0 = h0 + f0;
    const ComplexMat a = h + f;
    const auto ev0 = hermitian_eigenvalues(a0);
    const auto ev = hermitian_eigenvalues(a);
    ConservationResiduals r;
    r.trace_a2 = std::abs(trace_pair(a, a) - trace_pair(a0, a0));
    r.trace_h = std::abs(h.trace());
    r.trace_f = std::abs(f.trace());
    r.trace_hf = std::abs(trace_pair(h, f));
    for (int k = 0; k < 4; ++k) r.spectrum = std::max(r.spectrum, std::abs(ev[k] - ev0[k]));
    r.hermiticity = max_abs_diff(a, a.adjoint());
    return r;
}

ConservationResiduals conservation_residuals(const Trajectory& traj)
{
    ConservationResiduals worst;
    if (traj.h_t.empty()) return worst;
    for (std::size_t n = 0; n < traj.h_t.size(); ++n) {
        const auto r = state_residuals(traj.h_t[n], traj.f_t[n], traj.h_t.front(), traj.f_t.front());
        worst.trace_a2 = std::max(worst.trace_a2, r.trace_a2);
        worst.trace_h = std::max(worst.trace_h, r.trace_h);
        worst.trace_f = std::max(worst.trace_f, r.trace_f);
        worst.trace_hf = std::max(worst.trace_hf, r.trace_hf);
        worst.spectrum = std::max(worst.spectrum, r.spectrum);
        worst.hermiticity = std::max(worst.hermiticity, r.hermiticity);
    }
    worst.trace_h = std::max(worst.trace_h, traj.max_raw_trace);
    return worst;
}

}  // namespace brach

#include "brach/propagate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "brach/eigen_bridge.hpp"

namespace brach {

namespace {

double energy_of(double m, const Vec3& p)
{
    return std::sqrt(m * m + p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
}

ComplexMat frame_diagonal(double energy)
{
    const std::array<cplx, 4> d{energy, energy, -energy, -energy};
    return ComplexMat::diagonal(d);
}

// Orthonormal eigenbasis ordered (E, E, -E, -E); inside each pair the
// columns are sorted by the row of their largest-magnitude entry, and each
// column is phased so that entry is real positive.
EigenFrame fallback_frame(const ComplexMat& h, double energy)
{
    Eigen::SelfAdjointEigenSolver<EigenMat4> solver(to_eigen(h));
    const EigenMat4 vecs = solver.eigenvectors();  // ascending eigenvalues

    struct Column {
        Eigen::Matrix<cplx, 4, 1> v;
        int pivot;
    };
    auto make_column = [&](int k) {
        Column c{vecs.col(k), 0};
        for (int r = 1; r < 4; ++r)
            if (std::abs(c.v(r)) > std::abs(c.v(c.pivot)) * (1.0 + 1e-12)) c.pivot = r;
        c.v *= std::polar(1.0, -std::arg(c.v(c.pivot)));
        return c;
    };
    std::array<Column, 2> upper{make_column(3), make_column(2)};
    std::array<Column, 2> lower{make_column(1), make_column(0)};
    auto by_pivot = [](const Column& a, const Column& b) { return a.pivot < b.pivot; };
    std::stable_sort(upper.begin(), upper.end(), by_pivot);
    std::stable_sort(lower.begin(), lower.end(), by_pivot);

    EigenMat4 w;
    w.col(0) = upper[0].v;
    w.col(1) = upper[1].v;
    w.col(2) = lower[0].v;
    w.col(3) = lower[1].v;
    return {from_eigen(w), from_eigen(w.adjoint()), frame_diagonal(energy), energy, true};
}

// Overall factor of W(t) on top of exp(-i t D).
cplx convention_phase(const EigenFrame& frame, double t, PhaseConvention conv)
{
    return conv == PhaseConvention::kStripped ? std::exp(-kI * frame.energy * t) : cplx{1.0};
}

}  // namespace

EigenFrame majorana_eigenframe(double m, const Vec3& p)
{
    const double energy = energy_of(m, p);
    if (!(energy > 0.0)) throw std::invalid_argument("majorana_eigenframe: E = sqrt(m^2 + |p|^2) must be positive");

    const double px = p[0];
    const double py = p[1];
    const double pz = p[2];
    const cplx den = cplx{py, -m};
    if (std::abs(den) < kDegeneracyThreshold * energy) {
        return fallback_frame(build_majorana().hamiltonian(m, p), energy);
    }

    const double ep = energy + px;
    const double em = energy - px;
    // Columns: E-eigenvectors (pz, E-px, 0, 1), (E+px, pz, 1, 0) and
    // -E-eigenvectors (pz, -(E+px), 0, 1), (-(E-px), pz, 1, 0), with the
    // upper two components divided by p_y - i m.
    ComplexMat w(4, {pz / den, ep / den, pz / den, -em / den, //
                     em / den, pz / den, -ep / den, pz / den, //
                     0.0, 1.0, 0.0, 1.0,                      //
                     1.0, 0.0, 1.0, 0.0});
    ComplexMat w_inv(4, {0.0, den, -pz, ep,  //
                         den, 0.0, em, -pz,  //
                         0.0, -den, pz, em,  //
                         -den, 0.0, ep, pz});
    w_inv *= 1.0 / (2.0 * energy);
    return {w, w_inv, frame_diagonal(energy), energy, false};
}

ComplexMat eigenframe_at(const EigenFrame& frame, double t, PhaseConvention conv)
{
    return convention_phase(frame, t, conv) * (mat_exp_diag(frame.d, t) * frame.w);
}

ComplexMat eigenframe_inv_at(const EigenFrame& frame, double t, PhaseConvention conv)
{
    return (1.0 / convention_phase(frame, t, conv)) * (frame.w_inv * mat_exp_diag(frame.d, -t));
}

ComplexMat Propagator::u(double t, double s) const
{
    return eigenframe_at(frame_, t, conv_) * eigenframe_inv_at(frame_, s, conv_);
}

ComplexMat Propagator::closed_form(double t, double s) const
{
    const ComplexMat eig = mat_exp_diag(frame_.d, t - s);
    return conv_ == PhaseConvention::kStripped ? std::exp(-kI * frame_.energy * (t - s)) * eig : eig;
}

Propagator propagator(const EigenFrame& frame, PhaseConvention conv)
{
    return Propagator(frame, conv);
}

ComplexMat block_phase_unitary(double energy, double t)
{
    const cplx a = std::exp(-2.0 * kI * energy * t);
    const std::array<cplx, 4> d{a, a, 1.0, 1.0};
    return ComplexMat::diagonal(d);
}

ComplexMat evolve_hamiltonian(const EigenFrame& frame, const ComplexMat& h0, double t)
{
    const double tol = 1e-8 * std::max(1.0, frame.energy);
    if (max_abs_diff(frame.w_inv * h0 * frame.w, frame.d) > tol) {
        throw std::invalid_argument("evolve_hamiltonian: frame does not diagonalise the given Hamiltonian");
    }
    const ComplexMat u = propagator(frame).u(t, 0.0);
    return u * h0 * u.adjoint();
}

std::array<cplx, 16> project_coeffs(const ComplexMat& h)
{
    if (h.dim() != 4) throw DimensionError("project_coeffs: expects a 4x4 matrix");
    std::array<cplx, 16> out{};
    const auto& basis = basis16();
    for (std::size_t a = 0; a < basis.size(); ++a) out[a] = trace_pair(h, basis[a].mat) / 4.0;
    return out;
}

std::string to_string(MassVerdict v)
{
    switch (v) {
    case MassVerdict::Constant: return "CONSTANT";
    case MassVerdict::Rotating: return "ROTATING";
    case MassVerdict::Unclassified: return "UNCLASSIFIED";
    }
    return "UNCLASSIFIED";
}

cplx mass_channel(const SpinorRep& rep, const ComplexMat& h)
{
    const ComplexMat g = rep.mass_generator();
    double diag_blocks = 0.0;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            if ((r < 2) == (c < 2)) diag_blocks = std::max(diag_blocks, std::abs(g(r, c)));

    ComplexMat q = g;
    if (diag_blocks == 0.0) {
        q = ComplexMat(4);
        for (int r = 0; r < 2; ++r)
            for (int c = 2; c < 4; ++c) q(r, c) = g(r, c);
    }
    return trace_pair(h, q) / trace_pair(g, q);
}

ComplexMat evolved_hamiltonian(const SpinorRep& rep, double m0, const Vec3& p, double t)
{
    const ComplexMat h0 = rep.hamiltonian(m0, p);
    const double energy = energy_of(m0, p);
    if (rep.kind == RepKind::Majorana && energy > 0.0) {
        return evolve_hamiltonian(majorana_eigenframe(m0, p), h0, t);
    }
    const ComplexMat u = block_phase_unitary(energy, t);
    return u * h0 * u.adjoint();
}

MassReport classify_mass(const SpinorRep& rep, double m0, const Vec3& p, const std::vector<double>& t_grid,
                         double tol, double phase_tol)
{
    if (t_grid.empty()) throw std::invalid_argument("classify_mass: empty time grid");
    const double energy = energy_of(m0, p);

    MassReport report;
    report.rep = to_string(rep.kind);
    report.times = t_grid;
    report.expected_rate = rep.kind == RepKind::Majorana ? 2.0 * energy : 0.0;

    const cplx c0 = mass_channel(rep, evolved_hamiltonian(rep, m0, p, 0.0));
    for (double t : t_grid) {
        cplx mt = 0.0;
        if (m0 != 0.0 && std::abs(c0) > 0.0) mt = m0 * mass_channel(rep, evolved_hamiltonian(rep, m0, p, t)) / c0;
        report.mass_series.push_back(mt);
        report.modulus_series.push_back(std::abs(mt));
    }

    // Unwrapped phase and its least-squares line.
    double prev = 0.0;
    for (std::size_t n = 0; n < t_grid.size(); ++n) {
        double ph = std::arg(report.mass_series[n]);
        if (n > 0) {
            ph += 2.0 * std::numbers::pi * std::round((prev - ph) / (2.0 * std::numbers::pi));
        }
        report.phase_series.push_back(ph);
        prev = ph;
    }
    const auto count = static_cast<double>(t_grid.size());
    const double t_mean = std::accumulate(t_grid.begin(), t_grid.end(), 0.0) / count;
    const double ph_mean = std::accumulate(report.phase_series.begin(), report.phase_series.end(), 0.0) / count;
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t n = 0; n < t_grid.size(); ++n) {
        sxx += (t_grid[n] - t_mean) * (t_grid[n] - t_mean);
        sxy += (t_grid[n] - t_mean) * (report.phase_series[n] - ph_mean);
    }
    report.phase_rate = sxx > 0.0 ? sxy / sxx : 0.0;

    const cplx m_first = report.mass_series.front();
    for (std::size_t n = 0; n < t_grid.size(); ++n) {
        report.max_deviation = std::max(report.max_deviation, std::abs(report.mass_series[n] - m_first));
        report.modulus_deviation =
            std::max(report.modulus_deviation, std::abs(report.modulus_series[n] - std::abs(m_first)));
        const double fit = ph_mean + report.phase_rate * (t_grid[n] - t_mean);
        report.phase_fit_residual = std::max(report.phase_fit_residual, std::abs(report.phase_series[n] - fit));
    }

    const double abs_tol = tol * std::max(1.0, std::abs(m0));
    if (report.max_deviation < abs_tol) {
        report.verdict = MassVerdict::Constant;
        report.phase_rate = 0.0;
    } else if (report.modulus_deviation < abs_tol && report.phase_fit_residual < phase_tol) {
        report.verdict = MassVerdict::Rotating;
    } else {
        report.verdict = MassVerdict::Unclassified;
    }
    return report;
}

}  // namespace brach

#include "brach/scatter.hpp"

#include <cmath>
#include <numbers>

#include "brach/cliffrep.hpp"

namespace brach {

namespace {

ComplexMat sigma_dot(const Vec3& v)
{
    return v[0] * pauli(Pauli::X) + v[1] * pauli(Pauli::Y) + v[2] * pauli(Pauli::Z);
}

ComplexMat blocks(const ComplexMat& ul, const ComplexMat& ur, const ComplexMat& ll, const ComplexMat& lr)
{
    ComplexMat out(4);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
            out(r, c) = ul(r, c);
            out(r, c + 2) = ur(r, c);
            out(r + 2, c) = ll(r, c);
            out(r + 2, c + 2) = lr(r, c);
        }
    return out;
}

}  // namespace

std::string to_string(ScatterRep rep)
{
    return rep == ScatterRep::Gamma ? "gamma" : "majorana";
}

ScatterRep parse_scatter_rep(const std::string& name)
{
    if (name == "gamma") return ScatterRep::Gamma;
    if (name == "majorana") return ScatterRep::Majorana;
    throw std::invalid_argument("unknown scattering representation '" + name + "'");
}

void validate(const ScatterConfig& cfg)
{
    if (!(cfg.m > 0.0)) throw KinematicsError("scatter: mass must be positive");
    if (!(cfg.omega1 > 0.0)) throw KinematicsError("scatter: omega1 must be positive");
    if (!(cfg.theta >= 0.0 && cfg.theta <= std::numbers::pi)) throw KinematicsError("scatter: theta must lie in [0, pi]");
    if (cfg.rotating_mass) throw KinematicsError("scatter: rotating mass is not supported");
}

double compton_omega2(double m, double omega1, double theta)
{
    return 1.0 / (1.0 / omega1 + (1.0 - std::cos(theta)) / m);
}

Embedding embedding(ScatterRep rep)
{
    if (rep == ScatterRep::Gamma) {
        const GammaSet g = build_gamma_scatter();
        return {g.t(), g.x(), g.y()};
    }
    const SpinorRep maj = build_majorana();
    return {kI * maj.beta, maj.alpha[0], maj.alpha[1]};
}

Momenta build_momenta(const ScatterConfig& cfg)
{
    validate(cfg);
    const Embedding e = embedding(cfg.rep);
    const double w1 = cfg.omega1;
    const double w2 = cfg.omega2.value_or(compton_omega2(cfg.m, w1, cfg.theta));
    if (!(w2 > 0.0)) throw KinematicsError("scatter: omega2 must be positive");

    const double ct = std::cos(cfg.theta);
    const double st = std::sin(cfg.theta);
    Momenta out;
    out.omega2 = w2;
    out.e2 = cfg.m + w1 - w2;
    if (!(out.e2 > 0.0)) throw KinematicsError("scatter: outgoing electron energy must be positive");
    const double kx = w1 - w2 * ct;
    const double ky = -w2 * st;
    out.p2_mag = std::hypot(kx, ky);
    out.phi = cfg.phi.value_or(std::atan2(ky, kx));

    out.p1 = {cfg.m * e.t, MomentumKind::Timelike};
    out.p2 = {out.e2 * e.t + (kI * out.p2_mag) * (std::cos(out.phi) * e.x + std::sin(out.phi) * e.y),
              MomentumKind::Timelike};
    out.q1 = {w1 * (e.t + kI * e.x), MomentumKind::Lightlike};
    out.q2 = {w2 * (e.t + kI * (ct * e.x + st * e.y)), MomentumKind::Lightlike};
    return out;
}

ConservationReport verify_conservation(const ScatterConfig& cfg)
{
    const Momenta k = build_momenta(cfg);
    const Embedding e = embedding(cfg.rep);
    const double w1 = cfg.omega1;
    const double w2 = k.omega2;
    const double ct = std::cos(cfg.theta);

    ConservationReport r;
    r.omega2 = w2;
    r.residual_energy = std::abs(k.e2 * k.e2 - k.p2_mag * k.p2_mag - cfg.m * cfg.m);
    r.residual_compton = std::abs(2.0 * cfg.m * (w1 - w2) - 2.0 * w1 * w2 * (1.0 - ct));

    const ComplexMat& p1 = k.p1.mat;
    const ComplexMat& p2 = k.p2.mat;
    const ComplexMat& q1 = k.q1.mat;
    const ComplexMat& q2 = k.q2.mat;
    const ComplexMat rhs = p1 * p1 + anticommutator(q1 - q2, p1) - anticommutator(q1, q2);
    r.residual_matrix = max_abs_diff(p2 * p2, rhs);
    r.residual_momentum = max_abs_diff(p2, p1 + q1 - q2);
    r.nilpotency = std::max((q1 * q1).max_abs(), (q2 * q2).max_abs());

    // Unit-frequency photons k1, k2 and the unit rest momentum T give
    // 2 m (w1 s1 - w2 s2) = 2 w1 w2 b with s_i = Tr{k_i, T}/8, b = Tr{k1, k2}/8.
    const ComplexMat k1 = e.t + kI * e.x;
    const ComplexMat k2 = e.t + kI * (ct * e.x + std::sin(cfg.theta) * e.y);
    const double s1 = anticommutator(k1, e.t).trace().real() / 8.0;
    const double s2 = anticommutator(k2, e.t).trace().real() / 8.0;
    const double b = anticommutator(k1, k2).trace().real() / 8.0;
    r.omega2_matrix = cfg.m * w1 * s1 / (cfg.m * s2 + w1 * b);
    return r;
}

ComplexMat phased_block_momentum(const Vec3& p, double theta)
{
    const ComplexMat ps = sigma_dot(p);
    const ComplexMat zero(2);
    return blocks(zero, (-kI * std::exp(-kI * theta)) * ps, (kI * std::exp(kI * theta)) * ps, zero);
}

ComplexMat phased_anticommutator_block(const Vec3& p, const Vec3& q, double theta)
{
    const double dot = p[0] * q[0] + p[1] * q[1] + p[2] * q[2];
    const Vec3 cross{p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0]};
    const ComplexMat cs = std::sin(theta) * sigma_dot(cross);
    const ComplexMat zero(2);
    return std::cos(theta) * dot * ComplexMat::identity(4) + blocks(cs, zero, zero, -cs);
}

ComplexMat majorana_phased_momentum(const Vec3& p, double phi)
{
    const cplx down = p[1] * std::exp(-kI * phi);
    const cplx up = p[1] * std::exp(kI * phi);
    return ComplexMat(4, {p[0], p[2], down, 0.0,  //
                          p[2], -p[0], 0.0, down, //
                          up, 0.0, -p[0], -p[2],  //
                          0.0, up, -p[2], p[0]});
}

double majorana_phased_dot(const Vec3& p, const Vec3& q, double phi)
{
    return p[0] * q[0] + std::cos(phi) * p[1] * q[1] + p[2] * q[2];
}

}  // namespace brach

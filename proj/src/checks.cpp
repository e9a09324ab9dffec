#include "brach/checks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Dense>

#include "brach/angmom4.hpp"
#include "brach/cliffrep.hpp"
#include "brach/eigen_bridge.hpp"
#include "brach/frames.hpp"
#include "brach/json_io.hpp"
#include "brach/propagate.hpp"
#include "brach/qbe.hpp"
#include "brach/scatter.hpp"

namespace brach {

// ---------------------------------------------------------------------------
// Sampler
// ---------------------------------------------------------------------------

double Sampler::uniform(double lo, double hi)
{
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
}

Vec3 Sampler::vec3(double lo, double hi)
{
    return {uniform(lo, hi), uniform(lo, hi), uniform(lo, hi)};
}

Spinor Sampler::unit_spinor()
{
    std::normal_distribution<double> gauss(0.0, 1.0);
    Spinor v;
    for (auto& z : v) z = {gauss(rng_), gauss(rng_)};
    const double n = norm(v);
    for (auto& z : v) z /= n;
    return v;
}

ComplexMat Sampler::symmetric_traceless()
{
    ComplexMat f(4);
    for (int r = 0; r < 4; ++r)
        for (int c = r; c < 4; ++c) f(r, c) = f(c, r) = uniform(-1.0, 1.0);
    const cplx shift = f.trace() / 4.0;
    for (int r = 0; r < 4; ++r) f(r, r) -= shift;
    return f;
}

namespace {

using Residuals = std::map<std::string, double>;

void bump(Residuals& r, const std::string& key, double value)
{
    auto [it, inserted] = r.emplace(key, value);
    if (!inserted) it->second = std::max(it->second, value);
}

double energy_of(double m, const Vec3& p)
{
    return std::sqrt(m * m + p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
}

ComplexMat diag4(cplx a, cplx b, cplx c, cplx d)
{
    const std::array<cplx, 4> v{a, b, c, d};
    return ComplexMat::diagonal(v);
}

// Entrywise triple loop, independent of ComplexMat::operator*.
ComplexMat brute_product(const ComplexMat& a, const ComplexMat& b)
{
    const int n = a.dim();
    ComplexMat out(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            cplx acc = 0.0;
            for (int k = 0; k < n; ++k) acc += a(r, k) * b(k, c);
            out(r, c) = acc;
        }
    return out;
}

bool gaussian_integer_entries(const ComplexMat& a)
{
    return std::all_of(a.entries().begin(), a.entries().end(), [](const cplx& z) {
        return z.real() == std::round(z.real()) && z.imag() == std::round(z.imag());
    });
}

std::vector<double> linspace(double lo, double hi, int count)
{
    std::vector<double> out;
    for (int k = 0; k < count; ++k) out.push_back(k + 1 == count ? hi : lo + (hi - lo) * k / (count - 1));
    return out;
}

// ---------------------------------------------------------------------------
// 1. Clifford algebra, exactly as stated: beta^2 = 1 and
//    S_i = (i/2) eps_ijk [S_j, S_k] with S_i = 1/2 [alpha_j, alpha_k].
// ---------------------------------------------------------------------------

CheckResult check_algebra(std::uint64_t)
{
    CheckResult out;
    const ComplexMat one = ComplexMat::identity(4);
    bool integer = true;
    Residuals consistent;

    for (RepKind kind : {RepKind::Majorana, RepKind::Dirac}) {
        const SpinorRep rep = build_rep(kind);
        const std::string tag = to_string(kind) + ".";
        const auto& a = rep.alpha;
        const ComplexMat& b = rep.beta;
        integer = integer && gaussian_integer_entries(b);
        for (const auto& ai : a) integer = integer && gaussian_integer_entries(ai);

        Residuals& r = out.residuals;
        const char* ax = "xyz";
        bump(r, tag + "square_beta", max_abs_diff(brute_product(b, b), one));
        for (int i = 0; i < 3; ++i) {
            bump(r, tag + "anticomm_beta_alpha", (brute_product(b, a[i]) + brute_product(a[i], b)).max_abs());
            for (int j = 0; j < 3; ++j) {
                const ComplexMat ac = brute_product(a[i], a[j]) + brute_product(a[j], a[i]);
                bump(r, tag + "anticomm_alpha_alpha", max_abs_diff(ac, (i == j ? 2.0 : 0.0) * one));
            }
            bump(r, tag + std::string("square_alpha_") + ax[i], max_abs_diff(brute_product(a[i], a[i]), one));
        }

        const ComplexMat g0 = brute_product(brute_product(b, a[0]), brute_product(a[1], a[2]));
        bump(r, tag + "gamma0_product", max_abs_diff(g0, rep.gamma0));
        bump(r, tag + "gamma0_anticomm", (brute_product(g0, b) + brute_product(b, g0)).max_abs());
        for (int i = 0; i < 3; ++i)
            bump(r, tag + "gamma0_anticomm", (brute_product(g0, a[i]) + brute_product(a[i], g0)).max_abs());

        std::array<ComplexMat, 3> s;
        for (int i = 0; i < 3; ++i) {
            const ComplexMat& aj = a[(i + 1) % 3];
            const ComplexMat& ak = a[(i + 2) % 3];
            s[i] = 0.5 * (brute_product(aj, ak) - brute_product(ak, aj));
            bump(r, tag + "spin_definition", max_abs_diff(s[i], rep.spin[i]));
        }
        std::array<ComplexMat, 3> h{(0.5 * kI) * s[0], (0.5 * kI) * s[1], (0.5 * kI) * s[2]};
        for (int i = 0; i < 3; ++i) {
            const int j = (i + 1) % 3;
            const int k = (i + 2) % 3;
            // (i/2) eps_ijk [S_j, S_k] summed over j, k is i [S_j, S_k] for cyclic (i, j, k).
            bump(r, tag + "spin_closure", max_abs_diff(s[i], kI * (brute_product(s[j], s[k]) - brute_product(s[k], s[j]))));
            bump(consistent, tag + "hermitian_spin_closure",
                 max_abs_diff(h[i], kI * (brute_product(h[j], h[k]) - brute_product(h[k], h[j]))));
        }
        const ComplexMat g = rep.mass_generator();
        bump(consistent, tag + "square_mass_generator", max_abs_diff(brute_product(g, g), one));
        bump(consistent, tag + "verify_algebra", verify_algebra(rep).max_violation());
    }

    // Integer matrices must satisfy the relations exactly.
    out.pass = std::all_of(out.residuals.begin(), out.residuals.end(),
                           [&](const auto& kv) { return integer ? kv.second == 0.0 : kv.second < 1e-12; });
    for (const auto& [k, v] : consistent) out.residuals["consistent." + k] = v;
    out.notes.push_back("the real Majorana beta squares to -1; its Hermitian mass generator i*beta squares to +1");
    out.notes.push_back("closure S_i = (i/2) eps_ijk [S_j, S_k] holds for the Hermitian spin (i/2) * 1/2 [alpha_j, alpha_k], "
                        "not for 1/2 [alpha_j, alpha_k] itself");
    return out;
}

// ---------------------------------------------------------------------------
// 2. Closed-form diagonalisation.
// ---------------------------------------------------------------------------

CheckResult check_diagonalisation(std::uint64_t seed)
{
    Sampler rng(seed);
    CheckResult out;
    Residuals& r = out.residuals;
    int fallbacks = 0;
    for (int n = 0; n < 100; ++n) {
        const double energy = rng.uniform(0.1, 10.0);
        Vec3 dir = rng.vec3(-1.0, 1.0);
        double mdir = rng.uniform(0.05, 1.0);
        const double len = std::sqrt(mdir * mdir + dir[0] * dir[0] + dir[1] * dir[1] + dir[2] * dir[2]);
        const double m = energy * mdir / len;
        const Vec3 p{energy * dir[0] / len, energy * dir[1] / len, energy * dir[2] / len};

        const EigenFrame f = majorana_eigenframe(m, p);
        if (f.degenerate) ++fallbacks;
        const ComplexMat h = build_majorana().hamiltonian(m, p);
        const ComplexMat target = diag4(energy, energy, -energy, -energy);
        bump(r, "winv_h_w_minus_d", max_abs_diff(brute_product(brute_product(f.w_inv, h), f.w), target));
        bump(r, "w_winv_minus_1", max_abs_diff(brute_product(f.w, f.w_inv), ComplexMat::identity(4)));

        const auto ev = hermitian_eigenvalues(h);
        const std::array<double, 4> expect{-energy, -energy, energy, energy};
        for (int k = 0; k < 4; ++k) bump(r, "eigensolver_spectrum", std::abs(ev[k] - expect[k]));
    }
    r["fallback_frames"] = fallbacks;
    out.pass = r["winv_h_w_minus_d"] < 1e-10 && r["w_winv_minus_1"] < 1e-10 && r["eigensolver_spectrum"] < 1e-10;
    return out;
}

// ---------------------------------------------------------------------------
// 3. Two-time propagator.
// ---------------------------------------------------------------------------

CheckResult check_propagator(std::uint64_t seed)
{
    Sampler rng(seed);
    CheckResult out;
    Residuals& r = out.residuals;
    const ComplexMat one = ComplexMat::identity(4);
    for (int n = 0; n < 50; ++n) {
        const double m = rng.uniform(0.5, 3.0);
        const Vec3 p = rng.vec3(-2.0, 2.0);
        const double t = rng.uniform(-5.0, 5.0);
        const double s = rng.uniform(-5.0, 5.0);
        const double q = rng.uniform(-5.0, 5.0);
        const double energy = energy_of(m, p);
        const Propagator u = propagator(majorana_eigenframe(m, p));

        const cplx ph = std::exp(-2.0 * kI * energy * (t - s));
        const ComplexMat uts = u.u(t, s);
        bump(r, "closed_form", max_abs_diff(uts, diag4(ph, ph, 1.0, 1.0)));
        bump(r, "unitarity", max_abs_diff(brute_product(uts, uts.adjoint()), one));
        bump(r, "composition", max_abs_diff(brute_product(uts, u.u(s, q)), u.u(t, q)));
        bump(r, "time_translation", max_abs_diff(uts, u.u(t - s, 0.0)));
        bump(r, "equal_times", max_abs_diff(u.u(t, t), one));
    }
    out.pass = r["closed_form"] < 1e-12 && r["unitarity"] < 1e-10 && r["composition"] < 1e-10 &&
               r["time_translation"] < 1e-10 && r["equal_times"] < 1e-10;
    return out;
}

// ---------------------------------------------------------------------------
// 4. Evolved Hamiltonian and Klein-Gordon.
// ---------------------------------------------------------------------------

CheckResult check_evolved_hamiltonian(std::uint64_t seed)
{
    Sampler rng(seed);
    CheckResult out;
    Residuals& r = out.residuals;
    std::vector<std::pair<double, Vec3>> cases{{1.0, {1.0, 1.0, 1.0}}};
    for (int n = 0; n < 4; ++n) cases.emplace_back(rng.uniform(0.5, 3.0), rng.vec3(-2.0, 2.0));

    for (const auto& [m, p] : cases) {
        const double energy = energy_of(m, p);
        const EigenFrame frame = majorana_eigenframe(m, p);
        const ComplexMat h0 = build_majorana().hamiltonian(m, p);
        const ComplexMat kg = (energy * energy) * ComplexMat::identity(4);
        for (double t : linspace(0.0, 5.0, 20)) {
            const ComplexMat h = evolve_hamiltonian(frame, h0, t);
            const cplx expect = cplx{p[1], m} * std::exp(-2.0 * kI * energy * t);
            bump(r, "entry_0_2", std::abs(h(0, 2) - expect));
            bump(r, "entry_2_0", std::abs(h(2, 0) - std::conj(expect)));
            bump(r, "klein_gordon", max_abs_diff(brute_product(h, h), kg));
            const auto ev = hermitian_eigenvalues(h);
            bump(r, "spectrum", std::max(std::abs(ev[0] + energy), std::abs(ev[3] - energy)));
        }
    }
    out.pass = r["entry_0_2"] < 1e-12 && r["entry_2_0"] < 1e-12 && r["klein_gordon"] < 1e-10 && r["spectrum"] < 1e-10;
    return out;
}

// ---------------------------------------------------------------------------
// 5. Mass classifier.
// ---------------------------------------------------------------------------

CheckResult check_mass_classifier(std::uint64_t seed)
{
    Sampler rng(seed);
    CheckResult out;
    Residuals& r = out.residuals;
    std::vector<std::pair<double, Vec3>> cases{{1.0, {1.0, 1.0, 1.0}}};
    for (int n = 0; n < 2; ++n) cases.emplace_back(rng.uniform(0.5, 2.0), rng.vec3(-1.5, 1.5));

    const auto grid = linspace(0.0, 3.0, 300);
    bool verdicts = true;
    for (const auto& [m, p] : cases) {
        const MassReport maj = classify_mass(build_majorana(), m, p, grid);
        const double rate = 2.0 * energy_of(m, p);
        verdicts = verdicts && maj.verdict == MassVerdict::Rotating;
        bump(r, "majorana.rate_relative_error", std::abs(maj.phase_rate - rate) / rate);
        bump(r, "majorana.modulus_deviation", maj.modulus_deviation);

        const MassReport dir = classify_mass(build_dirac(), m, p, grid);
        verdicts = verdicts && dir.verdict == MassVerdict::Constant;
        bump(r, "dirac.max_deviation", dir.max_deviation);
    }
    r["verdicts_match"] = verdicts ? 1.0 : 0.0;
    out.pass = verdicts && r["majorana.rate_relative_error"] < 1e-6 && r["majorana.modulus_deviation"] < 1e-10 &&
               r["dirac.max_deviation"] < 1e-10;
    out.notes.push_back("expected: majorana ROTATING at rate 2E, dirac CONSTANT");
    return out;
}

// ---------------------------------------------------------------------------
// 6. Integrated brachistochrone flow against the analytic mass phase.
// ---------------------------------------------------------------------------

CheckResult check_qbe_oracle(std::uint64_t seed)
{
    Sampler rng(seed);
    CheckResult out;
    Residuals& r = out.residuals;
    std::vector<std::pair<double, Vec3>> cases{{1.0, {1.0, 1.0, 1.0}}};
    cases.emplace_back(rng.uniform(0.5, 1.5), rng.vec3(-1.0, 1.0));

    const SpinorRep maj = build_majorana();
    for (const auto& [m, p] : cases) {
        const double energy = energy_of(m, p);
        bump(r, "max_energy", energy);
        const Trajectory traj = integrate_qbe(majorana_system(m, p), 1.0, 1e-4, 100);
        const cplx c0 = mass_channel(maj, traj.h_t.front());
        for (std::size_t k = 0; k < traj.times.size(); ++k) {
            const cplx numeric = m * mass_channel(maj, traj.h_t[k]) / c0;
            const cplx analytic = m * std::exp(2.0 * kI * energy * traj.times[k]);
            bump(r, "mass_abs_error", std::abs(numeric - analytic));
        }
        const ConservationResiduals cons = conservation_residuals(traj);
        bump(r, "trace_a2_drift", cons.trace_a2);
        bump(r, "trace_hf", cons.trace_hf);
    }
    out.pass = r["mass_abs_error"] < 1e-6 && r["max_energy"] <= 3.0;
    return out;
}

// ---------------------------------------------------------------------------
// 7. Trace projection Tr[[H, F] alpha_x], exact in Gaussian integers.
// ---------------------------------------------------------------------------

struct GaussInt {
    long long re = 0;
    long long im = 0;
    friend GaussInt operator+(GaussInt a, GaussInt b) { return {a.re + b.re, a.im + b.im}; }
    friend GaussInt operator-(GaussInt a, GaussInt b) { return {a.re - b.re, a.im - b.im}; }
    friend GaussInt operator*(GaussInt a, GaussInt b)
    {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    bool operator==(const GaussInt&) const = default;
};

using GMat = std::array<GaussInt, 16>;

GMat gmul(const GMat& a, const GMat& b)
{
    GMat out{};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            for (int k = 0; k < 4; ++k) out[r * 4 + c] = out[r * 4 + c] + a[r * 4 + k] * b[k * 4 + c];
    return out;
}

GMat gsub(const GMat& a, const GMat& b)
{
    GMat out{};
    for (int k = 0; k < 16; ++k) out[k] = a[k] - b[k];
    return out;
}

GMat gscale(const GMat& a, GaussInt s)
{
    GMat out{};
    for (int k = 0; k < 16; ++k) out[k] = a[k] * s;
    return out;
}

GMat gadd(const GMat& a, const GMat& b)
{
    GMat out{};
    for (int k = 0; k < 16; ++k) out[k] = a[k] + b[k];
    return out;
}

GaussInt gtrace(const GMat& a)
{
    return a[0] + a[5] + a[10] + a[15];
}

GMat gmat(std::initializer_list<int> real_entries)
{
    GMat out{};
    int k = 0;
    for (int v : real_entries) out[k++] = {v, 0};
    return out;
}

GMat gkron(int i, int j)
{
    // 2x2 Pauli entries, index order 1, x, y, z.
    static const std::array<std::array<GaussInt, 4>, 4> s{{
        {{{1, 0}, {0, 0}, {0, 0}, {1, 0}}},
        {{{0, 0}, {1, 0}, {1, 0}, {0, 0}}},
        {{{0, 0}, {0, -1}, {0, 1}, {0, 0}}},
        {{{1, 0}, {0, 0}, {0, 0}, {-1, 0}}},
    }};
    GMat out{};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out[r * 4 + c] = s[i][(r / 2) * 2 + c / 2] * s[j][(r % 2) * 2 + c % 2];
    return out;
}

CheckResult check_trace_projection(std::uint64_t seed)
{
    Sampler rng(seed);
    CheckResult out;
    Residuals& r = out.residuals;
    const char* names = "1xyz";

    // The printed Majorana matrices, typed in as integers.
    const GMat beta = gmat({0, 0, 1, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, -1, 0, 0});
    const GMat ax = gmat({1, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 1});
    const GMat ay = gmat({0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0});
    const GMat az = gmat({0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, 0, -1, 0});
    const GMat ibeta = gscale(beta, {0, 1});

    // Complement: traceless labels orthogonal to every generator of H.
    std::vector<std::pair<int, int>> complement;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (i == 0 && j == 0) continue;
            const GMat u = gkron(i, j);
            bool orth = true;
            for (const GMat* g : {&ibeta, &ax, &ay, &az}) orth = orth && gtrace(gmul(*g, u)) == GaussInt{};
            if (orth) complement.emplace_back(i, j);
        }
    r["complement_size"] = static_cast<double>(complement.size());

    // label -> which of (m, p_y, p_z) it multiplies; fixed by the first sample.
    std::map<std::string, std::string> mapping;
    bool exact = complement.size() == 11;
    bool pure_imaginary = true;
    int samples = 0;
    while (samples < 50) {
        const auto pick = [&] { return static_cast<long long>(std::lround(rng.uniform(-9.5, 9.5))); };
        const long long m = pick();
        const long long px = pick();
        const long long py = pick();
        const long long pz = pick();
        if (m == 0 || py == 0 || pz == 0 || std::abs(m) == std::abs(py) || std::abs(m) == std::abs(pz) ||
            std::abs(py) == std::abs(pz)) {
            continue;
        }
        ++samples;
        const GMat h = gadd(gadd(gscale(ibeta, {m, 0}), gscale(ax, {px, 0})), gadd(gscale(ay, {py, 0}), gscale(az, {pz, 0})));
        const ComplexMat hf = build_majorana().hamiltonian(static_cast<double>(m), {double(px), double(py), double(pz)});
        const ComplexMat alpha_x = build_majorana().alpha[0];

        int nonzero = 0;
        for (const auto& [i, j] : complement) {
            const GMat u = gkron(i, j);
            const GaussInt v = gtrace(gmul(gsub(gmul(h, u), gmul(u, h)), ax));
            const std::string label{names[i], names[j]};
            const cplx lib = trace_project_rhs(hf, kron(KronLabel::parse(label)), alpha_x);
            bump(r, "library_vs_exact", std::abs(lib - cplx(double(v.re), double(v.im))));
            if (v.re != 0) pure_imaginary = false;
            if (v == GaussInt{}) continue;
            ++nonzero;
            std::string which;
            if (v.im == 8 * m) which = "m";
            else if (v.im == 8 * py) which = "p_y";
            else if (v.im == 8 * pz) which = "p_z";
            if (which.empty()) {
                exact = false;
                continue;
            }
            auto [it, inserted] = mapping.emplace(label, which);
            if (!inserted && it->second != which) exact = false;
        }
        if (nonzero != 3) exact = false;
    }
    if (mapping.size() != 3) exact = false;

    // Floating point: random real inputs against the linear form 8i(...).
    const auto f_span = complement_span(majorana_h_span());
    for (int n = 0; n < 50; ++n) {
        const double m = rng.uniform(-3.0, 3.0);
        const Vec3 p = rng.vec3(-3.0, 3.0);
        std::vector<double> lambda;
        for (std::size_t k = 0; k < f_span.size(); ++k) lambda.push_back(rng.uniform(-1.0, 1.0));
        const ComplexMat h = build_majorana().hamiltonian(m, p);
        const cplx value = trace_project_rhs(h, assemble_constraint(f_span, lambda), build_majorana().alpha[0]);
        cplx expect = 0.0;
        for (std::size_t k = 0; k < f_span.size(); ++k) {
            const auto it = mapping.find(f_span[k].name());
            if (it == mapping.end()) continue;
            const double mult = it->second == "m" ? m : it->second == "p_y" ? p[1] : p[2];
            expect += 8.0 * kI * lambda[k] * mult;
        }
        bump(r, "float_linear_form", std::abs(value - expect));
    }

    r["exact_structure"] = exact ? 1.0 : 0.0;
    r["exact_pure_imaginary"] = pure_imaginary ? 1.0 : 0.0;
    std::string map_note = "label mapping:";
    for (const auto& [label, which] : mapping) map_note += " " + label + "->" + which;
    out.notes.push_back(map_note);
    out.pass = exact && pure_imaginary && r["library_vs_exact"] == 0.0 && r["float_linear_form"] < 1e-12;
    return out;
}

// ---------------------------------------------------------------------------
// 8. Angular momentum tensor.
// ---------------------------------------------------------------------------

CheckResult check_angular_momentum(std::uint64_t seed)
{
    Sampler rng(seed);
    CheckResult out;
    Residuals& r = out.residuals;

    for (int n = 0; n < 3; ++n) {
        const AngMomTensor m{rng.vec3(-1.0, 1.0), rng.vec3(-1.0, 1.0)};
        const AngMomConservation c = qbe_conservation(m, rng.symmetric_traceless(), 5.0, 1e-3);
        bump(r, "component_drift", c.max_component_drift);
        bump(r, "h_drift", c.max_h_drift);
        bump(r, "f_flow_residual", c.max_f_residual);
    }

    for (int n = 0; n < 100; ++n) {
        const Vec3 nv = rng.vec3(-2.0, 2.0);
        const Vec3 lv = rng.vec3(-2.0, 2.0);
        const double sq = nv[0] * nv[0] + nv[1] * nv[1] + nv[2] * nv[2] + lv[0] * lv[0] + lv[1] * lv[1] + lv[2] * lv[2];
        const ComplexMat h = kI * assemble_tensor(nv, lv);
        const double brute = (brute_product(h, h).trace() / 2.0).real();
        const double lib = angmom_invariant(nv, lv);
        bump(r, "invariant_vs_trace_oracle", std::abs(lib - brute));
        bump(r, "invariant_minus_2_sq", std::abs(lib - 2.0 * sq));
        bump(r, "consistent.invariant_minus_sq", std::abs(lib - sq));
    }

    const ComplexMat w(4, {-kI, kI, 0.0, 0.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0, -kI, kI, 0.0, 0.0, 1.0, 1.0});
    const ComplexMat w_inv = from_eigen(to_eigen(w).inverse());
    for (int n = 0; n < 50; ++n) {
        const double nx = rng.uniform(-3.0, 3.0);
        const double lyz = rng.uniform(-3.0, 3.0);
        const double t = rng.uniform(-3.0, 3.0);
        const ComplexMat u = block_propagator(nx, lyz, t);
        const double c1 = std::cos(nx * t), s1 = std::sin(nx * t), c2 = std::cos(lyz * t), s2 = std::sin(lyz * t);
        const ComplexMat printed(4, {c1, -s1, 0, 0, s1, c1, 0, 0, 0, 0, c2, -s2, 0, 0, s2, c2});
        bump(r, "block_vs_printed", max_abs_diff(u, printed));
        const ComplexMat eig = brute_product(brute_product(w, mat_exp_diag(diag4(nx, -nx, lyz, -lyz), t)), w_inv);
        bump(r, "block_vs_eigenframe", max_abs_diff(u, eig));
        bump(r, "orthogonality", max_abs_diff(brute_product(u.transpose(), u), ComplexMat::identity(4)));
        bump(r, "determinant", std::abs(to_eigen(u).determinant() - 1.0));
        bump(r, "real_entries", u.max_imag());
    }

    out.pass = r["component_drift"] < 1e-8 && r["invariant_minus_2_sq"] < 1e-12 && r["block_vs_printed"] < 1e-12 &&
               r["block_vs_eigenframe"] < 1e-12 && r["orthogonality"] < 1e-12 && r["determinant"] < 1e-12;
    out.notes.push_back("Tr[(iM)^2 / 2] equals |n|^2 + |l|^2 for this tensor; the stated 2(|n|^2 + |l|^2) is off by a factor 2");
    return out;
}

// ---------------------------------------------------------------------------
// 9. Compton kinematics in both embeddings.
// ---------------------------------------------------------------------------

CheckResult check_compton(std::uint64_t seed)
{
    Sampler rng(seed);
    CheckResult out;
    Residuals& r = out.residuals;
    const auto thetas = linspace(0.0, std::numbers::pi, 64);
    for (int n = 0; n < 20; ++n) {
        const double m = rng.uniform(0.5, 5.0);
        const double w1 = rng.uniform(0.1, 5.0);
        for (double theta : thetas) {
            double omega[2] = {0.0, 0.0};
            double omega_matrix[2] = {0.0, 0.0};
            for (ScatterRep rep : {ScatterRep::Gamma, ScatterRep::Majorana}) {
                ScatterConfig cfg;
                cfg.m = m;
                cfg.omega1 = w1;
                cfg.theta = theta;
                cfg.rep = rep;
                const ConservationReport c = verify_conservation(cfg);
                const std::string tag = to_string(rep) + ".";
                bump(r, tag + "residual_energy", c.residual_energy);
                bump(r, tag + "residual_compton", c.residual_compton);
                bump(r, tag + "residual_matrix", c.residual_matrix);
                bump(r, tag + "residual_momentum", c.residual_momentum);
                bump(r, tag + "nilpotency", c.nilpotency);
                bump(r, tag + "omega2_matrix_vs_formula", std::abs(c.omega2_matrix - c.omega2));
                omega[rep == ScatterRep::Gamma ? 0 : 1] = c.omega2;
                omega_matrix[rep == ScatterRep::Gamma ? 0 : 1] = c.omega2_matrix;
            }
            bump(r, "omega2_gamma_vs_majorana", std::abs(omega[0] - omega[1]));
            bump(r, "note.omega2_matrix_gamma_vs_majorana", std::abs(omega_matrix[0] - omega_matrix[1]));
        }
    }
    out.pass = std::all_of(r.begin(), r.end(), [](const auto& kv) {
        if (kv.first.rfind("note.", 0) == 0) return true;
        return kv.first == "omega2_gamma_vs_majorana" ? kv.second <= 1e-15 : kv.second < 1e-12;
    });
    out.notes.push_back("omega2 column compared as emitted; trace-derived omega2 agrees per embedding to 1e-12");
    return out;
}

// ---------------------------------------------------------------------------
// 10. Phase-deformed anticommutators.
// ---------------------------------------------------------------------------

ComplexMat oracle_block_momentum(const Vec3& p, double theta)
{
    // p.sigma = [[pz, px - i py], [px + i py, -pz]]
    const cplx s00 = p[2], s01 = cplx{p[0], -p[1]}, s10 = cplx{p[0], p[1]}, s11 = -p[2];
    const cplx up = -kI * std::exp(-kI * theta);
    const cplx dn = kI * std::exp(kI * theta);
    return ComplexMat(4, {0.0, 0.0, up * s00, up * s01, //
                          0.0, 0.0, up * s10, up * s11, //
                          dn * s00, dn * s01, 0.0, 0.0, //
                          dn * s10, dn * s11, 0.0, 0.0});
}

ComplexMat oracle_majorana_momentum(const Vec3& p, double phi)
{
    const cplx a = p[1] * std::exp(-kI * phi);
    const cplx b = p[1] * std::exp(kI * phi);
    return ComplexMat(4, {p[0], p[2], a, 0.0, p[2], -p[0], 0.0, a, b, 0.0, -p[0], -p[2], 0.0, b, -p[2], p[0]});
}

CheckResult check_phased_anticommutators(std::uint64_t seed)
{
    Sampler rng(seed);
    CheckResult out;
    Residuals& r = out.residuals;
    for (int n = 0; n < 200; ++n) {
        const Vec3 p = rng.vec3(-2.0, 2.0);
        const Vec3 q = rng.vec3(-2.0, 2.0);
        const double angle = rng.uniform(-std::numbers::pi, std::numbers::pi);

        const ComplexMat bp = oracle_block_momentum(p, angle);
        const ComplexMat bq = oracle_block_momentum(q, 0.0);
        const ComplexMat half = 0.5 * (brute_product(bp, bq) + brute_product(bq, bp));
        bump(r, "block_identity", max_abs_diff(half, phased_anticommutator_block(p, q, angle)));
        bump(r, "block_momentum_builder", max_abs_diff(bp, phased_block_momentum(p, angle)));

        const ComplexMat mp = oracle_majorana_momentum(p, angle);
        const ComplexMat mq = oracle_majorana_momentum(q, 0.0);
        const ComplexMat mhalf = 0.5 * (brute_product(mp, mq) + brute_product(mq, mp));
        bump(r, "majorana_identity",
             max_abs_diff(mhalf, majorana_phased_dot(p, q, angle) * ComplexMat::identity(4)));
        bump(r, "majorana_momentum_builder", max_abs_diff(mp, majorana_phased_momentum(p, angle)));

        // The stated form with -i sin(theta) on the cross term.
        const Vec3 x{p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0]};
        const ComplexMat xs = kron(pauli(Pauli::Z), x[0] * pauli(Pauli::X) + x[1] * pauli(Pauli::Y) + x[2] * pauli(Pauli::Z));
        const double dot = p[0] * q[0] + p[1] * q[1] + p[2] * q[2];
        const ComplexMat stated = std::cos(angle) * dot * ComplexMat::identity(4) - (kI * std::sin(angle)) * xs;
        bump(r, "note.stated_cross_term_form", max_abs_diff(half, stated));
    }
    out.pass = r["block_identity"] < 1e-12 && r["block_momentum_builder"] < 1e-12 && r["majorana_identity"] < 1e-12 &&
               r["majorana_momentum_builder"] < 1e-12;
    out.notes.push_back("cross term is +sin(theta) diag((p x q).sigma, -(p x q).sigma) with no extra factor i");
    return out;
}

// ---------------------------------------------------------------------------
// 11. Frame equivalence.
// ---------------------------------------------------------------------------

CheckResult check_frames(std::uint64_t seed)
{
    Sampler rng(seed);
    CheckResult out;
    Residuals& r = out.residuals;
    int control_failures = 0;
    int passes = 0;
    const int cases = 50;
    for (int n = 0; n < cases; ++n) {
        const double m = rng.uniform(0.5, 3.0);
        const Vec3 p = rng.vec3(-2.0, 2.0);
        const double t = rng.uniform(0.1, 5.0);
        const Spinor v = rng.unit_spinor();
        const double energy = energy_of(m, p);

        const FrameCase fc = make_frame_case(v, t, m, p);
        const FrameReport rep = check_frame_equivalence(fc);
        if (rep.pass) ++passes;
        for (const auto& [k, value] : rep.residuals) bump(r, k, value);

        const Propagator u = propagator(majorana_eigenframe(m, p));
        const ComplexMat rec = recover_diagonal_unitary(m, p, t);
        bump(r, "recovered_vs_u_0_t", max_abs_diff(rec, u.u(0.0, t)));
        bump(r, "note.recovered_vs_u_t_0", max_abs_diff(rec, u.u(t, 0.0)));
        const Spinor rv = brach::apply(rec, v);
        double dw = 0.0;
        for (int k = 0; k < 4; ++k) dw = std::max(dw, std::abs(rv[k] - fc.w[k]));
        bump(r, "recovered_maps_v_to_w", dw);
        bump(r, "norm_preservation", std::abs(norm(fc.w) - norm(v)));

        const ComplexMat h0 = build_majorana().hamiltonian(m, p);
        const ComplexMat ht = evolve_hamiltonian(majorana_eigenframe(m, p), h0, t);
        const cplx e_v = expectation(brute_product(ht, ht), v);
        const cplx e_w = expectation(brute_product(h0, h0), fc.w);
        bump(r, "squared_expectation", std::max(std::abs(e_v - e_w), std::abs(e_w - energy * energy * std::norm(norm(v)))));

        FrameCase control = fc;
        control.w = v;
        if (!check_frame_equivalence(control).pass) ++control_failures;
    }
    r["cases_passing"] = passes;
    r["negative_controls_failing"] = control_failures;
    out.pass = passes == cases && control_failures == cases && r["recovered_vs_u_0_t"] < 1e-10 &&
               r["recovered_maps_v_to_w"] < 1e-10 && r["norm_preservation"] < 1e-12 && r["squared_expectation"] < 1e-10;
    out.notes.push_back("identities hold for w = U(t,0)^dagger v; the recovered diagonal unitary is U(0,t)");
    return out;
}

using CheckFn = CheckResult (*)(std::uint64_t);

struct Entry {
    CheckInfo info;
    CheckFn fn;
};

const std::vector<Entry>& entries()
{
    static const std::vector<Entry> list{
        {{1, "c01_clifford_algebra", "Clifford relations of the Majorana and Dirac sets"}, check_algebra},
        {{2, "c02_diagonalisation", "closed-form eigenframe diagonalises H"}, check_diagonalisation},
        {{3, "c03_propagator", "U(t,s) closed form, unitarity, composition, translation"}, check_propagator},
        {{4, "c04_evolved_hamiltonian", "H(t) entries and Klein-Gordon"}, check_evolved_hamiltonian},
        {{5, "c05_mass_classifier", "Majorana ROTATING at 2E, Dirac CONSTANT"}, check_mass_classifier},
        {{6, "c06_qbe_oracle", "RK4 flow matches m0 exp(2iEt)"}, check_qbe_oracle},
        {{7, "c07_trace_projection", "Tr[[H,F] alpha_x] linear form"}, check_trace_projection},
        {{8, "c08_angular_momentum", "tensor conservation, invariant, block propagator"}, check_angular_momentum},
        {{9, "c09_compton", "Compton residuals in both embeddings"}, check_compton},
        {{10, "c10_phased_anticommutators", "phase-deformed anticommutators"}, check_phased_anticommutators},
        {{11, "c11_frames", "frame-equivalence identities and negative control"}, check_frames},
    };
    return list;
}

}  // namespace

const std::vector<CheckInfo>& check_catalog()
{
    static const std::vector<CheckInfo> list = [] {
        std::vector<CheckInfo> out;
        for (const auto& e : entries()) out.push_back(e.info);
        out.push_back({12, "c12_determinism", "report-all output is byte-identical across runs"});
        return out;
    }();
    return list;
}

CheckResult run_check(int criterion, std::uint64_t seed)
{
    for (const auto& e : entries()) {
        if (e.info.criterion != criterion) continue;
        // Each check draws from its own stream so results do not depend on order.
        CheckResult r = e.fn(seed * 1000003ULL + static_cast<std::uint64_t>(criterion));
        r.criterion = criterion;
        r.name = e.info.name;
        return r;
    }
    throw std::out_of_range("no runnable check for criterion " + std::to_string(criterion));
}

std::vector<CheckResult> run_checks(std::uint64_t seed)
{
    std::vector<CheckResult> out;
    for (const auto& e : entries()) out.push_back(run_check(e.info.criterion, seed));
    return out;
}

nlohmann::json to_json(const CheckResult& r)
{
    return {{"criterion", r.criterion},
            {"name", r.name},
            {"status", r.pass ? "PASS" : "FAIL"},
            {"residuals", r.residuals},
            {"notes", r.notes}};
}

namespace {

std::string serialise(const std::vector<CheckResult>& results, std::uint64_t seed)
{
    std::vector<CheckResult> sorted = results;
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
    nlohmann::json checks = nlohmann::json::array();
    int passed = 0;
    for (const auto& r : sorted) {
        checks.push_back(to_json(r));
        passed += r.pass ? 1 : 0;
    }
    nlohmann::json j{{"schema_version", kSchemaVersion},
                     {"seed", seed},
                     {"metric_signature", "+---"},
                     {"levi_civita", "eps_0123 = +1"},
                     {"checks", checks},
                     {"passed", passed},
                     {"failed", static_cast<int>(sorted.size()) - passed}};
    return j.dump(2) + "\n";
}

}  // namespace

Summary report_all(std::uint64_t seed)
{
    const std::vector<CheckResult> first = run_checks(seed);
    const std::vector<CheckResult> second = run_checks(seed);
    const std::string a = serialise(first, seed);
    const std::string b = serialise(second, seed);

    CheckResult det;
    det.criterion = 12;
    det.name = "c12_determinism";
    det.pass = a == b;
    det.residuals["byte_mismatch"] = a == b ? 0.0 : 1.0;
    det.residuals["bytes"] = static_cast<double>(a.size());

    Summary s;
    s.results = first;
    s.results.push_back(det);
    std::sort(s.results.begin(), s.results.end(), [](const auto& x, const auto& y) { return x.name < y.name; });
    s.text = serialise(s.results, seed);
    s.all_pass = std::all_of(s.results.begin(), s.results.end(), [](const auto& r) { return r.pass; });
    return s;
}

}  // namespace brach

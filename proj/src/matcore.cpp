#include "brach/matcore.hpp"

#include <algorithm>
#include <cmath>

namespace brach {

namespace {

void require_same_dim(const ComplexMat& a, const ComplexMat& b, const char* what)
{
    if (a.dim() != b.dim()) {
        throw DimensionError(std::string(what) + ": dimension mismatch (" + std::to_string(a.dim()) + " vs " +
                             std::to_string(b.dim()) + ")");
    }
}

}  // namespace

ComplexMat::ComplexMat(int dim) : dim_(dim)
{
    if (dim != 2 && dim != 4) {
        throw DimensionError("ComplexMat: dimension must be 2 or 4, got " + std::to_string(dim));
    }
}

ComplexMat::ComplexMat(int dim, std::initializer_list<cplx> row_major) : ComplexMat(dim)
{
    if (static_cast<int>(row_major.size()) != size()) {
        throw DimensionError("ComplexMat: expected " + std::to_string(size()) + " entries, got " +
                             std::to_string(row_major.size()));
    }
    std::copy(row_major.begin(), row_major.end(), data_.begin());
}

ComplexMat ComplexMat::identity(int dim)
{
    ComplexMat out(dim);
    for (int i = 0; i < dim; ++i) out(i, i) = 1.0;
    return out;
}

ComplexMat ComplexMat::diagonal(std::span<const cplx> diag)
{
    ComplexMat out(static_cast<int>(diag.size()));
    for (int i = 0; i < out.dim(); ++i) out(i, i) = diag[i];
    return out;
}

ComplexMat ComplexMat::from_entries(int dim, std::span<const cplx> row_major)
{
    ComplexMat out(dim);
    if (static_cast<int>(row_major.size()) != out.size()) {
        throw DimensionError("ComplexMat: expected " + std::to_string(out.size()) + " entries, got " +
                             std::to_string(row_major.size()));
    }
    std::copy(row_major.begin(), row_major.end(), out.data_.begin());
    return out;
}

ComplexMat ComplexMat::adjoint() const
{
    ComplexMat out(dim_);
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
}

ComplexMat ComplexMat::transpose() const
{
    ComplexMat out(dim_);
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c) out(c, r) = (*this)(r, c);
    return out;
}

ComplexMat ComplexMat::conj() const
{
    ComplexMat out(*this);
    for (int k = 0; k < size(); ++k) out.data_[k] = std::conj(data_[k]);
    return out;
}

cplx ComplexMat::trace() const
{
    cplx t = 0.0;
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMat::max_abs() const
{
    double m = 0.0;
    for (int k = 0; k < size(); ++k) m = std::max(m, std::abs(data_[k]));
    return m;
}

double ComplexMat::max_imag() const
{
    double m = 0.0;
    for (int k = 0; k < size(); ++k) m = std::max(m, std::abs(data_[k].imag()));
    return m;
}

ComplexMat& ComplexMat::operator+=(const ComplexMat& rhs)
{
    require_same_dim(*this, rhs, "operator+");
    for (int k = 0; k < size(); ++k) data_[k] += rhs.data_[k];
    return *this;
}

ComplexMat& ComplexMat::operator-=(const ComplexMat& rhs)
{
    require_same_dim(*this, rhs, "operator-");
    for (int k = 0; k < size(); ++k) data_[k] -= rhs.data_[k];
    return *this;
}

ComplexMat& ComplexMat::operator*=(cplx s)
{
    for (int k = 0; k < size(); ++k) data_[k] *= s;
    return *this;
}

ComplexMat operator*(const ComplexMat& a, const ComplexMat& b)
{
    require_same_dim(a, b, "operator*");
    const int n = a.dim();
    ComplexMat out(n);
    for (int r = 0; r < n; ++r) {
        for (int k = 0; k < n; ++k) {
            const cplx ark = a(r, k);
            if (ark == 0.0) continue;
            for (int c = 0; c < n; ++c) out(r, c) += ark * b(k, c);
        }
    }
    return out;
}

double max_abs_diff(const ComplexMat& a, const ComplexMat& b)
{
    require_same_dim(a, b, "max_abs_diff");
    return (a - b).max_abs();
}

bool is_hermitian(const ComplexMat& a, double tol)
{
    return max_abs_diff(a, a.adjoint()) <= tol;
}

bool is_unitary(const ComplexMat& a, double tol)
{
    return max_abs_diff(a.adjoint() * a, ComplexMat::identity(a.dim())) <= tol;
}

double off_diagonal_max(const ComplexMat& a)
{
    double m = 0.0;
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c)
            if (r != c) m = std::max(m, std::abs(a(r, c)));
    return m;
}

Spinor apply(const ComplexMat& a, const Spinor& v)
{
    if (a.dim() != 4) throw DimensionError("apply: spinors are 4-component");
    Spinor out{};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out[r] += a(r, c) * v[c];
    return out;
}

cplx inner(const Spinor& u, const Spinor& v)
{
    cplx s = 0.0;
    for (int k = 0; k < 4; ++k) s += std::conj(u[k]) * v[k];
    return s;
}

double norm(const Spinor& v)
{
    return std::sqrt(inner(v, v).real());
}

char pauli_char(Pauli p)
{
    switch (p) {
    case Pauli::I: return '1';
    case Pauli::X: return 'x';
    case Pauli::Y: return 'y';
    case Pauli::Z: return 'z';
    }
    return '?';
}

Pauli pauli_from_char(char c)
{
    switch (c) {
    case '1':
    case 'i':
    case 't': return Pauli::I;
    case 'x': return Pauli::X;
    case 'y': return Pauli::Y;
    case 'z': return Pauli::Z;
    default: throw std::invalid_argument(std::string("unknown Pauli index '") + c + "'");
    }
}

ComplexMat pauli(Pauli index)
{
    switch (index) {
    case Pauli::I: return ComplexMat::identity(2);
    case Pauli::X: return ComplexMat(2, {0.0, 1.0, 1.0, 0.0});
    case Pauli::Y: return ComplexMat(2, {0.0, -kI, kI, 0.0});
    case Pauli::Z: return ComplexMat(2, {1.0, 0.0, 0.0, -1.0});
    }
    throw std::invalid_argument("pauli: invalid index");
}

std::string KronLabel::name() const
{
    return {pauli_char(first), pauli_char(second)};
}

KronLabel KronLabel::parse(const std::string& name)
{
    if (name.size() != 2) throw std::invalid_argument("KronLabel: expected two characters, got '" + name + "'");
    return {pauli_from_char(name[0]), pauli_from_char(name[1])};
}

int KronLabel::index() const
{
    return static_cast<int>(first) * 4 + static_cast<int>(second);
}

ComplexMat kron(const ComplexMat& a, const ComplexMat& b)
{
    if (a.dim() != 2 || b.dim() != 2) throw DimensionError("kron: both factors must be 2x2");
    ComplexMat out(4);
    for (int ar = 0; ar < 2; ++ar)
        for (int ac = 0; ac < 2; ++ac)
            for (int br = 0; br < 2; ++br)
                for (int bc = 0; bc < 2; ++bc) out(2 * ar + br, 2 * ac + bc) = a(ar, ac) * b(br, bc);
    return out;
}

ComplexMat kron(KronLabel label)
{
    return kron(pauli(label.first), pauli(label.second));
}

ComplexMat commutator(const ComplexMat& a, const ComplexMat& b)
{
    require_same_dim(a, b, "commutator");
    return a * b - b * a;
}

ComplexMat anticommutator(const ComplexMat& a, const ComplexMat& b)
{
    require_same_dim(a, b, "anticommutator");
    return a * b + b * a;
}

cplx trace_pair(const ComplexMat& a, const ComplexMat& b)
{
    require_same_dim(a, b, "trace_pair");
    cplx t = 0.0;
    for (int r = 0; r < a.dim(); ++r)
        for (int k = 0; k < a.dim(); ++k) t += a(r, k) * b(k, r);
    return t;
}

const std::vector<BasisElement>& basis16()
{
    static const std::vector<BasisElement> basis = [] {
        std::vector<BasisElement> out;
        out.reserve(16);
        for (Pauli i : kAllPauli)
            for (Pauli j : kAllPauli) out.push_back({KronLabel{i, j}, kron(KronLabel{i, j})});
        return out;
    }();
    return basis;
}

std::vector<KronLabel> traceless_labels()
{
    std::vector<KronLabel> out;
    for (const auto& e : basis16())
        if (!e.label.is_identity()) out.push_back(e.label);
    return out;
}

ComplexMat mat_exp_diag(const ComplexMat& d, double t)
{
    if (off_diagonal_max(d) >= kDiagonalTol) {
        throw std::invalid_argument("mat_exp_diag: input is not diagonal");
    }
    ComplexMat out(d.dim());
    for (int k = 0; k < d.dim(); ++k) out(k, k) = std::exp(-kI * t * d(k, k));
    return out;
}

}  // namespace brach

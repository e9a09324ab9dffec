#pragma once

// Dense 2x2 / 4x4 complex matrices and the 16-element Pauli-Kronecker basis.
//
// Natural units throughout (hbar = c = 1). All values are immutable once
// built; every free function here is pure.

#include <array>
#include <complex>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace brach {

using cplx = std::complex<double>;
using Vec3 = std::array<double, 3>;
using Spinor = std::array<cplx, 4>;

inline constexpr cplx kI{0.0, 1.0};

/// Default absolute tolerance for matrix predicates.
inline constexpr double kDefaultTol = 1e-10;
/// Off-diagonal magnitude allowed by mat_exp_diag.
inline constexpr double kDiagonalTol = 1e-12;

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/**
 * Square complex matrix of dimension 2 or 4, stored row-major.
 */
class ComplexMat {
public:
    /// Zero 4x4 matrix.
    ComplexMat() : ComplexMat(4) {}
    /// Zero matrix of the given dimension; throws DimensionError unless dim is 2 or 4.
    explicit ComplexMat(int dim);
    /// Row-major entries; the list must hold exactly dim*dim values.
    ComplexMat(int dim, std::initializer_list<cplx> row_major);

    static ComplexMat identity(int dim);
    static ComplexMat zero(int dim) { return ComplexMat(dim); }
    static ComplexMat diagonal(std::span<const cplx> diag);
    static ComplexMat from_entries(int dim, std::span<const cplx> row_major);

    int dim() const { return dim_; }
    int size() const { return dim_ * dim_; }

    cplx& operator()(int row, int col) { return data_[row * dim_ + col]; }
    const cplx& operator()(int row, int col) const { return data_[row * dim_ + col]; }

    std::span<const cplx> entries() const { return {data_.data(), static_cast<std::size_t>(size())}; }

    ComplexMat adjoint() const;
    ComplexMat transpose() const;
    ComplexMat conj() const;
    cplx trace() const;
    /// Largest entry magnitude.
    double max_abs() const;
    /// Largest |Im| over the entries.
    double max_imag() const;

    ComplexMat& operator+=(const ComplexMat& rhs);
    ComplexMat& operator-=(const ComplexMat& rhs);
    ComplexMat& operator*=(cplx s);

    friend ComplexMat operator+(ComplexMat a, const ComplexMat& b) { return a += b; }
    friend ComplexMat operator-(ComplexMat a, const ComplexMat& b) { return a -= b; }
    friend ComplexMat operator-(ComplexMat a) { return a *= -1.0; }
    friend ComplexMat operator*(ComplexMat a, cplx s) { return a *= s; }
    friend ComplexMat operator*(cplx s, ComplexMat a) { return a *= s; }
    friend ComplexMat operator*(ComplexMat a, double s) { return a *= s; }
    friend ComplexMat operator*(double s, ComplexMat a) { return a *= s; }
    friend ComplexMat operator*(const ComplexMat& a, const ComplexMat& b);

    bool operator==(const ComplexMat& other) const = default;

private:
    int dim_;
    std::array<cplx, 16> data_{};
};

/// max |a_ij - b_ij|; throws DimensionError on mismatch.
double max_abs_diff(const ComplexMat& a, const ComplexMat& b);

bool is_hermitian(const ComplexMat& a, double tol = kDefaultTol);
bool is_unitary(const ComplexMat& a, double tol = kDefaultTol);
/// Largest off-diagonal magnitude.
double off_diagonal_max(const ComplexMat& a);

Spinor apply(const ComplexMat& a, const Spinor& v);
/// <u|v>, conjugate-linear in u.
cplx inner(const Spinor& u, const Spinor& v);
double norm(const Spinor& v);

// ---------------------------------------------------------------------------
// Pauli matrices and the Kronecker basis
// ---------------------------------------------------------------------------

enum class Pauli { I, X, Y, Z };

inline constexpr std::array<Pauli, 4> kAllPauli{Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};

char pauli_char(Pauli p);  // '1', 'x', 'y', 'z'
Pauli pauli_from_char(char c);

/// sigma_i (or 1_2) as a 2x2 matrix.
ComplexMat pauli(Pauli index);

/// Label of the basis element sigma_first (x) sigma_second.
struct KronLabel {
    Pauli first = Pauli::I;
    Pauli second = Pauli::I;

    bool is_identity() const { return first == Pauli::I && second == Pauli::I; }
    /// Two-character name, e.g. "zx" or "1y".
    std::string name() const;
    static KronLabel parse(const std::string& name);
    /// Position 0..15 in basis16() order (first index major).
    int index() const;

    auto operator<=>(const KronLabel&) const = default;
};

struct BasisElement {
    KronLabel label;
    ComplexMat mat;
};

/// Standard Kronecker product of two 2x2 matrices.
ComplexMat kron(const ComplexMat& a, const ComplexMat& b);
ComplexMat kron(KronLabel label);

ComplexMat commutator(const ComplexMat& a, const ComplexMat& b);
ComplexMat anticommutator(const ComplexMat& a, const ComplexMat& b);
/// Tr[a b].
cplx trace_pair(const ComplexMat& a, const ComplexMat& b);

/// The 16 matrices sigma_i (x) sigma_j, i, j in {1, x, y, z}, first index major.
const std::vector<BasisElement>& basis16();
/// The 15 traceless labels in basis16() order.
std::vector<KronLabel> traceless_labels();

/// exp(-i t d) for diagonal d; throws std::invalid_argument if an
/// off-diagonal entry exceeds kDiagonalTol.
ComplexMat mat_exp_diag(const ComplexMat& d, double t);

}  // namespace brach

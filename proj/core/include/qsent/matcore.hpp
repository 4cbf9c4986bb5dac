#pragma once

// Dense complex linear algebra shared by every other module.
//
// Composite indices on C^d ⊗ C^d are laid out as (μ, ν) ↦ μ·d + ν, and vec()
// flattens row-major so that vec(|μ⟩⟨ν|) = |μ⟩ ⊗ |ν⟩. This fixes the layout
// of the superoperator matrix and of the reshuffling map; it is canonical for
// the whole library.

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace qsent {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

/// Max-entry tolerance on X − X† for inputs treated as Hermitian.
inline constexpr double herm_tol = 1e-8;

/// Eigenvalue tolerance for an n×n decomposition.
constexpr double eig_tol(std::ptrdiff_t n) noexcept { return 1e-9 * static_cast<double>(n); }

enum class SpectrumKind { HermitianEigenvalues, SingularValues };

/// Eigen- or singular values with multiplicity, sorted descending.
struct Spectrum {
    std::vector<double> values;
    SpectrumKind kind = SpectrumKind::HermitianEigenvalues;

    std::size_t size() const noexcept { return values.size(); }
    double sum() const noexcept;
    double max() const noexcept { return values.empty() ? 0.0 : values.front(); }
    double min() const noexcept { return values.empty() ? 0.0 : values.back(); }
};

enum class Subsystem { First, Second };

/// Largest |X[i,j] − conj(X[j,i])|.
double hermiticity_deviation(const ComplexMatrix& x);

/// Largest entry modulus of a − b.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Eigenvalues of (X + X†)/2, descending. Throws NonSquare, NotHermitian.
Spectrum hermitian_eigenvalues(const ComplexMatrix& x);

/// Nonnegative singular values, descending.
Spectrum singular_values(const ComplexMatrix& x);

/// Zeroes every value with |v| ≤ tol. Values below −tol mean the matrix is not
/// positive semidefinite and raise NotPositive.
Spectrum clamp_psd(Spectrum spectrum, double tol);

/// Number of values strictly above tol.
std::size_t numeric_rank(const Spectrum& spectrum, double tol);

/// (A ⊗ B)[i·rB + k, j·cB + l] = A[i,j]·B[k,l].
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Partial trace of a d²×d² operator over the named tensor factor.
ComplexMatrix partial_trace(const ComplexMatrix& x, std::ptrdiff_t d, Subsystem traced);

/// Row-major flattening of a square matrix into a d²×1 column.
ComplexMatrix vec(const ComplexMatrix& x);

/// Inverse of vec() for a d²-long column.
ComplexMatrix unvec(const ComplexMatrix& v, std::ptrdiff_t d);

struct InverseSqrt {
    ComplexMatrix matrix;
    double condition = 0.0; ///< λ_max / λ_min of the input
};

/// Principal inverse square root of a Hermitian positive definite matrix.
/// Throws SingularNormalizer when the smallest eigenvalue is not positive.
InverseSqrt inverse_sqrt_psd(const ComplexMatrix& x);

} // namespace qsent

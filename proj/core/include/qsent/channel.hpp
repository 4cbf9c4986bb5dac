#pragma once

// Quantum channels in Kraus form and their two d²×d² matrix representations.
//
//   D_Φ = Σ_i vec(A_i) vec(A_i)†      dynamical (Choi) matrix, Hermitian PSD, trace d
//   K_Φ = Σ_i A_i ⊗ conj(A_i)         superoperator matrix, vec(Φ(X)) = K_Φ vec(X)
//
// Both follow from the row-major vec() of matcore and are related entrywise by
// ⟨αβ|K|μν⟩ = ⟨αμ|D|βν⟩ (see reshuffle()).

#include <cstddef>
#include <vector>

#include "qsent/matcore.hpp"

namespace qsent {

/// Max-entry tolerance on Σ A_i†A_i − I.
inline constexpr double tp_tol = 1e-8;

/// Max-entry tolerance on Σ A_i A_i† − I used to classify a channel as unital.
inline constexpr double unital_tol = 1e-10;

inline constexpr std::ptrdiff_t min_channel_dim = 2;
inline constexpr std::ptrdiff_t max_channel_dim = 16;

/// A trace-preserving completely positive map given by its Kraus operators.
/// The constructor validates shapes and trace preservation; instances are
/// immutable afterwards.
class KrausChannel {
public:
    explicit KrausChannel(std::vector<ComplexMatrix> kraus_ops);

    std::ptrdiff_t dim() const noexcept { return dim_; }
    const std::vector<ComplexMatrix>& kraus_ops() const noexcept { return kraus_; }
    std::size_t kraus_count() const noexcept { return kraus_.size(); }

    /// max |Σ A_i†A_i − I|.
    double tp_defect() const;
    /// max |Σ A_i A_i† − I|.
    double unitality_defect() const;

private:
    std::ptrdiff_t dim_ = 0;
    std::vector<ComplexMatrix> kraus_;
};

struct DynamicalMatrix {
    std::ptrdiff_t dim = 0;
    ComplexMatrix matrix;
};

struct SuperoperatorMatrix {
    std::ptrdiff_t dim = 0;
    ComplexMatrix matrix;
};

/// Deviations of a dynamical matrix from its defining properties.
struct DynamicalDiagnostics {
    std::ptrdiff_t dim = 0;
    double hermiticity = 0.0;         ///< max |D − D†|
    double min_eigenvalue = 0.0;      ///< before clamping
    double trace_defect = 0.0;        ///< |Tr D − d|
    double partial_trace_defect = 0.0; ///< max |Tr_Q D − I|

    bool valid() const noexcept;
};

/// |φ₊⟩ = d^{-1/2} Σ_ν |ν⟩⊗|ν⟩ as a d²×1 column.
ComplexMatrix maximally_entangled_state(std::ptrdiff_t d);

DynamicalMatrix dynamical_from_kraus(const KrausChannel& ch);
SuperoperatorMatrix superoperator_from_kraus(const KrausChannel& ch);

/// output[α·d+β, μ·d+ν] = input[α·d+μ, β·d+ν]. An involution that permutes
/// entries, so it maps D_Φ to K_Φ and back.
ComplexMatrix reshuffle(const ComplexMatrix& m, std::ptrdiff_t d);

/// Σ_i A_i X A_i†.
ComplexMatrix apply_channel(const KrausChannel& ch, const ComplexMatrix& x);

/// Φ(X) = Tr_R(D_Φ (1 ⊗ Xᵀ)), the Choi-side action.
ComplexMatrix apply_via_dynamical(const DynamicalMatrix& dm, const ComplexMatrix& x);

bool is_unital(const KrausChannel& ch, double tol);

DynamicalDiagnostics diagnose(const DynamicalMatrix& dm);

} // namespace qsent

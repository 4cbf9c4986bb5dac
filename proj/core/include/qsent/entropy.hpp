#pragma once

// Unified (q,s)-entropies of the two channel representations.
//
// For a nonnegative spectrum v normalized by N, with p_j = v_j / N:
//
//   s ≠ 0, q ≠ 1:  [ (Σ p_j^q)^s − 1 ] / ((1−q) s)
//   s → 0:         ln(Σ p_j^q) / (1−q)               (Rényi)
//   q → 1:         −Σ p_j ln p_j                     (von Neumann / Shannon)
//
// The map entropy takes the Choi eigenvalues with N = d, the receiver entropy
// takes the superoperator singular values with N = ‖K‖₁.

#include <optional>
#include <string_view>

#include "qsent/channel.hpp"
#include "qsent/matcore.hpp"

namespace qsent {

/// Half-width of the bands |q − 1| ≤ limit_eps and |s| ≤ limit_eps in which the
/// closed-form limits replace the generic formula.
inline constexpr double limit_eps = 1e-8;

struct EntropyParams {
    double q = 2.0;
    double s = 0.0;

    bool von_neumann_limit() const noexcept;
    bool renyi_limit() const noexcept;

    /// 1 when (1−q)s < 0, 2 when (1−q)s > 0; empty inside either limit band.
    std::optional<int> gamma() const noexcept;
    /// 1 on (0, 2], q / (2(q−1)) on [2, ∞).
    double kappa() const noexcept;
};

/// Throws DomainError unless q > 0 and both parameters are finite.
void validate(const EntropyParams& p);

enum class EntropyFamily { Unified, RenyiLimit, Tsallis, VonNeumannLimit };

std::string_view to_string(EntropyFamily family) noexcept;
EntropyFamily family_of(const EntropyParams& p) noexcept;

struct EntropyValue {
    double value = 0.0;
    EntropyFamily family = EntropyFamily::Unified;
    EntropyParams params;
};

/// ln_q(x) = (x^{1−q} − 1)/(1 − q), and ln x inside the limit band.
double q_log(double x, double q);

/// Largest value the entropy can take on a distribution with `support` nonzero
/// entries: (1/s) ln_q(support^s), ln(support) at s = 0 or q = 1.
double entropy_upper_bound(std::size_t support, const EntropyParams& p);

EntropyValue entropy_from_spectrum(const Spectrum& spectrum, double normalizer, const EntropyParams& p);

/// Choi eigenvalues clamped at eig_tol(d²), normalized by d.
Spectrum map_spectrum(const DynamicalMatrix& dm);
/// Superoperator singular values with round-off below eig_tol(d²) zeroed.
Spectrum receiver_spectrum(const SuperoperatorMatrix& km);

EntropyValue map_entropy(const DynamicalMatrix& dm, const EntropyParams& p);
EntropyValue receiver_entropy(const SuperoperatorMatrix& km, const EntropyParams& p);

} // namespace qsent

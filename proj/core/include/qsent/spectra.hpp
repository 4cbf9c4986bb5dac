#pragma once

// Schatten q-norms (q ≥ 1, including ∞) over singular values and Schatten
// q-anti-norms over eigenvalues of positive matrices (0 < q < 1 on PSD input,
// q < 0 on strictly positive input), plus executable forms of the norm
// inequalities the trade-off bounds are built from.

#include <span>
#include <string>

#include "qsent/channel.hpp"
#include "qsent/matcore.hpp"

namespace qsent {

/// Smallest eigenvalue accepted by the q < 0 anti-norm.
inline constexpr double strict_pos_tol = 1e-10;

enum class NormRegime { Norm, AntinormPsd, AntinormStrict };

/// The index q of a Schatten norm or anti-norm. ∞ is a distinguished value.
class NormOrder {
public:
    /// Throws InvalidOrder for q = 0 or NaN.
    explicit NormOrder(double q);
    static NormOrder infinity() noexcept;

    double value() const noexcept { return q_; }
    bool is_infinite() const noexcept { return infinite_; }
    NormRegime regime() const noexcept;

private:
    NormOrder() = default;
    double q_ = 0.0;
    bool infinite_ = false;
};

/// (Σ v_j^q)^{1/q} over the strictly positive entries of values, evaluated
/// with the extreme entry factored out so no power overflows. Entries that are
/// exactly zero contribute nothing (q > 0). For q < 0 every entry must be > 0.
double power_mean_norm(std::span<const double> values, double q);

/// Σ v_j^q over strictly positive entries; zero entries are skipped.
double power_sum(std::span<const double> values, double q);

/// Throws InvalidOrder unless q ≥ 1 or q = ∞.
double schatten_norm(const ComplexMatrix& x, NormOrder q);
double schatten_norm(const Spectrum& singular, NormOrder q);

/// Throws InvalidOrder for q ≥ 1 and NotPositive when x fails the positivity
/// the regime needs.
double schatten_antinorm(const ComplexMatrix& x, NormOrder q);

enum class Direction { LessEqual, GreaterEqual };

/// Outcome of one inequality evaluation. slack is oriented so that a holding
/// inequality has slack ≥ 0, and is relative to max(|lhs|, |rhs|, 1).
struct InequalityReport {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    bool passed = false;
    Direction direction = Direction::LessEqual;
};

/// ‖X‖_q^q against ‖X‖₂^{2(q−1)} ‖X‖₁^{2−q}: ≤ for 1 ≤ q ≤ 2, ≥ for q ≥ 2, for
/// 0 < q < 1 (PSD X) and for q < 0 (strictly positive X). Passes when the
/// relative slack is ≥ −1e−9.
InequalityReport check_prop1(const ComplexMatrix& x, double q);

/// ‖X‖₂ ≤ ‖X‖∞^{1/2} ‖X‖₁^{1/2}.
InequalityReport check_two_inf_one(const ComplexMatrix& x);

/// ‖K_Φ‖∞ ≤ d^{1/2} ‖Φ(1/d)‖∞^{1/2}, and ‖K_Φ‖∞ ≤ 1 when Φ is unital.
InequalityReport check_superop_norm_bound(const KrausChannel& ch);

/// ‖X‖_q ≤ ‖X‖_p for 0 < p < q on PSD X, each order taken in its own regime.
InequalityReport check_antinorm_monotonicity(const ComplexMatrix& x, double p, double q);

/// ‖X+Y‖_q ≥ ‖X‖_q + ‖Y‖_q for anti-norm orders (0 < q < 1 or q < 0).
InequalityReport check_superadditivity(const ComplexMatrix& x, const ComplexMatrix& y, double q);

/// (‖D‖₁/‖D‖₂)(‖K‖₁/‖K‖₂) ≥ d^{1/2}, or ≥ d for unital channels.
InequalityReport check_norm_ratio_product(const KrausChannel& ch);

} // namespace qsent

#pragma once

// Lower bounds on the sum of map and receiver (q,s)-entropies.
//
//   all channels:   M + R ≥ (γ/s) ln_q(d^{sκ/γ})
//   unital:         M + R ≥ (γ/s) ln_q(d^{2sκ/γ})
//   s → 0:          κ ln d, resp. 2κ ln d
//
// with γ, κ from EntropyParams. The proof reduces the sum to minimizing
// 2 − x − y over D_a = {0 ≤ x,y ≤ 1, xy ≤ a} or x + y − 2 over
// D_b = {x,y ≥ 1, xy ≥ b}; both minima are exposed for testing.

#include <optional>
#include <string>

#include "qsent/channel.hpp"
#include "qsent/entropy.hpp"
#include "qsent/error.hpp"
#include "qsent/matcore.hpp"

namespace qsent {

/// Gap below which a report counts as saturated.
inline constexpr double sat_tol = 1e-7;
/// Most negative gap tolerated before a report is a violation.
inline constexpr double gap_tol = 1e-9;

struct GammaKappa {
    int gamma = 1;
    double kappa = 1.0;
};

/// Throws DomainError for q ≤ 0, and inside the q = 1 or s = 0 limit bands.
GammaKappa gamma_kappa(double q, double s);

/// Throws DomainError for d < 2 or q ≤ 0.
double lower_bound(std::ptrdiff_t d, const EntropyParams& p, bool unital);

/// Spectra of one channel, computed once and shared by every (q,s) cell.
struct ChannelProfile {
    std::ptrdiff_t dim = 0;
    bool unital = false;
    Spectrum choi;    ///< clamped eigenvalues of D_Φ
    Spectrum superop; ///< singular values of K_Φ
};

ChannelProfile profile(const KrausChannel& ch);

struct TradeoffReport {
    std::string channel_id;
    EntropyParams params;
    EntropyFamily formula = EntropyFamily::Unified;
    double map_value = 0.0;
    double receiver_value = 0.0;
    double bound_all = 0.0;
    std::optional<double> bound_unital; ///< present iff the channel is unital
    double gap = 0.0;                   ///< M + R minus the sharpest applicable bound
    bool saturated = false;
    /// q = 1 lies outside the hypotheses of the bound; the limit value is
    /// reported but a negative gap is not treated as a violation.
    bool limit_extrapolated = false;

    double sum() const noexcept { return map_value + receiver_value; }
    bool violates() const noexcept { return !limit_extrapolated && gap < -gap_tol; }
};

class BoundViolation : public Error {
public:
    explicit BoundViolation(TradeoffReport report);
    const TradeoffReport& report() const noexcept { return report_; }

private:
    TradeoffReport report_;
};

/// Evaluates without throwing on a violation.
TradeoffReport tradeoff_report(const ChannelProfile& prof, const EntropyParams& p, std::string channel_id = {});

/// As tradeoff_report(), but throws BoundViolation when report.violates().
TradeoffReport evaluate_tradeoff(const ChannelProfile& prof, const EntropyParams& p, std::string channel_id = {});
TradeoffReport evaluate_tradeoff(const KrausChannel& ch, const EntropyParams& p, std::string channel_id = {});

/// min{2 − x − y : (x,y) ∈ D_a} = 1 − a for 0 < a < 1.
double domain_min_low(double a);
/// min{x + y − 2 : (x,y) ∈ D_b} = 2(√b − 1) for b > 1.
double domain_min_high(double b);

enum class ProofDomain { Low, High };

/// Where a channel's normalized moments land in the minimization of the proof:
/// x = (Σ_j p_j^q)^s over the Choi distribution and y likewise over the
/// singular-value distribution, so that M + R = (x + y − 2)/((1−q)s).
struct NormChainDiagnostic {
    double x = 0.0;
    double y = 0.0;
    ProofDomain domain = ProofDomain::Low;
    double threshold = 0.0; ///< a for D_a, b for D_b
    bool inside = false;
};

/// Requires q ≠ 1 and s ≠ 0 outside the limit bands.
NormChainDiagnostic norm_chain(const ChannelProfile& prof, const EntropyParams& p);

} // namespace qsent

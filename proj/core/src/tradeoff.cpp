#include "qsent/tradeoff.hpp"

#include <cmath>
#include <string>


namespace qsent {

namespace {

/// ln_q(d^t), evaluated as expm1(t(1−q) ln d)/(1−q).
double q_log_of_power(double d, double t, double q) {
    const double log_x = t * std::log(d);
    if (std::abs(q - 1.0) <= limit_eps) return log_x;
    return std::expm1((1.0 - q) * log_x) / (1.0 - q);
}

double normalized_moment(const Spectrum& spec, double q) {
    const double total = spec.sum();
    double acc = 0.0;
    for (double v : spec.values) {
        if (v > 0.0) acc += std::pow(v / total, q);
    }
    return acc;
}

std::string describe(const TradeoffReport& r) {
    return "channel '" + r.channel_id + "' q=" + std::to_string(r.params.q) + " s=" + std::to_string(r.params.s) +
           " M+R=" + std::to_string(r.sum()) + " gap=" + std::to_string(r.gap);
}

} // namespace

GammaKappa gamma_kappa(double q, double s) {
    const EntropyParams p{q, s};
    validate(p);
    const auto gamma = p.gamma();
    if (!gamma) throw Error(ErrorCode::DomainError, "gamma is undefined at q = 1 or s = 0");
    return {*gamma, p.kappa()};
}

double lower_bound(std::ptrdiff_t d, const EntropyParams& p, bool unital) {
    if (d < 2) throw Error(ErrorCode::DomainError, "lower_bound needs d >= 2");
    validate(p);
    const double dim = static_cast<double>(d);
    const double factor = unital ? 2.0 : 1.0;
    const double kappa = p.kappa();
    if (p.von_neumann_limit() || p.renyi_limit()) return factor * kappa * std::log(dim);
    const double gamma = *p.gamma();
    return gamma / p.s * q_log_of_power(dim, factor * p.s * kappa / gamma, p.q);
}

ChannelProfile profile(const KrausChannel& ch) {
    return {ch.dim(), is_unital(ch, unital_tol), map_spectrum(dynamical_from_kraus(ch)),
            receiver_spectrum(superoperator_from_kraus(ch))};
}

BoundViolation::BoundViolation(TradeoffReport report)
    : Error(ErrorCode::BoundViolation, describe(report)), report_(std::move(report)) {}

TradeoffReport tradeoff_report(const ChannelProfile& prof, const EntropyParams& p, std::string channel_id) {
    TradeoffReport r;
    r.channel_id = std::move(channel_id);
    r.params = p;
    r.formula = family_of(p);
    r.map_value = entropy_from_spectrum(prof.choi, static_cast<double>(prof.dim), p).value;
    r.receiver_value = entropy_from_spectrum(prof.superop, prof.superop.sum(), p).value;
    r.bound_all = lower_bound(prof.dim, p, false);
    if (prof.unital) r.bound_unital = lower_bound(prof.dim, p, true);
    r.gap = r.sum() - r.bound_unital.value_or(r.bound_all);
    r.saturated = std::abs(r.gap) <= sat_tol;
    r.limit_extrapolated = p.von_neumann_limit();
    return r;
}

TradeoffReport evaluate_tradeoff(const ChannelProfile& prof, const EntropyParams& p, std::string channel_id) {
    TradeoffReport r = tradeoff_report(prof, p, std::move(channel_id));
    if (r.violates()) throw BoundViolation(std::move(r));
    return r;
}

TradeoffReport evaluate_tradeoff(const KrausChannel& ch, const EntropyParams& p, std::string channel_id) {
    return evaluate_tradeoff(profile(ch), p, std::move(channel_id));
}

double domain_min_low(double a) {
    if (!(a > 0.0 && a < 1.0)) throw Error(ErrorCode::DomainError, "domain_min_low needs 0 < a < 1");
    return 1.0 - a;
}

double domain_min_high(double b) {
    if (!(b > 1.0) || !std::isfinite(b)) throw Error(ErrorCode::DomainError, "domain_min_high needs b > 1");
    return 2.0 * (std::sqrt(b) - 1.0);
}

NormChainDiagnostic norm_chain(const ChannelProfile& prof, const EntropyParams& p) {
    const auto gk = gamma_kappa(p.q, p.s);
    const double factor = prof.unital ? 2.0 : 1.0;
    NormChainDiagnostic out;
    out.x = std::pow(normalized_moment(prof.choi, p.q), p.s);
    out.y = std::pow(normalized_moment(prof.superop, p.q), p.s);
    out.threshold = std::pow(static_cast<double>(prof.dim), factor * p.s * gk.kappa * (1.0 - p.q));
    constexpr double tol = 1e-9;
    if ((1.0 - p.q) * p.s > 0.0) {
        out.domain = ProofDomain::High;
        out.inside = out.x >= 1.0 - tol && out.y >= 1.0 - tol && out.x * out.y >= out.threshold * (1.0 - tol);
    } else {
        out.domain = ProofDomain::Low;
        out.inside = out.x <= 1.0 + tol && out.y <= 1.0 + tol && out.x * out.y <= out.threshold * (1.0 + tol);
    }
    return out;
}

} // namespace qsent

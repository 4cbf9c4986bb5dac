#include "qsent/entropy.hpp"

#include <cmath>
#include <string>

#include "qsent/error.hpp"

namespace qsent {

bool EntropyParams::von_neumann_limit() const noexcept { return std::abs(q - 1.0) <= limit_eps; }

bool EntropyParams::renyi_limit() const noexcept { return std::abs(s) <= limit_eps; }

std::optional<int> EntropyParams::gamma() const noexcept {
    if (von_neumann_limit() || renyi_limit()) return std::nullopt;
    return (1.0 - q) * s < 0.0 ? 1 : 2;
}

double EntropyParams::kappa() const noexcept { return q <= 2.0 ? 1.0 : q / (2.0 * (q - 1.0)); }

void validate(const EntropyParams& p) {
    if (!(p.q > 0.0) || !std::isfinite(p.q)) {
        throw Error(ErrorCode::DomainError, "entropy order q must be finite and > 0, got " + std::to_string(p.q));
    }
    if (!std::isfinite(p.s)) throw Error(ErrorCode::DomainError, "entropy parameter s must be finite");
}

std::string_view to_string(EntropyFamily family) noexcept {
    switch (family) {
    case EntropyFamily::Unified: return "unified";
    case EntropyFamily::RenyiLimit: return "renyi-limit";
    case EntropyFamily::Tsallis: return "tsallis";
    case EntropyFamily::VonNeumannLimit: return "von-neumann-limit";
    }
    return "unified";
}

EntropyFamily family_of(const EntropyParams& p) noexcept {
    if (p.von_neumann_limit()) return EntropyFamily::VonNeumannLimit;
    if (p.renyi_limit()) return EntropyFamily::RenyiLimit;
    if (p.s == 1.0) return EntropyFamily::Tsallis;
    return EntropyFamily::Unified;
}

double q_log(double x, double q) {
    if (!(x > 0.0) || !(q > 0.0)) {
        throw Error(ErrorCode::DomainError, "q_log needs x > 0 and q > 0, got x=" + std::to_string(x) +
                                                " q=" + std::to_string(q));
    }
    if (std::abs(q - 1.0) <= limit_eps) return std::log(x);
    return std::expm1((1.0 - q) * std::log(x)) / (1.0 - q);
}

double entropy_upper_bound(std::size_t support, const EntropyParams& p) {
    validate(p);
    if (support == 0) throw Error(ErrorCode::DomainError, "support must be nonempty");
    const double log_n = std::log(static_cast<double>(support));
    if (p.von_neumann_limit() || p.renyi_limit()) return log_n;
    return std::expm1((1.0 - p.q) * p.s * log_n) / ((1.0 - p.q) * p.s);
}

EntropyValue entropy_from_spectrum(const Spectrum& spectrum, double normalizer, const EntropyParams& p) {
    validate(p);
    if (!(normalizer > 0.0)) throw Error(ErrorCode::InvalidSpectrum, "normalizer must be positive");
    bool any_positive = false;
    for (double v : spectrum.values) {
        if (v < 0.0 || std::isnan(v)) {
            throw Error(ErrorCode::InvalidSpectrum, "negative spectral value " + std::to_string(v));
        }
        any_positive = any_positive || v > 0.0;
    }
    if (!any_positive) throw Error(ErrorCode::InvalidSpectrum, "spectrum is identically zero");

    EntropyValue out{0.0, family_of(p), p};
    if (out.family == EntropyFamily::VonNeumannLimit) {
        double acc = 0.0;
        for (double v : spectrum.values) {
            if (v > 0.0) {
                const double pj = v / normalizer;
                acc -= pj * std::log(pj);
            }
        }
        out.value = acc;
        return out;
    }

    double moment = 0.0;
    for (double v : spectrum.values) {
        if (v > 0.0) moment += std::pow(v / normalizer, p.q);
    }
    const double log_moment = std::log(moment);
    if (out.family == EntropyFamily::RenyiLimit) {
        out.value = log_moment / (1.0 - p.q);
    } else {
        out.value = std::expm1(p.s * log_moment) / ((1.0 - p.q) * p.s);
    }
    return out;
}

Spectrum map_spectrum(const DynamicalMatrix& dm) {
    return clamp_psd(hermitian_eigenvalues(dm.matrix), eig_tol(dm.matrix.rows()));
}

Spectrum receiver_spectrum(const SuperoperatorMatrix& km) {
    return clamp_psd(singular_values(km.matrix), eig_tol(km.matrix.rows()));
}

EntropyValue map_entropy(const DynamicalMatrix& dm, const EntropyParams& p) {
    Spectrum spec;
    try {
        spec = map_spectrum(dm);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::NotPositive) throw Error(ErrorCode::InvalidSpectrum, e.what());
        throw;
    }
    return entropy_from_spectrum(spec, static_cast<double>(dm.dim), p);
}

EntropyValue receiver_entropy(const SuperoperatorMatrix& km, const EntropyParams& p) {
    const Spectrum spec = receiver_spectrum(km);
    return entropy_from_spectrum(spec, spec.sum(), p);
}

} // namespace qsent

#include "qsent/sampler.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "qsent/error.hpp"

namespace qsent {

namespace {

void require_dim(std::ptrdiff_t d) {
    if (d < min_channel_dim || d > max_channel_dim) {
        throw Error(ErrorCode::ParamOutOfRange, "dimension " + std::to_string(d) + " outside [2, 16]");
    }
}

void require_unit_interval(std::string_view name, double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw Error(ErrorCode::ParamOutOfRange, std::string(name) + " parameter must lie in [0, 1], got " +
                                                    std::to_string(p));
    }
}

ComplexMatrix basis_op(std::ptrdiff_t d, std::ptrdiff_t row, std::ptrdiff_t col, Complex value = 1.0) {
    ComplexMatrix m = ComplexMatrix::Zero(d, d);
    m(row, col) = value;
    return m;
}

std::vector<ComplexMatrix> completely_depolarizing_ops(std::ptrdiff_t d, double weight) {
    std::vector<ComplexMatrix> ops;
    const double amp = std::sqrt(weight / static_cast<double>(d));
    for (std::ptrdiff_t mu = 0; mu < d; ++mu) {
        for (std::ptrdiff_t nu = 0; nu < d; ++nu) ops.push_back(basis_op(d, mu, nu, amp));
    }
    return ops;
}

ComplexMatrix fourier(std::ptrdiff_t d) {
    ComplexMatrix f(d, d);
    const double norm = 1.0 / std::sqrt(static_cast<double>(d));
    for (std::ptrdiff_t j = 0; j < d; ++j) {
        for (std::ptrdiff_t k = 0; k < d; ++k) {
            f(j, k) = std::polar(norm, 2.0 * std::numbers::pi * static_cast<double>(j * k) / static_cast<double>(d));
        }
    }
    return f;
}

ComplexMatrix cyclic_shift(std::ptrdiff_t d) {
    ComplexMatrix s = ComplexMatrix::Zero(d, d);
    for (std::ptrdiff_t j = 0; j < d; ++j) s((j + 1) % d, j) = 1.0;
    return s;
}

} // namespace

std::string_view to_string(ChannelFamily family) noexcept {
    switch (family) {
    case ChannelFamily::Cptp: return "cptp";
    case ChannelFamily::UnitaryMixture: return "unitary-mixture";
    case ChannelFamily::Unistochastic: return "unistochastic";
    case ChannelFamily::Named: return "named";
    }
    return "cptp";
}

ChannelFamily parse_family(std::string_view text) {
    if (text == "cptp") return ChannelFamily::Cptp;
    if (text == "unitary-mixture") return ChannelFamily::UnitaryMixture;
    if (text == "unistochastic") return ChannelFamily::Unistochastic;
    if (text == "named") return ChannelFamily::Named;
    throw Error(ErrorCode::UnknownName, "unknown channel family '" + std::string(text) + "'");
}

KrausChannel sample_cptp(const SamplerConfig& cfg) {
    require_dim(cfg.dim);
    if (cfg.kraus_count == 0) throw Error(ErrorCode::ParamOutOfRange, "kraus_count must be >= 1");
    for (int attempt = 0; attempt < max_normalizer_attempts; ++attempt) {
        const std::uint64_t attempt_seed =
            attempt == 0 ? cfg.seed : derive_seed(cfg.seed, ~static_cast<std::uint64_t>(attempt));
        std::vector<ComplexMatrix> gs;
        gs.reserve(cfg.kraus_count);
        ComplexMatrix normalizer = ComplexMatrix::Zero(cfg.dim, cfg.dim);
        for (std::size_t i = 0; i < cfg.kraus_count; ++i) {
            Rng rng(derive_seed(attempt_seed, i));
            gs.push_back(ginibre(cfg.dim, rng));
            normalizer.noalias() += gs.back().adjoint() * gs.back();
        }
        InverseSqrt root;
        try {
            root = inverse_sqrt_psd(normalizer);
        } catch (const Error&) {
            continue;
        }
        if (root.condition > max_normalizer_condition) continue;
        for (auto& g : gs) g = g * root.matrix;
        return KrausChannel(std::move(gs));
    }
    throw Error(ErrorCode::SingularNormalizer, "Ginibre normalizer singular after " +
                                                   std::to_string(max_normalizer_attempts) + " attempts");
}

KrausChannel sample_unitary_mixture(const SamplerConfig& cfg) {
    require_dim(cfg.dim);
    if (cfg.kraus_count == 0) throw Error(ErrorCode::ParamOutOfRange, "kraus_count must be >= 1");
    const std::size_t k = cfg.kraus_count;

    std::vector<double> weights(k);
    Rng weight_rng(derive_seed(cfg.seed, k));
    double total = 0.0;
    for (auto& w : weights) {
        w = weight_rng.exponential();
        total += w;
    }

    std::vector<ComplexMatrix> ops;
    ops.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        Rng rng(derive_seed(cfg.seed, i));
        ops.push_back(std::sqrt(weights[i] / total) * haar_unitary(cfg.dim, rng));
    }
    return KrausChannel(std::move(ops));
}

KrausChannel unistochastic_from_unitary(const ComplexMatrix& coupling, std::ptrdiff_t d) {
    require_dim(d);
    if (coupling.rows() != d * d || coupling.cols() != d * d) {
        throw Error(ErrorCode::DimensionMismatch, "coupling unitary must be d^2 x d^2");
    }
    const double amp = 1.0 / std::sqrt(static_cast<double>(d));
    std::vector<ComplexMatrix> ops;
    ops.reserve(static_cast<std::size_t>(d * d));
    for (std::ptrdiff_t e = 0; e < d; ++e) {
        for (std::ptrdiff_t f = 0; f < d; ++f) {
            ComplexMatrix a(d, d);
            for (std::ptrdiff_t i = 0; i < d; ++i) {
                for (std::ptrdiff_t j = 0; j < d; ++j) a(i, j) = amp * coupling(i * d + e, j * d + f);
            }
            ops.push_back(std::move(a));
        }
    }
    return KrausChannel(std::move(ops));
}

KrausChannel sample_unistochastic(const SamplerConfig& cfg) {
    require_dim(cfg.dim);
    Rng rng(derive_seed(cfg.seed, 0));
    return unistochastic_from_unitary(haar_unitary(cfg.dim * cfg.dim, rng), cfg.dim);
}

KrausChannel named_channel(std::string_view name, std::ptrdiff_t d, double param) {
    require_dim(d);
    const ComplexMatrix id = ComplexMatrix::Identity(d, d);

    if (name == "identity") return KrausChannel({id});
    if (name == "completely-depolarizing") return KrausChannel(completely_depolarizing_ops(d, 1.0));
    if (name == "depolarizing") {
        require_unit_interval(name, param);
        auto ops = completely_depolarizing_ops(d, param);
        ops.insert(ops.begin(), std::sqrt(1.0 - param) * id);
        return KrausChannel(std::move(ops));
    }
    if (name == "dephasing") {
        require_unit_interval(name, param);
        std::vector<ComplexMatrix> ops{std::sqrt(1.0 - param) * id};
        for (std::ptrdiff_t mu = 0; mu < d; ++mu) ops.push_back(basis_op(d, mu, mu, std::sqrt(param)));
        return KrausChannel(std::move(ops));
    }
    if (name == "amplitude-damping") {
        require_unit_interval(name, param);
        ComplexMatrix keep = std::sqrt(1.0 - param) * id;
        keep(0, 0) = 1.0;
        std::vector<ComplexMatrix> ops{keep};
        for (std::ptrdiff_t j = 1; j < d; ++j) ops.push_back(basis_op(d, 0, j, std::sqrt(param)));
        return KrausChannel(std::move(ops));
    }
    if (name == "unitary:fourier") return KrausChannel({fourier(d)});
    if (name == "unitary:shift") return KrausChannel({cyclic_shift(d)});
    if (name == "unitary:phase") {
        if (!std::isfinite(param)) throw Error(ErrorCode::ParamOutOfRange, "phase must be finite");
        ComplexMatrix u = ComplexMatrix::Zero(d, d);
        for (std::ptrdiff_t j = 0; j < d; ++j) u(j, j) = std::polar(1.0, param * static_cast<double>(j));
        return KrausChannel({u});
    }
    throw Error(ErrorCode::UnknownName, "unknown named channel '" + std::string(name) + "'");
}

KrausChannel sample(const SamplerConfig& cfg) {
    switch (cfg.family) {
    case ChannelFamily::Cptp: return sample_cptp(cfg);
    case ChannelFamily::UnitaryMixture: return sample_unitary_mixture(cfg);
    case ChannelFamily::Unistochastic: return sample_unistochastic(cfg);
    case ChannelFamily::Named: return named_channel(cfg.name, cfg.dim, cfg.param);
    }
    throw Error(ErrorCode::UnknownName, "unknown channel family");
}

} // namespace qsent

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "qsent/channel.hpp"
#include "qsent/random.hpp"

namespace qsent {

enum class ChannelFamily { Cptp, UnitaryMixture, Unistochastic, Named };

std::string_view to_string(ChannelFamily family) noexcept;
/// Accepts "cptp", "unitary-mixture", "unistochastic", "named". Throws UnknownName.
ChannelFamily parse_family(std::string_view text);

/// Identical configs yield bit-identical channels.
struct SamplerConfig {
    std::ptrdiff_t dim = 2;
    std::size_t kraus_count = 1; ///< ignored by Unistochastic, which always has d² operators
    std::uint64_t seed = 0;
    ChannelFamily family = ChannelFamily::Cptp;
    std::string name;   ///< Named only
    double param = 0.0; ///< Named only
};

/// Condition number of Σ G_i†G_i above which a Ginibre draw is rejected.
inline constexpr double max_normalizer_condition = 1e12;
inline constexpr int max_normalizer_attempts = 8;

/// A_i = G_i S^{-1/2} with S = Σ G_i†G_i and G_i Ginibre. G_i is drawn from
/// substream i of the attempt seed; attempt 0 uses cfg.seed itself.
KrausChannel sample_cptp(const SamplerConfig& cfg);

/// Kraus operators √p_i U_i with Haar U_i (substream i) and Dirichlet(1,…,1)
/// weights p_i (substream k).
KrausChannel sample_unitary_mixture(const SamplerConfig& cfg);

/// Φ(ρ) = Tr_E[U (ρ ⊗ 1/d) U†] for a Haar U on C^d ⊗ C^d (substream 0).
KrausChannel sample_unistochastic(const SamplerConfig& cfg);

/// The d² Kraus operators A_{e,f}[i,j] = U[i·d+e, j·d+f] / √d of the coupling
/// channel for a given d²×d² unitary U (system index first).
KrausChannel unistochastic_from_unitary(const ComplexMatrix& coupling, std::ptrdiff_t d);

/// Standard named channels:
///   identity, completely-depolarizing,
///   depolarizing (p ∈ [0,1]: (1−p)X + p Tr(X) 1/d),
///   dephasing (p ∈ [0,1]: (1−p)X + p diag(X)),
///   amplitude-damping (γ ∈ [0,1]: every |j⟩, j ≥ 1, decays to |0⟩),
///   unitary:fourier, unitary:shift, unitary:phase (θ: diag(e^{iθj})).
/// Throws UnknownName, ParamOutOfRange.
KrausChannel named_channel(std::string_view name, std::ptrdiff_t d, double param = 0.0);

/// Dispatches on cfg.family.
KrausChannel sample(const SamplerConfig& cfg);

} // namespace qsent

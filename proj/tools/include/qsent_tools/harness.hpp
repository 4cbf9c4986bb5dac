#pragma once

// Sweep and inequality-suite drivers behind the `qsent` command line.
//
// Outputs (under SweepConfig::out_dir):
//   report.csv          one row per (channel, q, s) cell
//   summary.json        min_gap, violations, saturation_count, per-family stats
//   inequalities.json   per-check evaluation counts and minimum slack
//   counterexamples/    channels or matrices that failed, as JSON
//
// Exit codes: 0 success, 1 a bound or inequality failed, 2 bad configuration.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsent/sampler.hpp"

namespace qsent::tools {

inline constexpr int exit_ok = 0;
inline constexpr int exit_violation = 1;
inline constexpr int exit_config = 2;

/// Names accepted by --only.
inline const std::vector<std::string> check_names{"prop1", "21in", "upkp", "sups", "npqr", "cbn0"};

struct SweepConfig {
    std::vector<std::ptrdiff_t> dims{2, 3};
    std::vector<ChannelFamily> families{ChannelFamily::Cptp, ChannelFamily::UnitaryMixture,
                                        ChannelFamily::Unistochastic};
    std::size_t samples_per_family = 50;
    std::vector<double> q_grid{0.3, 0.5, 0.9, 1.0, 1.1, 1.5, 2.0, 3.0, 5.0};
    std::vector<double> s_grid{-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0};
    std::uint64_t seed = 20130521;
    /// Keys "gap" and "saturation" replace gap_tol and sat_tol.
    std::map<std::string, double> tolerances;

    std::optional<std::filesystem::path> channel; ///< single-channel mode
    std::optional<std::filesystem::path> matrix;  ///< inequality suite on one matrix
    std::optional<std::string> only;              ///< restrict the inequality suite
    std::filesystem::path out_dir = "qsent-out";
    unsigned threads = 0; ///< 0 = hardware concurrency
};

/// Raised for configuration problems; maps to exit code 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Throws ConfigError naming the offending field and value.
void validate(const SweepConfig& cfg);

/// Reads a JSON config; missing fields keep their defaults. Throws ConfigError.
SweepConfig load_config(const std::filesystem::path& path, SweepConfig base = {});

/// Seed of sample `index` of `family` at dimension d:
/// derive_seed(derive_seed(derive_seed(seed, family), d), index).
std::uint64_t sample_seed(std::uint64_t seed, ChannelFamily family, std::ptrdiff_t d, std::size_t index);

/// k = 1 + index mod d², so a population runs from rank-1 to full Kraus rank.
std::size_t sample_kraus_count(std::ptrdiff_t d, std::size_t index);

/// The `index`-th channel of a sampled population.
KrausChannel population_member(const SweepConfig& cfg, ChannelFamily family, std::ptrdiff_t d, std::size_t index);

std::string sample_id(ChannelFamily family, std::ptrdiff_t d, std::size_t index);

struct SweepOutcome {
    int exit_code = exit_ok;
    std::size_t rows = 0;
    std::size_t violations = 0;
    std::size_t saturation_count = 0;
    double min_gap = 0.0; ///< over rows whose bound is asserted (q ≠ 1)
};

SweepOutcome run_sweep(const SweepConfig& cfg);

struct CheckStats {
    std::size_t evaluations = 0;
    std::size_t failures = 0;
    double min_slack = 0.0;
    std::map<std::ptrdiff_t, double> min_lhs_by_dim;
};

struct InequalityOutcome {
    int exit_code = exit_ok;
    std::map<std::string, CheckStats> checks;
};

InequalityOutcome run_inequality_suite(const SweepConfig& cfg);

/// Entry point shared by the executable and the tests.
int run_cli(int argc, const char* const* argv);

} // namespace qsent::tools

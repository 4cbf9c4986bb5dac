#include <cmath>
#include <fstream>
#include <limits>

#include <fmt/format.h>
#include <json.hpp>

#include "parallel.hpp"
#include "qsent/io.hpp"
#include "qsent/tradeoff.hpp"
#include "qsent_tools/harness.hpp"

namespace qsent::tools {

namespace {

using nlohmann::json;

struct Task {
    std::string id;
    std::string family;
    KrausChannel channel;
};

struct TaskResult {
    std::vector<TradeoffReport> rows;
    bool unital = false;
};

double tolerance(const SweepConfig& cfg, const char* key, double fallback) {
    const auto it = cfg.tolerances.find(key);
    return it == cfg.tolerances.end() ? fallback : it->second;
}

std::string format_row(const Task& task, std::ptrdiff_t dim, const TradeoffReport& r) {
    return fmt::format("{},{},{},{},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{},{:.17g},{},{}\n", r.channel_id,
                       task.family, dim, r.bound_unital ? "true" : "false", r.params.q, r.params.s, r.map_value,
                       r.receiver_value, r.sum(), r.bound_all,
                       r.bound_unital ? fmt::format("{:.17g}", *r.bound_unital) : std::string{}, r.gap,
                       r.saturated ? "true" : "false", to_string(r.formula));
}

json report_json(const TradeoffReport& r) {
    json out{{"channel_id", r.channel_id},
             {"q", r.params.q},
             {"s", r.params.s},
             {"formula", std::string(to_string(r.formula))},
             {"map_entropy", r.map_value},
             {"receiver_entropy", r.receiver_value},
             {"sum", r.sum()},
             {"bound_all", r.bound_all},
             {"gap", r.gap}};
    if (r.bound_unital) out["bound_unital"] = *r.bound_unital;
    return out;
}

std::vector<Task> build_tasks(const SweepConfig& cfg) {
    std::vector<Task> tasks;
    if (cfg.channel) {
        tasks.push_back({cfg.channel->stem().string(), "file", load_channel(*cfg.channel)});
        return tasks;
    }
    for (auto d : cfg.dims) {
        for (auto family : cfg.families) {
            for (std::size_t i = 0; i < cfg.samples_per_family; ++i) {
                tasks.push_back({sample_id(family, d, i), std::string(to_string(family)),
                                 population_member(cfg, family, d, i)});
            }
        }
    }
    return tasks;
}

} // namespace

std::uint64_t sample_seed(std::uint64_t seed, ChannelFamily family, std::ptrdiff_t d, std::size_t index) {
    const auto family_code = static_cast<std::uint64_t>(family);
    return derive_seed(derive_seed(derive_seed(seed, family_code), static_cast<std::uint64_t>(d)), index);
}

std::size_t sample_kraus_count(std::ptrdiff_t d, std::size_t index) {
    return 1 + index % static_cast<std::size_t>(d * d);
}

KrausChannel population_member(const SweepConfig& cfg, ChannelFamily family, std::ptrdiff_t d, std::size_t index) {
    SamplerConfig sc;
    sc.dim = d;
    sc.family = family;
    sc.kraus_count = sample_kraus_count(d, index);
    sc.seed = sample_seed(cfg.seed, family, d, index);
    return sample(sc);
}

std::string sample_id(ChannelFamily family, std::ptrdiff_t d, std::size_t index) {
    return fmt::format("{}-d{}-{:04}", to_string(family), d, index);
}

SweepOutcome run_sweep(const SweepConfig& cfg) {
    validate(cfg);
    const double gap_limit = tolerance(cfg, "gap", gap_tol);
    const double sat_limit = tolerance(cfg, "saturation", sat_tol);

    const std::vector<Task> tasks = build_tasks(cfg);
    std::vector<TaskResult> results(tasks.size());
    detail::parallel_for(tasks.size(), cfg.threads, [&](std::size_t t) {
        const ChannelProfile prof = profile(tasks[t].channel);
        auto& out = results[t];
        out.unital = prof.unital;
        out.rows.reserve(cfg.q_grid.size() * cfg.s_grid.size());
        for (double q : cfg.q_grid) {
            for (double s : cfg.s_grid) {
                TradeoffReport r = tradeoff_report(prof, EntropyParams{q, s}, tasks[t].id);
                r.saturated = std::abs(r.gap) <= sat_limit;
                out.rows.push_back(std::move(r));
            }
        }
    });

    std::filesystem::create_directories(cfg.out_dir);
    std::ofstream csv(cfg.out_dir / "report.csv", std::ios::binary);
    csv << "channel_id,family,dim,unital,q,s,map_entropy,receiver_entropy,sum,bound_all,bound_unital,gap,saturated,"
           "formula\n";

    struct FamilyStats {
        std::size_t samples = 0;
        std::size_t unital = 0;
        std::size_t rows = 0;
        std::size_t violations = 0;
        std::size_t saturated = 0;
        double min_gap = std::numeric_limits<double>::infinity();
    };
    std::map<std::string, FamilyStats> per_family;

    SweepOutcome outcome;
    outcome.min_gap = std::numeric_limits<double>::infinity();
    double min_gap_extrapolated = std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < tasks.size(); ++t) {
        const Task& task = tasks[t];
        auto& stats = per_family[task.family];
        ++stats.samples;
        stats.unital += results[t].unital ? 1 : 0;
        json violating = json::array();
        for (const auto& r : results[t].rows) {
            csv << format_row(task, task.channel.dim(), r);
            ++outcome.rows;
            ++stats.rows;
            if (r.saturated) {
                ++outcome.saturation_count;
                ++stats.saturated;
            }
            if (r.limit_extrapolated) {
                min_gap_extrapolated = std::min(min_gap_extrapolated, r.gap);
                continue;
            }
            outcome.min_gap = std::min(outcome.min_gap, r.gap);
            stats.min_gap = std::min(stats.min_gap, r.gap);
            if (r.gap < -gap_limit) {
                ++outcome.violations;
                ++stats.violations;
                violating.push_back(report_json(r));
            }
        }
        if (!violating.empty()) {
            const auto dir = cfg.out_dir / "counterexamples";
            std::filesystem::create_directories(dir);
            std::ofstream cx(dir / (task.id + ".json"));
            cx << json{{"channel", json::parse(channel_to_json(task.channel))}, {"reports", violating}}.dump(2)
               << '\n';
        }
    }

    auto finite_or_null = [](double v) { return std::isfinite(v) ? json(v) : json(nullptr); };
    json families = json::object();
    for (const auto& [name, s] : per_family) {
        families[name] = {{"samples", s.samples},       {"unital_samples", s.unital}, {"rows", s.rows},
                          {"violations", s.violations}, {"saturation_count", s.saturated},
                          {"min_gap", finite_or_null(s.min_gap)}};
    }
    const json summary{{"min_gap", finite_or_null(outcome.min_gap)},
                       {"min_gap_limit_extrapolated", finite_or_null(min_gap_extrapolated)},
                       {"violations", outcome.violations},
                       {"saturation_count", outcome.saturation_count},
                       {"rows", outcome.rows},
                       {"gap_tolerance", gap_limit},
                       {"saturation_tolerance", sat_limit},
                       {"seed", cfg.seed},
                       {"per_family", families}};
    std::ofstream(cfg.out_dir / "summary.json") << summary.dump(2) << '\n';

    outcome.exit_code = outcome.violations == 0 ? exit_ok : exit_violation;
    return outcome;
}

} // namespace qsent::tools

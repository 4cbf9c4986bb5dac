#include <fstream>
#include <functional>
#include <limits>

#include <fmt/format.h>
#include <json.hpp>

#include "parallel.hpp"
#include "qsent/error.hpp"
#include "qsent/io.hpp"
#include "qsent/spectra.hpp"
#include "qsent_tools/harness.hpp"

namespace qsent::tools {

namespace {

using nlohmann::json;

const std::vector<double> prop1_orders{0.3, 0.7, 1.2, 1.8, 2.0, 2.5, 4.0};
const std::vector<std::pair<double, double>> monotonicity_pairs{{0.2, 0.8}, {0.5, 1.0}, {1.0, 2.0}, {2.0, 4.0}};
const std::vector<double> superadditivity_orders{0.3, 0.7, -0.5};

/// One evaluated check, or the error it raised.
struct Evaluation {
    std::string check;
    std::ptrdiff_t dim = 0;
    std::optional<InequalityReport> report;
    std::string error;
};

struct Subject {
    std::string id;
    std::optional<KrausChannel> channel;
    std::optional<ComplexMatrix> matrix;
};

class Collector {
public:
    explicit Collector(const std::optional<std::string>& only) : only_(only) {}

    bool wants(const std::string& check) const { return !only_ || *only_ == check; }

    void run(const std::string& check, std::ptrdiff_t dim, const std::function<InequalityReport()>& fn) {
        if (!wants(check)) return;
        Evaluation e{check, dim, std::nullopt, {}};
        try {
            e.report = fn();
        } catch (const Error& err) {
            e.error = err.what();
        }
        evaluations_.push_back(std::move(e));
    }

    std::vector<Evaluation> take() { return std::move(evaluations_); }

private:
    std::optional<std::string> only_;
    std::vector<Evaluation> evaluations_;
};

bool strictly_positive(const ComplexMatrix& x) {
    try {
        return hermitian_eigenvalues(x).min() > strict_pos_tol;
    } catch (const Error&) {
        return false;
    }
}

void channel_checks(Collector& c, const KrausChannel& ch, const KrausChannel& partner) {
    const auto d = ch.dim();
    const ComplexMatrix dyn = dynamical_from_kraus(ch).matrix;
    const ComplexMatrix sup = superoperator_from_kraus(ch).matrix;

    for (double q : prop1_orders) {
        c.run("prop1", d, [&] { return check_prop1(dyn, q); });
        if (q >= 1.0) c.run("prop1", d, [&] { return check_prop1(sup, q); });
    }
    c.run("21in", d, [&] { return check_two_inf_one(dyn); });
    c.run("21in", d, [&] { return check_two_inf_one(sup); });
    c.run("upkp", d, [&] { return check_superop_norm_bound(ch); });
    c.run("cbn0", d, [&] { return check_norm_ratio_product(ch); });
    for (const auto& [p, q] : monotonicity_pairs) {
        c.run("npqr", d, [&] { return check_antinorm_monotonicity(dyn, p, q); });
    }
    if (c.wants("sups")) {
        const ComplexMatrix other = dynamical_from_kraus(partner).matrix;
        const bool both_positive = strictly_positive(dyn) && strictly_positive(other);
        for (double q : superadditivity_orders) {
            if (q < 0.0 && !both_positive) continue;
            c.run("sups", d, [&] { return check_superadditivity(dyn, other, q); });
        }
    }
}

void matrix_checks(Collector& c, const ComplexMatrix& x) {
    const auto n = x.rows();
    for (double q : prop1_orders) c.run("prop1", n, [&] { return check_prop1(x, q); });
    c.run("21in", n, [&] { return check_two_inf_one(x); });
    for (const auto& [p, q] : monotonicity_pairs) {
        c.run("npqr", n, [&] { return check_antinorm_monotonicity(x, p, q); });
    }
    const bool positive = strictly_positive(x);
    for (double q : superadditivity_orders) {
        if (q < 0.0 && !positive) continue;
        c.run("sups", n, [&] { return check_superadditivity(x, x, q); });
    }
}

json report_json(const Evaluation& e) {
    json out{{"check", e.check}, {"dim", e.dim}};
    if (e.report) {
        out["lhs"] = e.report->lhs;
        out["rhs"] = e.report->rhs;
        out["slack"] = e.report->slack;
        out["direction"] = e.report->direction == Direction::LessEqual ? "<=" : ">=";
    } else {
        out["error"] = e.error;
    }
    return out;
}

} // namespace

InequalityOutcome run_inequality_suite(const SweepConfig& cfg) {
    validate(cfg);

    std::vector<Subject> subjects;
    if (cfg.matrix) {
        subjects.push_back({cfg.matrix->stem().string(), std::nullopt, load_matrix(*cfg.matrix)});
    } else if (cfg.channel) {
        subjects.push_back({cfg.channel->stem().string(), load_channel(*cfg.channel), std::nullopt});
    } else {
        for (auto d : cfg.dims) {
            for (auto family : cfg.families) {
                for (std::size_t i = 0; i < cfg.samples_per_family; ++i) {
                    subjects.push_back({sample_id(family, d, i), population_member(cfg, family, d, i), std::nullopt});
                }
            }
        }
    }

    std::vector<std::vector<Evaluation>> results(subjects.size());
    detail::parallel_for(subjects.size(), cfg.threads, [&](std::size_t i) {
        Collector c(cfg.only);
        if (subjects[i].matrix) {
            matrix_checks(c, *subjects[i].matrix);
        } else {
            // Superadditivity pairs each channel with its successor in the population.
            const auto& partner = subjects[(i + 1) % subjects.size()];
            const bool same_dim = partner.channel && partner.channel->dim() == subjects[i].channel->dim();
            channel_checks(c, *subjects[i].channel, same_dim ? *partner.channel : *subjects[i].channel);
        }
        results[i] = c.take();
    });

    InequalityOutcome outcome;
    for (const auto& name : check_names) {
        if (!cfg.only || *cfg.only == name) {
            outcome.checks[name].min_slack = std::numeric_limits<double>::infinity();
        }
    }
    for (std::size_t i = 0; i < subjects.size(); ++i) {
        json failing = json::array();
        for (const auto& e : results[i]) {
            auto& stats = outcome.checks[e.check];
            ++stats.evaluations;
            const bool passed = e.report && e.report->passed;
            if (e.report) {
                stats.min_slack = std::min(stats.min_slack, e.report->slack);
                auto [it, inserted] = stats.min_lhs_by_dim.try_emplace(e.dim, e.report->lhs);
                if (!inserted) it->second = std::min(it->second, e.report->lhs);
            }
            if (!passed) {
                ++stats.failures;
                failing.push_back(report_json(e));
            }
        }
        if (!failing.empty()) {
            outcome.exit_code = exit_violation;
            const auto dir = cfg.out_dir / "counterexamples";
            std::filesystem::create_directories(dir);
            json doc{{"subject", subjects[i].id}, {"failures", failing}};
            if (subjects[i].channel) doc["channel"] = json::parse(channel_to_json(*subjects[i].channel));
            if (subjects[i].matrix) doc["matrix"] = json::parse(matrix_to_json(*subjects[i].matrix));
            std::ofstream(dir / ("inequality-" + subjects[i].id + ".json")) << doc.dump(2) << '\n';
        }
    }

    json checks = json::object();
    for (const auto& [name, s] : outcome.checks) {
        json by_dim = json::object();
        for (const auto& [d, v] : s.min_lhs_by_dim) by_dim[std::to_string(d)] = v;
        checks[name] = {{"evaluations", s.evaluations},
                        {"failures", s.failures},
                        {"min_slack", std::isfinite(s.min_slack) ? json(s.min_slack) : json(nullptr)},
                        {"min_lhs_by_dim", by_dim}};
    }
    std::filesystem::create_directories(cfg.out_dir);
    std::ofstream(cfg.out_dir / "inequalities.json") << json{{"checks", checks}, {"seed", cfg.seed}}.dump(2) << '\n';
    return outcome;
}

} // namespace qsent::tools

#include <iostream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "qsent/error.hpp"
#include "qsent_tools/harness.hpp"

namespace qsent::tools {

namespace {

struct Overrides {
    std::string config;
    std::string channel;
    std::string matrix;
    std::string out;
    std::string only;
    std::vector<double> q;
    std::vector<double> s;
    std::vector<std::ptrdiff_t> dims;
    std::vector<std::string> families;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    unsigned threads = 0;
};

void add_common(CLI::App& cmd, Overrides& o) {
    cmd.add_option("--config", o.config, "JSON config file; flags override its fields");
    cmd.add_option("--channel", o.channel, "Channel JSON file (single-channel mode)");
    cmd.add_option("--q", o.q, "Comma-separated q grid")->delimiter(',');
    cmd.add_option("--s", o.s, "Comma-separated s grid")->delimiter(',');
    cmd.add_option("--dims", o.dims, "Comma-separated dimensions")->delimiter(',');
    cmd.add_option("--family", o.families, "Comma-separated families: cptp, unitary-mixture, unistochastic")
        ->delimiter(',');
    cmd.add_option("--samples", o.samples, "Samples per family and dimension");
    cmd.add_option("--seed", o.seed, "Base seed");
    cmd.add_option("--out", o.out, "Output directory");
    cmd.add_option("--threads", o.threads, "Worker threads (0 = all cores)");
}

SweepConfig resolve(const CLI::App& cmd, const Overrides& o) {
    SweepConfig cfg;
    if (!o.config.empty()) cfg = load_config(o.config);
    if (cmd.count("--channel")) cfg.channel = o.channel;
    if (cmd.count("--q")) cfg.q_grid = o.q;
    if (cmd.count("--s")) cfg.s_grid = o.s;
    if (cmd.count("--dims")) cfg.dims = o.dims;
    if (cmd.count("--family")) {
        cfg.families.clear();
        for (const auto& name : o.families) {
            try {
                cfg.families.push_back(parse_family(name));
            } catch (const Error& e) {
                throw ConfigError(e.what());
            }
        }
    }
    if (cmd.count("--samples")) cfg.samples_per_family = o.samples;
    if (cmd.count("--seed")) cfg.seed = o.seed;
    if (cmd.count("--out")) cfg.out_dir = o.out;
    if (cmd.count("--threads")) cfg.threads = o.threads;
    if (cmd.get_option_no_throw("--only") && cmd.count("--only")) cfg.only = o.only;
    if (cmd.get_option_no_throw("--matrix") && cmd.count("--matrix")) cfg.matrix = o.matrix;
    return cfg;
}

int print_sweep(const SweepOutcome& r, const SweepConfig& cfg) {
    fmt::print("rows={} violations={} saturated={} min_gap={:.6e}\n", r.rows, r.violations, r.saturation_count,
               r.min_gap);
    fmt::print("wrote {}\n", (cfg.out_dir / "report.csv").string());
    return r.exit_code;
}

int print_inequalities(const InequalityOutcome& r) {
    for (const auto& [name, s] : r.checks) {
        fmt::print("{:<6} evaluations={:<6} failures={:<4} min_slack={:.6e} {}\n", name, s.evaluations, s.failures,
                   s.min_slack, s.failures == 0 ? "PASS" : "FAIL");
        for (const auto& [d, v] : s.min_lhs_by_dim) fmt::print("         d={} min_lhs={:.12g}\n", d, v);
    }
    return r.exit_code;
}

} // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"Map and receiver (q,s)-entropies of quantum channels: trade-off sweeps and norm inequality checks"};
    app.require_subcommand(1);

    Overrides sweep_opts;
    auto* sweep = app.add_subcommand("sweep", "Evaluate M + R against the trade-off bounds over a (q,s) grid");
    add_common(*sweep, sweep_opts);

    Overrides ineq_opts;
    auto* ineq = app.add_subcommand("inequalities", "Run the Schatten norm / anti-norm inequality suite");
    add_common(*ineq, ineq_opts);
    ineq->add_option("--only", ineq_opts.only, "Run a single check: prop1, 21in, upkp, sups, npqr, cbn0");
    ineq->add_option("--matrix", ineq_opts.matrix, "Matrix JSON file checked instead of sampled channels");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_config;
    }

    try {
        if (sweep->parsed()) {
            const SweepConfig cfg = resolve(*sweep, sweep_opts);
            return print_sweep(run_sweep(cfg), cfg);
        }
        const SweepConfig cfg = resolve(*ineq, ineq_opts);
        return print_inequalities(run_inequality_suite(cfg));
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return exit_config;
    } catch (const Error& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return exit_config;
    }
}

} // namespace qsent::tools

#include <cmath>
#include <fstream>
#include <set>

#include <fmt/format.h>
#include <json.hpp>

#include "qsent/error.hpp"
#include "qsent_tools/harness.hpp"

namespace qsent::tools {

namespace {

using nlohmann::json;

template <typename T>
T field(const json& obj, const char* key) {
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ConfigError(fmt::format("config field '{}': {}", key, e.what()));
    }
}

} // namespace

void validate(const SweepConfig& cfg) {
    if (cfg.q_grid.empty()) throw ConfigError("q_grid is empty");
    if (cfg.s_grid.empty()) throw ConfigError("s_grid is empty");
    for (double q : cfg.q_grid) {
        if (!(q > 0.0) || !std::isfinite(q)) throw ConfigError(fmt::format("q_grid value {} must be finite and > 0", q));
    }
    for (double s : cfg.s_grid) {
        if (!std::isfinite(s)) throw ConfigError(fmt::format("s_grid value {} must be finite", s));
    }
    if (!cfg.channel) {
        if (cfg.dims.empty()) throw ConfigError("dims is empty");
        if (cfg.families.empty()) throw ConfigError("families is empty");
        if (cfg.samples_per_family == 0) throw ConfigError("samples_per_family must be >= 1");
        for (auto d : cfg.dims) {
            if (d < 2 || d > 16) throw ConfigError(fmt::format("dimension {} outside [2, 16]", d));
        }
        for (auto f : cfg.families) {
            if (f == ChannelFamily::Named) throw ConfigError("family 'named' cannot be sampled; use --channel");
        }
    }
    for (const auto& [key, value] : cfg.tolerances) {
        if (key != "gap" && key != "saturation") throw ConfigError(fmt::format("unknown tolerance '{}'", key));
        if (!(value >= 0.0) || !std::isfinite(value)) {
            throw ConfigError(fmt::format("tolerance '{}' = {} must be finite and >= 0", key, value));
        }
    }
    if (cfg.only) {
        bool known = false;
        for (const auto& name : check_names) known = known || name == *cfg.only;
        if (!known) throw ConfigError(fmt::format("unknown check '{}'", *cfg.only));
    }
}

SweepConfig load_config(const std::filesystem::path& path, SweepConfig base) {
    std::ifstream in(path);
    if (!in) throw ConfigError(fmt::format("cannot open config {}", path.string()));
    json obj;
    try {
        obj = json::parse(in);
    } catch (const json::exception& e) {
        throw ConfigError(fmt::format("config {}: {}", path.string(), e.what()));
    }
    if (!obj.is_object()) throw ConfigError("config must be a JSON object");

    static const std::set<std::string> known{"dims",  "families", "samples_per_family", "q_grid", "s_grid",
                                             "seed",  "tolerances", "channel", "matrix", "only",
                                             "out",   "threads"};
    for (const auto& item : obj.items()) {
        if (!known.contains(item.key())) throw ConfigError(fmt::format("unknown config field '{}'", item.key()));
    }

    if (obj.contains("dims")) base.dims = field<std::vector<std::ptrdiff_t>>(obj, "dims");
    if (obj.contains("families")) {
        base.families.clear();
        for (const auto& name : field<std::vector<std::string>>(obj, "families")) {
            try {
                base.families.push_back(parse_family(name));
            } catch (const Error& e) {
                throw ConfigError(e.what());
            }
        }
    }
    if (obj.contains("samples_per_family")) base.samples_per_family = field<std::size_t>(obj, "samples_per_family");
    if (obj.contains("q_grid")) base.q_grid = field<std::vector<double>>(obj, "q_grid");
    if (obj.contains("s_grid")) base.s_grid = field<std::vector<double>>(obj, "s_grid");
    if (obj.contains("seed")) base.seed = field<std::uint64_t>(obj, "seed");
    if (obj.contains("tolerances")) base.tolerances = field<std::map<std::string, double>>(obj, "tolerances");
    if (obj.contains("channel")) base.channel = field<std::string>(obj, "channel");
    if (obj.contains("matrix")) base.matrix = field<std::string>(obj, "matrix");
    if (obj.contains("only")) base.only = field<std::string>(obj, "only");
    if (obj.contains("out")) base.out_dir = field<std::string>(obj, "out");
    if (obj.contains("threads")) base.threads = field<unsigned>(obj, "threads");
    return base;
}

} // namespace qsent::tools

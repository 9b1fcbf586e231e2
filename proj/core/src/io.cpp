#include "hcflow/io.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

namespace hcflow {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

struct KeyValue {
    std::string value;
    int line = 0;
    bool used = false;
};

using KvMap = std::map<std::string, KeyValue>;

double parse_number(KvMap& kv, const std::string& key, double fallback,
                    bool required = false) {
    const auto it = kv.find(key);
    if (it == kv.end()) {
        if (required) throw ConfigError("missing required key '" + key + "'", 0, key);
        return fallback;
    }
    it->second.used = true;
    try {
        std::size_t pos = 0;
        const double v = std::stod(it->second.value, &pos);
        if (pos != it->second.value.size())
            throw ConfigError("trailing characters in numeric value for '" + key + "'",
                              it->second.line, key);
        return v;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        throw ConfigError("cannot parse number for '" + key + "'", it->second.line, key);
    }
}

std::string parse_word(KvMap& kv, const std::string& key, const std::string& fallback,
                       bool required = false) {
    const auto it = kv.find(key);
    if (it == kv.end()) {
        if (required) throw ConfigError("missing required key '" + key + "'", 0, key);
        return fallback;
    }
    it->second.used = true;
    return it->second.value;
}

}  // namespace

RunSpec parse_config_text(const std::string& text) {
    KvMap kv;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("expected key = value", lineno, trim(line));
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError("empty key or value", lineno, key);
        if (kv.count(key)) throw ConfigError("duplicate key '" + key + "'", lineno, key);
        kv[key] = KeyValue{value, lineno, false};
    }

    const std::string mode_word = parse_word(kv, "mode", "interval");
    DomainMode mode;
    if (mode_word == "interval")
        mode = DomainMode::interval;
    else if (mode_word == "rotational_disk")
        mode = DomainMode::rotational_disk;
    else
        throw ConfigError("mode must be 'interval' or 'rotational_disk'",
                          kv.count("mode") ? kv.at("mode").line : 0, "mode");

    const int n = static_cast<int>(parse_number(kv, "n", mode == DomainMode::interval ? 1 : 2));
    const int k = static_cast<int>(parse_number(kv, "k", 1));
    const int l = static_cast<int>(parse_number(kv, "l", 0));
    const double r = parse_number(kv, "r", 1.0);
    const int nodes = static_cast<int>(parse_number(kv, "nodes", 201));
    const double sigma = parse_number(kv, "sigma", 0.0, true);
    const double epsilon = parse_number(kv, "epsilon", 0.01 * r);

    try {
        CurvatureSpec spec(n, k, l);
        DomainSpec domain(mode, n, r);
        Grid grid(domain, nodes);
        FlowConfig config(spec, grid, sigma, epsilon);
        config.dt_max = parse_number(kv, "dt_max", config.dt_max);
        config.safety = parse_number(kv, "safety", config.safety);
        config.t_end = parse_number(kv, "t_end", config.t_end);
        config.stat_tol = parse_number(kv, "stat_tol", config.stat_tol);
        const std::string a_word = parse_word(kv, "monitor_a", "auto");
        if (a_word != "auto") config.monitor_a = parse_number(kv, "monitor_a", -1.0);
        config.validate();

        RunSpec spec_out{config, InitialSpec{}, 0};
        const std::string kind = parse_word(kv, "initial", "stationary_cap");
        if (kind == "stationary_cap")
            spec_out.initial.kind = InitialKind::stationary_cap;
        else if (kind == "subcritical_cap")
            spec_out.initial.kind = InitialKind::subcritical_cap;
        else if (kind == "perturbed_cap")
            spec_out.initial.kind = InitialKind::perturbed_cap;
        else if (kind == "horosphere")
            spec_out.initial.kind = InitialKind::horosphere;
        else
            throw ConfigError("unknown initial kind '" + kind + "'",
                              kv.count("initial") ? kv.at("initial").line : 0, "initial");
        spec_out.initial.sigma_prime = parse_number(kv, "sigma_prime", 0.0);
        spec_out.initial.amplitude = parse_number(kv, "amplitude", 0.0);
        spec_out.snapshot_stride =
            static_cast<int>(parse_number(kv, "snapshot_stride", 0.0));

        for (const auto& [key, val] : kv)
            if (!val.used) throw ConfigError("unknown key '" + key + "'", val.line, key);
        return spec_out;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what(), 0, "config");  // cross-field validation failure
    }
}

RunSpec parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'", 0, "path");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

namespace {

void put(std::ostream& os, double v) {
    std::ostringstream tmp;
    tmp.precision(17);
    tmp << v;
    os << tmp.str();
}

const char* kind_name(InitialKind kind) {
    switch (kind) {
        case InitialKind::stationary_cap: return "stationary_cap";
        case InitialKind::subcritical_cap: return "subcritical_cap";
        case InitialKind::perturbed_cap: return "perturbed_cap";
        case InitialKind::horosphere: return "horosphere";
    }
    return "?";
}

}  // namespace

std::string manifest_text(const RunSpec& spec, const std::string& out_dir,
                          const std::string& timestamp) {
    std::ostringstream os;
    os.precision(17);
    const FlowConfig& c = spec.config;
    os << "version = " << kVersion << '\n';
    os << "timestamp = " << timestamp << '\n';
    os << "out_dir = " << out_dir << '\n';
    os << "mode = "
       << (c.grid.domain.mode == DomainMode::interval ? "interval" : "rotational_disk")
       << '\n';
    os << "n = " << c.spec.n << '\n';
    os << "k = " << c.spec.k << '\n';
    os << "l = " << c.spec.l << '\n';
    os << "r = " << c.grid.domain.r << '\n';
    os << "nodes = " << c.grid.node_count << '\n';
    os << "h = " << c.grid.h << '\n';
    os << "sigma = " << c.sigma << '\n';
    os << "epsilon = " << c.epsilon << '\n';
    os << "dt_max = " << c.dt_max << '\n';
    os << "safety = " << c.safety << '\n';
    os << "t_end = " << c.t_end << '\n';
    os << "stat_tol = " << c.stat_tol << '\n';
    if (c.monitor_a >= 0.0)
        os << "monitor_a = " << c.monitor_a << '\n';
    else
        os << "monitor_a = auto\n";
    os << "initial = " << kind_name(spec.initial.kind) << '\n';
    os << "sigma_prime = " << spec.initial.sigma_prime << '\n';
    os << "amplitude = " << spec.initial.amplitude << '\n';
    os << "snapshot_stride = " << spec.snapshot_stride << '\n';
    os << "files = manifest.txt steps.csv summary.txt snapshots/\n";
    return os.str();
}

std::string csv_header() {
    return "t,dt,max_ut,max_F_minus_sigma,min_F_minus_sigma,max_w,max_u_d2u,ratio,"
           "cumulative_integral";
}

std::string csv_row(const StepRow& row) {
    std::ostringstream os;
    os.precision(17);
    os << row.t << ',' << row.dt << ',' << row.max_ut << ',' << row.max_F_minus_sigma << ','
       << row.min_F_minus_sigma << ',' << row.max_w << ',' << row.max_u_d2u << ','
       << row.ratio_value << ',' << row.cumulative_integral;
    return os.str();
}

void write_snapshot(std::ostream& os, const FlowConfig& config, const FlowState& state) {
    const Grid& grid = config.grid;
    os.precision(17);
    os << (grid.domain.mode == DomainMode::interval ? "interval" : "rotational_disk") << ' '
       << grid.domain.n << ' ';
    put(os, grid.domain.r);
    os << ' ' << grid.node_count << ' ';
    put(os, state.t);
    os << '\n';
    for (int j = 0; j < grid.node_count; ++j) {
        const SurfaceSample s = boundary_sample(grid, state.u, j);
        put(os, grid.coordinate(j));
        os << ' ';
        put(os, s.u);
        os << ' ';
        put(os, s.w);
        os << ' ';
        put(os, s.nu_up);
        for (double kap : s.hyper_kappa) {
            os << ' ';
            put(os, kap);
        }
        os << '\n';
    }
}

int flow_exit_code(bool admissible, bool converged, bool monitors_pass) {
    if (!admissible) return 3;
    if (!converged) return 4;
    if (!monitors_pass) return 5;
    return 0;
}

}  // namespace hcflow

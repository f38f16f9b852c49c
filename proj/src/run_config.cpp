#include "ks/run_config.hpp"

#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace ks {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1") return true;
    if (value == "false" || value == "0") return false;
    throw std::invalid_argument("config: bad boolean for '" + key + "': " + value);
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    try {
        size_t pos = 0;
        const std::uint64_t v = std::stoull(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("config: bad integer for '" + key + "': " + value);
    }
}

int parse_int(const std::string& key, const std::string& value) {
    try {
        size_t pos = 0;
        const int v = std::stoi(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("config: bad integer for '" + key + "': " + value);
    }
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        return parse_scalar(value);
    } catch (const std::exception&) {
        throw std::invalid_argument("config: bad number for '" + key + "': " + value);
    }
}

}  // namespace

double parse_scalar(const std::string& token) {
    const std::string t = trim(token);
    if (t.size() >= 2 && t.compare(t.size() - 2, 2, "pi") == 0) {
        const std::string prefix = trim(t.substr(0, t.size() - 2));
        if (prefix.empty()) return std::numbers::pi;
        if (prefix == "-") return -std::numbers::pi;
        size_t pos = 0;
        const double v = std::stod(prefix, &pos);
        if (pos != prefix.size()) throw std::invalid_argument("bad scalar: " + token);
        return v * std::numbers::pi;
    }
    size_t pos = 0;
    const double v = std::stod(t, &pos);
    if (pos != t.size()) throw std::invalid_argument("bad scalar: " + token);
    return v;
}

RunConfig::RunConfig() : length(32.0 * std::numbers::pi) {}

SolverParams RunConfig::solver_params() const {
    SolverParams p;
    p.grid = grid();
    p.dt = dt;
    p.t_end = t_end;
    p.save_stride = save_stride;
    p.project_zero_mean = zero_mean_projection;
    return p;
}

void RunConfig::validate() const {
    grid();  // throws on bad L or N
    solver_params().validate();
    if (!(sigma > 0.0)) throw std::invalid_argument("config: sigma must be positive");
    if (t_transient < 0.0) throw std::invalid_argument("config: t_transient must be >= 0");
    if (min_stripe_width < 0.0)
        throw std::invalid_argument("config: min_stripe_width must be >= 0");
    if (!(delta0 > 0.0)) throw std::invalid_argument("config: delta0 must be positive");
    if (!(renorm_interval > 0.0))
        throw std::invalid_argument("config: renorm_interval must be positive");
    if (out_dir.empty()) throw std::invalid_argument("config: out_dir must be set");
}

std::string RunConfig::to_text() const {
    std::ostringstream os;
    os << "L = " << format_double(length) << "\n";
    os << "N = " << n_points << "\n";
    os << "dt = " << format_double(dt) << "\n";
    os << "t_end = " << format_double(t_end) << "\n";
    os << "save_stride = " << save_stride << "\n";
    os << "seed = " << seed << "\n";
    os << "sigma = " << format_double(sigma) << "\n";
    os << "t_transient = " << format_double(t_transient) << "\n";
    os << "zero_mean_projection = " << (zero_mean_projection ? "true" : "false") << "\n";
    os << "min_stripe_width = " << format_double(min_stripe_width) << "\n";
    os << "delta0 = " << format_double(delta0) << "\n";
    os << "renorm_interval = " << format_double(renorm_interval) << "\n";
    os << "out_dir = " << out_dir << "\n";
    return os.str();
}

RunConfig RunConfig::from_text(const std::string& text) {
    RunConfig cfg;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: expected 'key = value', got: " + line);
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        if (key == "L") cfg.length = parse_double(key, value);
        else if (key == "N") cfg.n_points = parse_int(key, value);
        else if (key == "dt") cfg.dt = parse_double(key, value);
        else if (key == "t_end") cfg.t_end = parse_double(key, value);
        else if (key == "save_stride") cfg.save_stride = parse_int(key, value);
        else if (key == "seed") cfg.seed = parse_u64(key, value);
        else if (key == "sigma") cfg.sigma = parse_double(key, value);
        else if (key == "t_transient") cfg.t_transient = parse_double(key, value);
        else if (key == "zero_mean_projection") cfg.zero_mean_projection = parse_bool(key, value);
        else if (key == "min_stripe_width") cfg.min_stripe_width = parse_double(key, value);
        else if (key == "delta0") cfg.delta0 = parse_double(key, value);
        else if (key == "renorm_interval") cfg.renorm_interval = parse_double(key, value);
        else if (key == "out_dir") cfg.out_dir = value;
        else throw std::invalid_argument("config: unknown key '" + key + "'");
    }
    return cfg;
}

RunConfig RunConfig::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_text(buf.str());
}

void RunConfig::save(const std::filesystem::path& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("config: cannot write " + path.string());
    out << to_text();
}

}  // namespace ks

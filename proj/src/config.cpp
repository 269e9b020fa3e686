#include "rmlab/config.hpp"

#include <fstream>
#include <sstream>

#include "rmlab/errors.hpp"

namespace rmlab::cli {
namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& v) {
    try {
        std::size_t used = 0;
        const double x = std::stod(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ConfigError("config: bad numeric value for " + key + ": '" + v + "'");
    }
}

int parse_int(const std::string& key, const std::string& v) {
    const double x = parse_double(key, v);
    const int i = static_cast<int>(x);
    if (double(i) != x) throw ConfigError("config: " + key + " must be an integer");
    return i;
}

std::vector<double> parse_list(const std::string& key, const std::string& v) {
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(parse_double(key, item));
    }
    if (out.empty()) throw ConfigError("config: empty list for " + key);
    return out;
}

} // namespace

std::vector<double> RunConfig::energies() const {
    if (!e_list.empty()) return e_list;
    std::vector<double> out(e_count);
    for (int i = 0; i < e_count; ++i)
        out[i] = e_count == 1 ? e_min : e_min + (e_max - e_min) * i / (e_count - 1);
    return out;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");

    RunConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: missing '=' at line " + std::to_string(lineno));
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));

        if (key == "potential.u0") cfg.potential.u0 = parse_double(key, val);
        else if (key == "potential.beta") cfg.potential.beta = parse_double(key, val);
        else if (key == "potential.mass") cfg.potential.mass = parse_double(key, val);
        else if (key == "potential.hbar") cfg.potential.hbar = parse_double(key, val);
        else if (key == "energies.min") cfg.e_min = parse_double(key, val);
        else if (key == "energies.max") cfg.e_max = parse_double(key, val);
        else if (key == "energies.count") cfg.e_count = parse_int(key, val);
        else if (key == "energies.list") cfg.e_list = parse_list(key, val);
        else if (key == "theta.list") cfg.theta_list = parse_list(key, val);
        else if (key == "grid.x_min") cfg.grid.x_min = parse_double(key, val);
        else if (key == "grid.x_max") cfg.grid.x_max = parse_double(key, val);
        else if (key == "grid.n_points") cfg.grid.n_points = parse_int(key, val);
        else if (key == "box.re_min") cfg.box.re_min = parse_double(key, val);
        else if (key == "box.re_max") cfg.box.re_max = parse_double(key, val);
        else if (key == "box.im_min") cfg.box.im_min = parse_double(key, val);
        else if (key == "box.im_max") cfg.box.im_max = parse_double(key, val);
        else if (key == "box.max_depth") cfg.box.max_depth = parse_int(key, val);
        else if (key == "box.boundary_samples") cfg.box.boundary_samples = parse_int(key, val);
        else if (key == "transfer.n_cells") cfg.transfer_cells = parse_int(key, val);
        else if (key == "completeness.k_cutoffs") cfg.k_cutoffs = parse_list(key, val);
        else if (key == "completeness.quadrature_points")
            cfg.quadrature_points = parse_int(key, val);
        else if (key == "output.format") {
            if (val == "csv") cfg.format = OutputFormat::Csv;
            else if (val == "json") cfg.format = OutputFormat::Json;
            else throw ConfigError("config: output.format must be csv or json");
        } else if (key == "output.path") cfg.output_path = val;
        else throw ConfigError("config: unknown key '" + key + "' at line " +
                               std::to_string(lineno));
    }

    // re-validate module preconditions at load time
    try {
        cfg.potential.validate();
        cfg.grid.validate();
        cfg.box.validate();
        if (cfg.e_list.empty() && cfg.e_count < 1)
            throw std::invalid_argument("energies.count must be >= 1");
        for (double e : cfg.energies())
            if (!(e > 0.0)) throw std::invalid_argument("energies must be positive");
        for (double th : cfg.theta_list) ScalingAngle{th}.validate();
        for (double kc : cfg.k_cutoffs)
            if (!(kc > 0.0)) throw std::invalid_argument("k_cutoffs must be positive");
        if (cfg.transfer_cells < 8) throw std::invalid_argument("transfer.n_cells too small");
        if (cfg.quadrature_points < 8)
            throw std::invalid_argument("completeness.quadrature_points too small");
        if (cfg.potential.u0 != 0.0) {
            // asymptotic flatness for the sech^2 runs
            const double b = cfg.potential.beta;
            if (b * std::abs(cfg.grid.x_min) < 10.0 || b * cfg.grid.x_max < 10.0)
                throw std::invalid_argument("grid: beta*|x| >= 10 required at both ends");
        }
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    return cfg;
}

} // namespace rmlab::cli

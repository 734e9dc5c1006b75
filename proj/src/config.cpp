#include "relspin/config.hpp"
#include "relspin/numerics.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace relspin {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& raw, const std::string& key) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(raw, &used);
    } catch (const std::exception&) {
        throw config_error("config: '" + key + "' expects a number, got '" + raw + "'");
    }
    if (used != raw.size() || !std::isfinite(v)) {
        throw config_error("config: '" + key + "' expects a finite number, got '" + raw + "'");
    }
    return v;
}

std::vector<double> parse_list(const std::string& raw, const std::string& key) {
    std::vector<double> out;
    std::stringstream ss(raw);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(parse_double(trim(item), key));
    }
    if (out.empty()) throw config_error("config: '" + key + "' expects a comma list");
    return out;
}

Vec3 parse_vec3(const std::string& raw, const std::string& key) {
    const auto v = parse_list(raw, key);
    if (v.size() != 3) {
        throw config_error("config: '" + key + "' expects three comma-separated numbers");
    }
    return Vec3(v[0], v[1], v[2]);
}

Vec3 parse_axis(const std::string& raw) {
    if (raw == "x") return Vec3(1, 0, 0);
    if (raw == "y") return Vec3(0, 1, 0);
    if (raw == "z") return Vec3(0, 0, 1);
    const Vec3 v = parse_vec3(raw, "boost.axis");
    const double n = v.norm();
    if (n < 1e-12) throw config_error("config: 'boost.axis' must be nonzero");
    return v / n;
}

void apply_key(ExperimentConfig& cfg, const std::string& key, const std::string& value,
               int line) {
    if (key == "experiment") {
        if (value != cfg.experiment) {
            throw config_error("config: experiment '" + value +
                               "' does not match the subcommand '" + cfg.experiment + "'");
        }
    } else if (key == "mass") {
        cfg.mass = parse_double(value, key);
    } else if (key == "center") {
        cfg.center = parse_vec3(value, key);
    } else if (key == "center2") {
        cfg.center2 = parse_vec3(value, key);
    } else if (key == "width") {
        cfg.width = parse_double(value, key);
    } else if (key == "chi0") {
        const auto v = parse_list(value, key);
        if (v.size() != 4) {
            throw config_error("config: 'chi0' expects four numbers re+,im+,re-,im-");
        }
        cfg.chi0 = Spinor(Complex(v[0], v[1]), Complex(v[2], v[3]));
    } else if (key == "grid.n") {
        const double v = parse_double(value, key);
        if (v != std::floor(v)) throw config_error("config: 'grid.n' expects an integer");
        cfg.grid.n = static_cast<int>(v);
    } else if (key == "grid.k") {
        cfg.grid.span = parse_double(value, key);
    } else if (key == "boost.axis") {
        cfg.boost_axis = parse_axis(value);
    } else if (key == "rapidities") {
        cfg.rapidities = parse_list(value, key);
    } else if (key == "frame") {
        cfg.frame = value;
    } else if (key == "out") {
        cfg.out = value;
    } else if (key == "format") {
        cfg.format = value;
    } else {
        std::ostringstream msg;
        msg << "config: unknown key '" << key << "' (line " << line << ")";
        throw config_error(msg.str());
    }
}

} // namespace

void ExperimentConfig::validate() const {
    if (!(mass > 0.0) || !std::isfinite(mass)) throw config_error("config: mass must be > 0");
    if (!(width > 0.0) || !std::isfinite(width)) throw config_error("config: width must be > 0");
    if (!center.allFinite() || !center2.allFinite()) {
        throw config_error("config: centers must be finite");
    }
    if (chi0.norm() == 0.0) throw config_error("config: chi0 must be nonzero");
    if (grid.n < 3 || grid.n % 2 == 0) {
        throw config_error("config: grid.n must be odd and >= 3");
    }
    if (!(grid.span > 0.0)) throw config_error("config: grid.k must be > 0");
    if (rapidities.empty()) throw config_error("config: rapidity list must be non-empty");
    for (double r : rapidities) {
        if (!std::isfinite(r)) throw config_error("config: rapidities must be finite");
    }
    if (format != "csv" && format != "json") {
        throw config_error("config: format must be csv or json");
    }
    if (frame != "pst" && frame != "helicity" && frame != "adapted" &&
        frame.rfind("custom:", 0) != 0) {
        throw config_error("config: frame must be pst, helicity, adapted or custom:t0,t1,t2,t3");
    }
    if (frame.rfind("custom:", 0) == 0) {
        const auto v = parse_list(frame.substr(7), "frame");
        if (v.size() != 4 || (v[0] == 0 && v[1] == 0 && v[2] == 0 && v[3] == 0)) {
            throw config_error("config: custom frame expects four numbers, not all zero");
        }
    }
}

ExperimentConfig default_config(const std::string& experiment) {
    ExperimentConfig cfg;
    cfg.experiment = experiment;
    if (experiment == "entangle-scan") {
        cfg.grid.n = 7;
        cfg.boost_axis = Vec3(0, 0, 1);
    } else if (experiment == "wigner") {
        cfg.rapidities = {0.25, 0.5, 1.0, 2.0};
    } else if (experiment != "entropy-scan" && experiment != "gauge-check") {
        throw config_error("unknown experiment '" + experiment + "'");
    }
    return cfg;
}

ExperimentConfig parse_config(std::istream& in, const std::string& experiment) {
    ExperimentConfig cfg = default_config(experiment);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string text = trim(line);
        if (text.empty()) continue;
        const auto eq = text.find('=');
        if (eq == std::string::npos) {
            std::ostringstream msg;
            msg << "config: expected 'key = value' (line " << number << ")";
            throw config_error(msg.str());
        }
        apply_key(cfg, trim(text.substr(0, eq)), trim(text.substr(eq + 1)), number);
    }
    cfg.validate();
    return cfg;
}

ExperimentConfig parse_config_file(const std::string& path, const std::string& experiment) {
    std::ifstream in(path);
    if (!in) throw config_error("config: cannot open '" + path + "'");
    return parse_config(in, experiment);
}

} // namespace relspin

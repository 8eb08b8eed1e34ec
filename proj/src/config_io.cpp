#include "sboxkit/config_io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace sboxkit {

static std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

static LagSpec parse_lags(const std::string& value) {
    LagSpec spec;
    std::istringstream in(value);
    std::string item;
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        spec.lags.push_back(std::stoi(item));
    }
    std::sort(spec.lags.begin(), spec.lags.end());
    spec.validate();
    return spec;
}

GeneratorConfig parse_config(const std::string& text) {
    GeneratorConfig cfg = default_config();
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config line " + std::to_string(lineno) +
                                     ": expected key=value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "alpha1")
                cfg.params1.alpha = std::stod(value);
            else if (key == "alpha2")
                cfg.params2.alpha = std::stod(value);
            else if (key == "x01")
                cfg.params1.x0 = std::stod(value);
            else if (key == "x02")
                cfg.params2.x0 = std::stod(value);
            else if (key == "lags1")
                cfg.lags1 = parse_lags(value);
            else if (key == "lags2")
                cfg.lags2 = parse_lags(value);
            else if (key == "burn_in")
                cfg.burn_in = std::stol(value);
            else
                throw std::runtime_error("unknown key '" + key + "'");
        } catch (const std::runtime_error&) {
            throw;
        } catch (const std::exception&) {
            throw std::runtime_error("config line " + std::to_string(lineno) +
                                     ": bad value for " + key);
        }
    }
    cfg.validate();
    return cfg;
}

static std::string join_lags(const LagSpec& spec) {
    std::ostringstream out;
    for (std::size_t i = 0; i < spec.lags.size(); ++i) {
        if (i) out << ',';
        out << spec.lags[i];
    }
    return out.str();
}

std::string format_config(const GeneratorConfig& config) {
    std::ostringstream out;
    out << std::setprecision(17);
    out << "alpha1 = " << config.params1.alpha << "\n";
    out << "x01 = " << config.params1.x0 << "\n";
    out << "lags1 = " << join_lags(config.lags1) << "\n";
    out << "alpha2 = " << config.params2.alpha << "\n";
    out << "x02 = " << config.params2.x0 << "\n";
    out << "lags2 = " << join_lags(config.lags2) << "\n";
    out << "burn_in = " << config.burn_in << "\n";
    return out.str();
}

GeneratorConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_config(buf.str());
    } catch (const std::exception& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
}

void save_config(const GeneratorConfig& config, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write config " + path.string());
    out << format_config(config);
}

}  // namespace sboxkit

#include "qccdlab/machine.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qccd {

Topology linear_topology(int n_traps, int capacity) {
    if (n_traps < 1) throw std::invalid_argument("linear_topology: need at least one trap");
    if (capacity < 2) throw std::invalid_argument("linear_topology: capacity must be >= 2");
    return Topology{n_traps, capacity};
}

void require_valid(const DeviceParams& p) {
    const auto bad = [](const char* what) {
        throw std::invalid_argument(std::string("device params: ") + what);
    };
    if (p.eps_2q0 < 0.0 || p.eps_2q0 >= 1.0) bad("eps_2q0 must be in [0, 1)");
    if (p.gamma < 0.0) bad("gamma must be >= 0");
    if (p.swap_error_ratio < 1.0) bad("swap_error_ratio must be >= 1");
    for (double f : {p.f_hop, p.f_split, p.f_merge})
        if (f <= 0.0 || f > 1.0) bad("fidelity factors must be in (0, 1]");
    for (double t : {p.t_2q_us, p.t_swap_us, p.t_split_us, p.t_merge_us, p.t_hop_us})
        if (t <= 0.0) bad("durations must be > 0");
    if (p.t2_ms <= 0.0) bad("T2 must be > 0");
}

double gate_error(const DeviceParams& params, int chain_length) {
    if (chain_length < 1) throw std::invalid_argument("gate_error: chain length must be >= 1");
    const double scaled =
        params.eps_2q0 * (1.0 + params.gamma * std::max(0, chain_length - 2));
    return std::min(scaled, 1.0 - 1e-12);
}

double swap_error(const DeviceParams& params, int chain_length) {
    return std::min(params.swap_error_ratio * gate_error(params, chain_length), 1.0 - 1e-12);
}

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

} // namespace

MachineConfig parse_config(const std::string& text) {
    MachineConfig cfg;
    std::map<std::string, double*> numeric{
        {"eps_2q0", &cfg.params.eps_2q0},       {"gamma", &cfg.params.gamma},
        {"swap_error_ratio", &cfg.params.swap_error_ratio},
        {"f_hop", &cfg.params.f_hop},           {"f_split", &cfg.params.f_split},
        {"f_merge", &cfg.params.f_merge},       {"t_2q_us", &cfg.params.t_2q_us},
        {"t_swap_us", &cfg.params.t_swap_us},   {"t_split_us", &cfg.params.t_split_us},
        {"t_merge_us", &cfg.params.t_merge_us}, {"t_hop_us", &cfg.params.t_hop_us},
        {"t2_ms", &cfg.params.t2_ms},
    };
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(line_no) +
                                        ": expected 'key = value'");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        try {
            if (key == "n_traps")
                cfg.topology.n_traps = std::stoi(value);
            else if (key == "capacity")
                cfg.topology.capacity = std::stoi(value);
            else if (auto it = numeric.find(key); it != numeric.end())
                *it->second = std::stod(value);
            else
                throw std::invalid_argument("unknown key '" + key + "'");
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("config line " + std::to_string(line_no) +
                                        ": bad entry '" + stripped + "'");
        }
    }
    require_valid(cfg.params);
    (void)linear_topology(cfg.topology.n_traps, cfg.topology.capacity);
    return cfg;
}

MachineConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string config_to_text(const MachineConfig& config) {
    std::ostringstream out;
    out << "# QCCD machine configuration\n";
    out << "n_traps = " << config.topology.n_traps << "\n";
    out << "capacity = " << config.topology.capacity << "\n";
    const DeviceParams& p = config.params;
    out << "eps_2q0 = " << format_double(p.eps_2q0) << "\n";
    out << "gamma = " << format_double(p.gamma) << "\n";
    out << "swap_error_ratio = " << format_double(p.swap_error_ratio) << "\n";
    out << "f_hop = " << format_double(p.f_hop) << "\n";
    out << "f_split = " << format_double(p.f_split) << "\n";
    out << "f_merge = " << format_double(p.f_merge) << "\n";
    out << "t_2q_us = " << format_double(p.t_2q_us) << "\n";
    out << "t_swap_us = " << format_double(p.t_swap_us) << "\n";
    out << "t_split_us = " << format_double(p.t_split_us) << "\n";
    out << "t_merge_us = " << format_double(p.t_merge_us) << "\n";
    out << "t_hop_us = " << format_double(p.t_hop_us) << "\n";
    out << "t2_ms = " << format_double(p.t2_ms) << "\n";
    return out.str();
}

} // namespace qccd

#pragma once

#include <string>

namespace qccd {

/// 1D-linear QCCD trap array: traps 0..n_traps-1, uniform capacity, and
/// segment s connecting traps s and s+1.
struct Topology {
    int n_traps = 1;
    int capacity = 2;

    int n_segments() const { return n_traps - 1; }
    int total_slots() const { return n_traps * capacity; }
};

/// Throws std::invalid_argument on n_traps < 1 or capacity < 2.
Topology linear_topology(int n_traps, int capacity);

/// Device timing/error parameters. Durations in microseconds, T2 in
/// milliseconds. Defaults are order-of-magnitude trapped-ion values; the
/// checked-in configs/default.cfg holds the calibrated set.
struct DeviceParams {
    double eps_2q0 = 1e-3;          // base two-qubit gate error probability
    double gamma = 0.05;            // chain-length error scaling per extra ion
    double swap_error_ratio = 3.0;  // r >= 1
    double f_hop = 1.0 - 1e-4;      // per-segment shuttle fidelity factor
    double f_split = 1.0 - 5e-4;
    double f_merge = 1.0 - 5e-4;
    double t_2q_us = 100.0;
    double t_swap_us = 100.0;
    double t_split_us = 80.0;
    double t_merge_us = 80.0;
    double t_hop_us = 20.0;
    double t2_ms = 1000.0;
};

/// Throws std::invalid_argument if any invariant fails (durations > 0,
/// probabilities in [0,1), r >= 1, T2 > 0).
void require_valid(const DeviceParams& params);

/// Two-qubit gate error in a chain of L ions:
///   eps(L) = eps_2q0 * (1 + gamma * max(0, L - 2))
double gate_error(const DeviceParams& params, int chain_length);

/// SWAP error = swap_error_ratio * eps(L), clamped below 1.
double swap_error(const DeviceParams& params, int chain_length);

/// Key-value config file ("key = value", '#' comments). Holds every
/// DeviceParams field plus the topology shape (n_traps, capacity); absent
/// keys keep their defaults. Unknown keys are an error.
struct MachineConfig {
    Topology topology;
    DeviceParams params;
};

MachineConfig parse_config(const std::string& text);
MachineConfig load_config(const std::string& path);
std::string config_to_text(const MachineConfig& config);

} // namespace qccd

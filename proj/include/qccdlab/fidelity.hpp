#pragma once

#include "qccdlab/compiler.hpp"
#include "qccdlab/machine.hpp"
#include "qccdlab/schedule.hpp"

#include <string>

namespace qccd {

/// Fidelity and timing summary of one compiled run.
struct FidelityReport {
    double fidelity = 1.0;     // raw_product * coherence
    double coherence = 1.0;    // e^(-makespan / T2)
    double raw_product = 1.0;  // gate/swap/shuttle factors only
    double makespan_us = 0.0;
    int gate_count = 0;
    int swap_count = 0;
    int split_count = 0;
    int hop_count = 0;
    int merge_count = 0;
    std::string topology;      // "<traps>x<capacity>"
    std::string router;
    std::string placement;
};

/// Eq-style decoherence factor e^(-t/T2); t and T2 share a unit.
/// Throws std::invalid_argument for t < 0 or T2 <= 0.
double coherence(double t, double t2);

struct FidelityOptions {
    /// Default: one global factor with the schedule makespan. The per-qubit
    /// variant uses exp(-mean idle time / T2) instead.
    bool per_qubit_idle = false;
};

/// Multiplicative error model over a replay of the schedule: every gate
/// contributes (1 - eps(L)), every SWAP (1 - r*eps(L)) with L the occupancy
/// of the event's trap at its start, and each hop/split/merge its flat
/// factor. The schedule must pass validate_schedule.
FidelityReport schedule_fidelity(const Schedule& schedule, const Circuit& circuit,
                                 const Topology& topology, const DeviceParams& params,
                                 const FidelityOptions& options = {});

/// Relative fidelity improvement, in percent: 100 * (F_par - F_seq) / F_seq.
double delta_f(const FidelityReport& parallel, const FidelityReport& sequential);

} // namespace qccd

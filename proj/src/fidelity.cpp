#include "qccdlab/fidelity.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace qccd {

double coherence(double t, double t2) {
    if (t < 0.0) throw std::invalid_argument("coherence: negative time");
    if (t2 <= 0.0) throw std::invalid_argument("coherence: T2 must be > 0");
    return std::exp(-t / t2);
}

FidelityReport schedule_fidelity(const Schedule& schedule, const Circuit& circuit,
                                 const Topology& topology, const DeviceParams& params,
                                 const FidelityOptions& options) {
    require_valid(params);
    {
        const auto violations = validate_schedule(schedule, circuit, topology);
        if (!violations.empty())
            throw std::invalid_argument("schedule_fidelity: invalid schedule: " +
                                        violations.front());
    }

    // Replay chain occupancies at event starts. The schedule is replay-valid,
    // so transitions can be applied without re-checking.
    const int n_events = static_cast<int>(schedule.events.size());
    std::vector<int> order(n_events);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
        return schedule.events[i].start_us < schedule.events[j].start_us;
    });

    std::vector<int> occupancy(topology.n_traps, 0);
    std::vector<int> trap_of(circuit.n_qubits, -1);
    for (int q = 0; q < circuit.n_qubits; ++q) {
        trap_of[q] = schedule.initial_positions[q].first;
        ++occupancy[trap_of[q]];
    }

    FidelityReport report;
    // Counts per (kind, occupancy) keep the error product permutation
    // invariant: factors combine via pow, not an order-dependent fold.
    std::map<std::pair<int, int>, int> leveled; // (is_swap, L) -> count
    for (int i : order) {
        const ScheduleEvent& ev = schedule.events[i];
        switch (ev.kind) {
        case EventKind::gate:
            ++report.gate_count;
            ++leveled[{0, occupancy[ev.resource]}];
            break;
        case EventKind::swap:
            ++report.swap_count;
            ++leveled[{1, occupancy[ev.resource]}];
            break;
        case EventKind::split:
            ++report.split_count;
            --occupancy[ev.resource];
            trap_of[ev.q0] = -1;
            break;
        case EventKind::hop:
            ++report.hop_count;
            break;
        case EventKind::merge:
            ++report.merge_count;
            ++occupancy[ev.resource];
            trap_of[ev.q0] = ev.resource;
            break;
        }
    }

    double raw = 1.0;
    for (const auto& [key, count] : leveled) {
        const auto [is_swap, level] = key;
        const double err =
            is_swap ? swap_error(params, level) : gate_error(params, level);
        raw *= std::pow(1.0 - err, count);
    }
    raw *= std::pow(params.f_hop, report.hop_count);
    raw *= std::pow(params.f_split, report.split_count);
    raw *= std::pow(params.f_merge, report.merge_count);

    report.makespan_us = schedule.makespan_us();
    const double t2_us = params.t2_ms * 1000.0;
    if (options.per_qubit_idle) {
        // Mean idle time across qubits instead of the global makespan.
        std::vector<double> busy(circuit.n_qubits, 0.0);
        for (const ScheduleEvent& ev : schedule.events) {
            busy[ev.q0] += ev.duration_us;
            if (ev.q1 >= 0) busy[ev.q1] += ev.duration_us;
        }
        double idle_sum = 0.0;
        for (double b : busy) idle_sum += std::max(0.0, report.makespan_us - b);
        const double mean_idle = circuit.n_qubits > 0 ? idle_sum / circuit.n_qubits : 0.0;
        report.coherence = coherence(mean_idle, t2_us);
    } else {
        report.coherence = coherence(report.makespan_us, t2_us);
    }
    report.raw_product = raw;
    report.fidelity = raw * report.coherence;
    report.topology = std::to_string(topology.n_traps) + "x" + std::to_string(topology.capacity);
    report.router = schedule.router;
    report.placement = schedule.placement;
    return report;
}

double delta_f(const FidelityReport& parallel, const FidelityReport& sequential) {
    if (sequential.fidelity <= 0.0)
        throw std::invalid_argument("delta_f: sequential fidelity must be positive");
    return 100.0 * (parallel.fidelity - sequential.fidelity) / sequential.fidelity;
}

} // namespace qccd

#pragma once

#include "qccdlab/circuit.hpp"
#include "qccdlab/machine.hpp"
#include "qccdlab/schedule.hpp"

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace qccd {

/// Raised when a requested relocation cannot proceed: bubble displacement
/// ran into the end of the trap line with no free slot in the direction of
/// travel. Never silent.
struct CapacityDeadlock : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Injective map qubit -> (trap, chain position); positions are dense per
/// trap and initial occupancy leaves one slot free per trap.
struct Placement {
    std::vector<std::pair<int, int>> positions; // indexed by qubit

    int n_qubits() const { return static_cast<int>(positions.size()); }
};

std::vector<std::string> validate(const Placement& placement, const Topology& topology);

/// Interaction-graph placement with temporally decayed edge weights
/// w(i,j) = sum over gates g=(i,j) of 1/(1 + layer(g)); heaviest edges are
/// co-located first, traps fill left to right, one slot per trap stays free.
/// Within a trap, chain order follows directional traffic so likely
/// departures start near the matching edge.
Placement sta_placement(const Circuit& circuit, const Topology& topology);

/// Places the i-th pair of the first ASAP layer in trap i. Requires the
/// first layer to be a perfect matching and n/2 <= n_traps.
Placement paired_placement(const Circuit& circuit, const Topology& topology);

/// Live machine state: one ordered ion chain per trap (position 0 = left
/// end) plus ions in transit on a segment.
class MachineState {
public:
    MachineState() = default;
    MachineState(const Placement& placement, const Topology& topology);

    const Topology& topology() const { return topo_; }
    const std::vector<int>& chain(int trap) const { return chains_[trap]; }
    int occupancy(int trap) const { return static_cast<int>(chains_[trap].size()); }

    bool in_trap(int qubit) const;
    int trap_of(int qubit) const;     // -1 while in transit
    int position_of(int qubit) const; // -1 while in transit

    /// Swap the chain positions of qubit with its neighbour toward dir.
    void apply_swap(int qubit, int neighbour);
    /// Detach qubit from the chain edge facing segment seg.
    void apply_split(int qubit, int seg);
    /// Carry qubit across its segment.
    void apply_hop(int qubit, int seg);
    /// Attach qubit to the near edge of trap (the edge facing the segment it
    /// arrived on).
    void apply_merge(int qubit, int trap);

private:
    Topology topo_;
    std::vector<std::vector<int>> chains_;
    // qubit -> (trap, pos) or, in transit, (-1 - segment, side trap)
    std::vector<std::pair<int, int>> where_;

    void reindex(int trap);
};

/// Earliest-feasible start times over the three resource classes.
struct Timeline {
    std::vector<double> trap_free_us;
    std::vector<double> segment_free_us;
    std::vector<double> ion_free_us;
    double floor_us = 0.0; // layer barrier, when a router uses one

    Timeline() = default;
    Timeline(const Topology& topology, int n_qubits);

    double start_for(const ScheduleEvent& ev) const;
    void commit(const ScheduleEvent& ev);
};

/// Relocates one ion to dest_trap: minimal SWAPs to the departure edge, then
/// split / hop / (merge, cross, split at each intermediate trap) / merge.
/// Full traps on the way displace their onward-edge ion one trap further
/// (recursively); protected ions are never displaced. Emits onto `out`,
/// updating state and timeline. Throws CapacityDeadlock when displacement
/// runs out of line.
void plan_move(MachineState& state, Timeline& timeline, const DeviceParams& params,
               int qubit, int dest_trap, std::vector<ScheduleEvent>& out,
               const std::set<int>& protected_ions = {});

/// Convenience overload matching the one-shot contract: fresh timeline,
/// returns just the event list.
std::vector<ScheduleEvent> plan_move(MachineState& state, const DeviceParams& params,
                                     int qubit, int dest_trap,
                                     const std::set<int>& protected_ions = {});

struct RouteOptions {
    int lookahead_window = 20;   // greedy router only
    bool serialize_moves = false; // naive router: one move primitive at a time
};

/// Timestep-synchronous router: per ASAP layer, relocate every displaced ion
/// (overlapping in time where resources allow), then run the layer's gates
/// behind a barrier; gates in distinct traps are concurrent, gates sharing a
/// trap serialize.
Schedule route_naive_parallel(const Circuit& circuit, const Placement& placement,
                              const Topology& topology, const DeviceParams& params,
                              const RouteOptions& options = {});

/// Movement-minimizing router: processes gates in ASAP order without a layer
/// barrier, moving the qubit with fewer upcoming gates in the lookahead
/// window to its partner's trap.
Schedule route_greedy_minmove(const Circuit& circuit, const Placement& placement,
                              const Topology& topology, const DeviceParams& params,
                              const RouteOptions& options = {});

/// Independent replay oracle: replays events against a fresh MachineState
/// and reports every violation (resource overlap, ion overlap, capacity,
/// chain/edge discipline, gate co-location, gate coverage, per-qubit order).
std::vector<std::string> validate_schedule(const Schedule& schedule, const Circuit& circuit,
                                           const Topology& topology);

} // namespace qccd

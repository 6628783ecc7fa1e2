#include "qccdlab/compiler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qccd {
namespace {

ScheduleEvent& emit(std::vector<ScheduleEvent>& out, Timeline& timeline, EventKind kind, int q0,
                    int q1, int resource, double duration) {
    ScheduleEvent ev;
    ev.kind = kind;
    ev.q0 = q0;
    ev.q1 = q1;
    ev.resource = resource;
    ev.duration_us = duration;
    ev.start_us = timeline.start_for(ev);
    timeline.commit(ev);
    out.push_back(ev);
    return out.back();
}

// Brings a non-protected ion to the given edge of a full trap by bubbling it
// outward, then returns it.
int expose_victim(MachineState& state, Timeline& timeline, const DeviceParams& params, int trap,
                  bool right_edge, const std::set<int>& protected_ions,
                  std::vector<ScheduleEvent>& out) {
    const auto& chain = state.chain(trap);
    const int len = static_cast<int>(chain.size());
    const int edge = right_edge ? len - 1 : 0;
    const int step = right_edge ? 1 : -1;
    int candidate = -1;
    for (int pos = edge; pos >= 0 && pos < len; pos -= step)
        if (!protected_ions.count(chain[pos])) {
            candidate = pos;
            break;
        }
    if (candidate == -1)
        throw CapacityDeadlock("bubble displacement: trap " + std::to_string(trap) +
                               " holds only protected ions");
    int pos = candidate;
    const int victim = chain[pos];
    while (pos != edge) {
        const int neighbour = state.chain(trap)[pos + step];
        emit(out, timeline, EventKind::swap, victim, neighbour, trap, params.t_swap_us);
        state.apply_swap(victim, neighbour);
        pos += step;
    }
    return victim;
}

} // namespace

void plan_move(MachineState& state, Timeline& timeline, const DeviceParams& params, int qubit,
               int dest_trap, std::vector<ScheduleEvent>& out,
               const std::set<int>& protected_ions) {
    const Topology& topo = state.topology();
    if (dest_trap < 0 || dest_trap >= topo.n_traps)
        throw std::invalid_argument("plan_move: destination trap out of range");
    const int src = state.trap_of(qubit);
    if (src < 0) throw std::logic_error("plan_move: ion is in transit");
    if (src == dest_trap) return;
    const int dir = dest_trap > src ? 1 : -1;

    // Displaces the onward-edge ion of a full trap one hop further along.
    const auto make_room = [&](int trap) {
        while (state.occupancy(trap) >= topo.capacity) {
            const int onward = trap + dir;
            if (onward < 0 || onward >= topo.n_traps)
                throw CapacityDeadlock("bubble displacement ran off the trap line at trap " +
                                       std::to_string(trap));
            const int victim =
                expose_victim(state, timeline, params, trap, dir > 0, protected_ions, out);
            plan_move(state, timeline, params, victim, onward, out, protected_ions);
        }
    };

    // SWAPs to the departure edge, then split onto the first segment.
    while (true) {
        const auto& chain = state.chain(src);
        const int pos = state.position_of(qubit);
        const int edge = dir > 0 ? static_cast<int>(chain.size()) - 1 : 0;
        if (pos == edge) break;
        const int neighbour = chain[pos + dir];
        emit(out, timeline, EventKind::swap, qubit, neighbour, src, params.t_swap_us);
        state.apply_swap(qubit, neighbour);
    }

    int trap = src;
    int seg = dir > 0 ? trap : trap - 1;
    emit(out, timeline, EventKind::split, qubit, -1, trap, params.t_split_us);
    state.apply_split(qubit, seg);
    while (true) {
        emit(out, timeline, EventKind::hop, qubit, -1, seg, params.t_hop_us);
        state.apply_hop(qubit, seg);
        trap += dir;
        make_room(trap);
        emit(out, timeline, EventKind::merge, qubit, -1, trap, params.t_merge_us);
        state.apply_merge(qubit, trap);
        if (trap == dest_trap) break;
        // Pass through: cross the chain and split at the far edge.
        while (true) {
            const auto& chain = state.chain(trap);
            const int pos = state.position_of(qubit);
            const int edge = dir > 0 ? static_cast<int>(chain.size()) - 1 : 0;
            if (pos == edge) break;
            const int neighbour = chain[pos + dir];
            emit(out, timeline, EventKind::swap, qubit, neighbour, trap, params.t_swap_us);
            state.apply_swap(qubit, neighbour);
        }
        seg = dir > 0 ? trap : trap - 1;
        emit(out, timeline, EventKind::split, qubit, -1, trap, params.t_split_us);
        state.apply_split(qubit, seg);
    }
}

std::vector<ScheduleEvent> plan_move(MachineState& state, const DeviceParams& params, int qubit,
                                     int dest_trap, const std::set<int>& protected_ions) {
    int max_q = qubit;
    for (int t = 0; t < state.topology().n_traps; ++t)
        for (int q : state.chain(t)) max_q = std::max(max_q, q);
    Timeline timeline(state.topology(), max_q + 1);
    std::vector<ScheduleEvent> out;
    plan_move(state, timeline, params, qubit, dest_trap, out, protected_ions);
    return out;
}

namespace {

int nearest_trap_with_room(const MachineState& state, int need, int trap_a, int trap_b) {
    const Topology& topo = state.topology();
    int best = -1;
    int best_dist = std::numeric_limits<int>::max();
    for (int t = 0; t < topo.n_traps; ++t) {
        if (topo.capacity - state.occupancy(t) < need) continue;
        const int dist = std::abs(t - trap_a) + std::abs(t - trap_b);
        if (dist < best_dist) {
            best_dist = dist;
            best = t;
        }
    }
    return best;
}

double max_end(const std::vector<ScheduleEvent>& events, std::size_t from) {
    double end = 0.0;
    for (std::size_t i = from; i < events.size(); ++i)
        end = std::max(end, events[i].end_us());
    return end;
}

} // namespace

Schedule route_naive_parallel(const Circuit& circuit, const Placement& placement,
                              const Topology& topology, const DeviceParams& params,
                              const RouteOptions& options) {
    require_valid(params);
    MachineState state(placement, topology);
    Timeline timeline(topology, circuit.n_qubits);
    const Layering layering = asap_layering(circuit);

    Schedule schedule;
    schedule.router = "naive";
    schedule.initial_positions = placement.positions;
    auto& events = schedule.events;

    double running_end = 0.0;
    for (const auto& layer : layering.layers) {
        const std::size_t moves_begin = events.size();
        std::vector<std::pair<int, int>> exec; // (gate index, trap)
        exec.reserve(layer.size());
        for (int gi : layer) {
            const Gate& g = circuit.gates[gi];
            const int trap_a = state.trap_of(g.qubit_a);
            const int trap_b = state.trap_of(g.qubit_b);
            int exec_trap;
            if (trap_a == trap_b) {
                exec_trap = trap_a;
            } else {
                const int lo = std::min(g.qubit_a, g.qubit_b);
                const int trap_lo = state.trap_of(lo);
                const int trap_hi = trap_lo == trap_a ? trap_b : trap_a;
                if (state.occupancy(trap_lo) < topology.capacity)
                    exec_trap = trap_lo;
                else if (state.occupancy(trap_hi) < topology.capacity)
                    exec_trap = trap_hi;
                else {
                    exec_trap = nearest_trap_with_room(state, 2, trap_a, trap_b);
                    if (exec_trap == -1) exec_trap = nearest_trap_with_room(state, 1, trap_a, trap_b);
                    if (exec_trap == -1)
                        throw CapacityDeadlock("naive router: no trap can host gate " +
                                               std::to_string(gi));
                }
            }
            const std::set<int> prot{g.qubit_a, g.qubit_b};
            for (int q : {std::min(g.qubit_a, g.qubit_b), std::max(g.qubit_a, g.qubit_b)})
                if (state.trap_of(q) != exec_trap) {
                    if (options.serialize_moves)
                        timeline.floor_us = std::max(timeline.floor_us, running_end);
                    const std::size_t before = events.size();
                    plan_move(state, timeline, params, q, exec_trap, events, prot);
                    running_end = std::max(running_end, max_end(events, before));
                }
            exec.emplace_back(gi, exec_trap);
        }
        // Layer barrier: gates start only after this layer's moves are done.
        const double barrier = max_end(events, moves_begin);
        timeline.floor_us = std::max(timeline.floor_us, barrier);
        for (const auto& [gi, trap] : exec) {
            const Gate& g = circuit.gates[gi];
            emit(events, timeline, EventKind::gate, g.qubit_a, g.qubit_b, trap, params.t_2q_us);
            running_end = std::max(running_end, events.back().end_us());
        }
        if (!options.serialize_moves) timeline.floor_us = 0.0;
    }
    return schedule;
}

Schedule route_greedy_minmove(const Circuit& circuit, const Placement& placement,
                              const Topology& topology, const DeviceParams& params,
                              const RouteOptions& options) {
    require_valid(params);
    if (options.lookahead_window < 0)
        throw std::invalid_argument("greedy router: lookahead must be >= 0");
    MachineState state(placement, topology);
    Timeline timeline(topology, circuit.n_qubits);
    const Layering layering = asap_layering(circuit);

    std::vector<int> order; // gate indices in ASAP order
    order.reserve(circuit.gates.size());
    for (const auto& layer : layering.layers)
        for (int gi : layer) order.push_back(gi);

    std::vector<int> remaining(circuit.n_qubits, 0);
    for (const Gate& g : circuit.gates) {
        ++remaining[g.qubit_a];
        ++remaining[g.qubit_b];
    }

    Schedule schedule;
    schedule.router = "greedy";
    schedule.initial_positions = placement.positions;
    auto& events = schedule.events;

    for (std::size_t k = 0; k < order.size(); ++k) {
        const Gate& g = circuit.gates[order[k]];
        --remaining[g.qubit_a];
        --remaining[g.qubit_b];
        const int trap_a = state.trap_of(g.qubit_a);
        const int trap_b = state.trap_of(g.qubit_b);
        if (trap_a != trap_b) {
            int win_a = 0;
            int win_b = 0;
            const std::size_t limit =
                std::min(order.size(), k + 1 + static_cast<std::size_t>(options.lookahead_window));
            for (std::size_t j = k + 1; j < limit; ++j) {
                const Gate& h = circuit.gates[order[j]];
                win_a += h.qubit_a == g.qubit_a || h.qubit_b == g.qubit_a;
                win_b += h.qubit_a == g.qubit_b || h.qubit_b == g.qubit_b;
            }
            int mover;
            if (win_a != win_b)
                mover = win_a < win_b ? g.qubit_a : g.qubit_b;
            else if (remaining[g.qubit_a] != remaining[g.qubit_b])
                mover = remaining[g.qubit_a] < remaining[g.qubit_b] ? g.qubit_a : g.qubit_b;
            else
                mover = std::min(g.qubit_a, g.qubit_b);
            const int other = mover == g.qubit_a ? g.qubit_b : g.qubit_a;
            const std::set<int> prot{g.qubit_a, g.qubit_b};

            // Preference order: mover into a free slot, the other qubit into
            // a free slot, then bubble displacement (either direction), and
            // finally both qubits to the nearest trap with room.
            std::vector<std::vector<std::pair<int, int>>> attempts;
            if (state.occupancy(state.trap_of(other)) < topology.capacity)
                attempts.push_back({{mover, state.trap_of(other)}});
            else if (state.occupancy(state.trap_of(mover)) < topology.capacity)
                attempts.push_back({{other, state.trap_of(mover)}});
            attempts.push_back({{mover, state.trap_of(other)}});
            attempts.push_back({{other, state.trap_of(mover)}});
            const int third = nearest_trap_with_room(state, 1, trap_a, trap_b);
            if (third != -1 && third != trap_a && third != trap_b)
                attempts.push_back({{mover, third}, {other, third}});

            bool done = false;
            std::string last_error;
            for (const auto& attempt : attempts) {
                MachineState trial_state = state;
                Timeline trial_timeline = timeline;
                std::vector<ScheduleEvent> trial_events;
                try {
                    for (const auto& [q, dest] : attempt)
                        plan_move(trial_state, trial_timeline, params, q, dest, trial_events, prot);
                } catch (const CapacityDeadlock& e) {
                    last_error = e.what();
                    continue;
                }
                state = std::move(trial_state);
                timeline = std::move(trial_timeline);
                events.insert(events.end(), trial_events.begin(), trial_events.end());
                done = true;
                break;
            }
            if (!done)
                throw CapacityDeadlock("greedy router: gate " + std::to_string(g.program_index) +
                                       " unroutable: " + last_error);
        }
        emit(events, timeline, EventKind::gate, g.qubit_a, g.qubit_b, state.trap_of(g.qubit_a),
             params.t_2q_us);
    }
    return schedule;
}

} // namespace qccd

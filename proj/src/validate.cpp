#include "qccdlab/compiler.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace qccd {
namespace {

constexpr double kTimeEps = 1e-9;

// Replay-side ion bookkeeping, deliberately separate from MachineState: the
// validator is the oracle for the routers' state transitions.
struct IonLoc {
    enum class Tag { in_chain, detached, arrived } tag = Tag::in_chain;
    int trap = -1;      // in_chain / detached
    bool was_front = false;
    bool was_back = false;
    int segment = -1;   // arrived
    int side = -1;      // arrived: trap whose edge the ion waits at
};

std::string describe(const ScheduleEvent& ev, int index) {
    std::ostringstream out;
    out << "event " << index << " (" << to_string(ev.kind) << " q" << ev.q0;
    if (ev.q1 >= 0) out << ",q" << ev.q1;
    out << " @" << ev.resource << " t=" << ev.start_us << ")";
    return out.str();
}

} // namespace

std::vector<std::string> validate_schedule(const Schedule& schedule, const Circuit& circuit,
                                           const Topology& topology) {
    std::vector<std::string> violations;
    const auto complain = [&](const std::string& msg) { violations.push_back(msg); };

    Placement placement;
    placement.positions = schedule.initial_positions;
    for (const std::string& v : validate(placement, topology)) complain("placement: " + v);
    if (placement.n_qubits() != circuit.n_qubits)
        complain("placement: qubit count differs from circuit");
    if (!violations.empty()) return violations;

    const int n_events = static_cast<int>(schedule.events.size());
    std::vector<int> order(n_events);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
        return schedule.events[i].start_us < schedule.events[j].start_us;
    });

    // Resource exclusivity: per trap / segment / ion, intervals sorted by
    // start must not overlap.
    std::map<std::pair<char, int>, std::vector<std::pair<double, double>>> busy;
    for (int i : order) {
        const ScheduleEvent& ev = schedule.events[i];
        const char cls = ev.kind == EventKind::hop ? 's' : 't';
        busy[{cls, ev.resource}].emplace_back(ev.start_us, ev.end_us());
        busy[{'i', ev.q0}].emplace_back(ev.start_us, ev.end_us());
        if (ev.q1 >= 0) busy[{'i', ev.q1}].emplace_back(ev.start_us, ev.end_us());
    }
    for (const auto& [key, intervals] : busy) {
        for (std::size_t i = 1; i < intervals.size(); ++i)
            if (intervals[i].first < intervals[i - 1].second - kTimeEps) {
                const char* what = key.first == 'i' ? "ion" : key.first == 's' ? "segment" : "trap";
                complain(std::string("resource overlap: ") + what + " " +
                         std::to_string(key.second));
                break;
            }
    }

    // Positional replay.
    std::vector<std::vector<int>> chains(topology.n_traps);
    std::vector<IonLoc> loc(circuit.n_qubits);
    for (int q = 0; q < circuit.n_qubits; ++q) {
        const auto [trap, pos] = placement.positions[q];
        if (static_cast<int>(chains[trap].size()) <= pos) chains[trap].resize(pos + 1, -1);
        chains[trap][pos] = q;
        loc[q].trap = trap;
    }

    std::vector<std::vector<int>> gate_partners(circuit.n_qubits); // event time order
    std::map<std::pair<int, int>, int> gate_pairs_seen;

    const auto position_in = [&](int trap, int q) {
        const auto& c = chains[trap];
        const auto it = std::find(c.begin(), c.end(), q);
        return it == c.end() ? -1 : static_cast<int>(it - c.begin());
    };

    for (int i : order) {
        const ScheduleEvent& ev = schedule.events[i];
        const bool trap_event = ev.kind != EventKind::hop;
        if (ev.resource < 0 ||
            ev.resource >= (trap_event ? topology.n_traps : topology.n_segments())) {
            complain(describe(ev, i) + ": resource out of range");
            continue;
        }
        if (ev.q0 < 0 || ev.q0 >= circuit.n_qubits ||
            (ev.q1 >= circuit.n_qubits) ||
            (ev.q1 < 0 && (ev.kind == EventKind::gate || ev.kind == EventKind::swap))) {
            complain(describe(ev, i) + ": bad operands");
            continue;
        }
        switch (ev.kind) {
        case EventKind::gate: {
            const int pa = position_in(ev.resource, ev.q0);
            const int pb = position_in(ev.resource, ev.q1);
            if (pa == -1 || pb == -1) {
                complain(describe(ev, i) + ": gate qubits not co-located in trap");
                break;
            }
            gate_partners[ev.q0].push_back(ev.q1);
            gate_partners[ev.q1].push_back(ev.q0);
            ++gate_pairs_seen[std::minmax(ev.q0, ev.q1)];
            break;
        }
        case EventKind::swap: {
            const int pa = position_in(ev.resource, ev.q0);
            const int pb = position_in(ev.resource, ev.q1);
            if (pa == -1 || pb == -1 || std::abs(pa - pb) != 1) {
                complain(describe(ev, i) + ": swap operands not adjacent in trap");
                break;
            }
            std::swap(chains[ev.resource][pa], chains[ev.resource][pb]);
            break;
        }
        case EventKind::split: {
            const int pos = position_in(ev.resource, ev.q0);
            if (pos == -1) {
                complain(describe(ev, i) + ": split of ion not in trap");
                break;
            }
            const int len = static_cast<int>(chains[ev.resource].size());
            if (pos != 0 && pos != len - 1) {
                complain(describe(ev, i) + ": split from chain interior");
                break;
            }
            IonLoc& l = loc[ev.q0];
            l.tag = IonLoc::Tag::detached;
            l.trap = ev.resource;
            l.was_front = pos == 0;
            l.was_back = pos == len - 1;
            chains[ev.resource].erase(chains[ev.resource].begin() + pos);
            break;
        }
        case EventKind::hop: {
            IonLoc& l = loc[ev.q0];
            if (l.tag != IonLoc::Tag::detached) {
                complain(describe(ev, i) + ": hop without preceding split");
                break;
            }
            const int seg = ev.resource;
            const bool from_left_trap = seg == l.trap;      // departing rightward
            const bool from_right_trap = seg == l.trap - 1; // departing leftward
            if (!from_left_trap && !from_right_trap) {
                complain(describe(ev, i) + ": hop on segment not adjacent to split trap");
                break;
            }
            if ((from_left_trap && !l.was_back) || (from_right_trap && !l.was_front)) {
                complain(describe(ev, i) + ": split edge does not face the hop segment");
                break;
            }
            l.tag = IonLoc::Tag::arrived;
            l.segment = seg;
            l.side = from_left_trap ? seg + 1 : seg;
            break;
        }
        case EventKind::merge: {
            IonLoc& l = loc[ev.q0];
            if (l.tag != IonLoc::Tag::arrived || l.side != ev.resource) {
                complain(describe(ev, i) + ": merge without ion waiting at this trap");
                break;
            }
            if (static_cast<int>(chains[ev.resource].size()) >= topology.capacity) {
                complain(describe(ev, i) + ": capacity exceeded");
                break;
            }
            if (l.segment == ev.resource - 1)
                chains[ev.resource].insert(chains[ev.resource].begin(), ev.q0);
            else
                chains[ev.resource].push_back(ev.q0);
            l = IonLoc{};
            l.trap = ev.resource;
            break;
        }
        }
        if (static_cast<int>(violations.size()) > 50) {
            complain("... further checks skipped");
            return violations;
        }
    }

    for (int q = 0; q < circuit.n_qubits; ++q)
        if (loc[q].tag != IonLoc::Tag::in_chain)
            complain("ion " + std::to_string(q) + " left in transit");

    // Gate coverage: multiset of pairs matches the circuit.
    std::map<std::pair<int, int>, int> expected;
    for (const Gate& g : circuit.gates) ++expected[std::minmax(g.qubit_a, g.qubit_b)];
    if (expected != gate_pairs_seen) complain("gate coverage: event gate multiset != circuit");

    // Per-qubit order: each qubit sees its partners in program order.
    std::vector<std::vector<int>> program_partners(circuit.n_qubits);
    for (const Gate& g : circuit.gates) {
        program_partners[g.qubit_a].push_back(g.qubit_b);
        program_partners[g.qubit_b].push_back(g.qubit_a);
    }
    for (int q = 0; q < circuit.n_qubits; ++q)
        if (program_partners[q] != gate_partners[q]) {
            complain("per-qubit gate order violated at qubit " + std::to_string(q));
            break;
        }

    return violations;
}

} // namespace qccd

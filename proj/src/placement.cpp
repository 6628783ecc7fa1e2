#include "qccdlab/compiler.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qccd {

std::vector<std::string> validate(const Placement& placement, const Topology& topology) {
    std::vector<std::string> violations;
    std::map<std::pair<int, int>, int> used;
    std::vector<std::vector<int>> per_trap(topology.n_traps);
    for (int q = 0; q < placement.n_qubits(); ++q) {
        const auto [trap, pos] = placement.positions[q];
        if (trap < 0 || trap >= topology.n_traps) {
            violations.push_back("qubit " + std::to_string(q) + ": trap out of range");
            continue;
        }
        if (pos < 0) violations.push_back("qubit " + std::to_string(q) + ": negative position");
        auto [it, fresh] = used.emplace(std::make_pair(trap, pos), q);
        if (!fresh)
            violations.push_back("slot collision: qubits " + std::to_string(it->second) + " and " +
                                 std::to_string(q));
        per_trap[trap].push_back(pos);
    }
    for (int t = 0; t < topology.n_traps; ++t) {
        auto& ps = per_trap[t];
        if (static_cast<int>(ps.size()) > topology.capacity - 1)
            violations.push_back("trap " + std::to_string(t) + ": no free slot reserved");
        std::sort(ps.begin(), ps.end());
        for (int i = 0; i < static_cast<int>(ps.size()); ++i)
            if (ps[i] != i) {
                violations.push_back("trap " + std::to_string(t) + ": chain positions not dense");
                break;
            }
    }
    return violations;
}

Placement sta_placement(const Circuit& circuit, const Topology& topology) {
    require_valid(circuit);
    const int reserve = topology.capacity - 1;
    if (circuit.n_qubits > topology.n_traps * reserve)
        throw std::invalid_argument("sta_placement: insufficient slots for qubit count");

    const Layering layering = asap_layering(circuit);
    std::vector<int> layer_of(circuit.gates.size(), 0);
    for (int l = 0; l < layering.depth(); ++l)
        for (int gi : layering.layers[l]) layer_of[gi] = l;

    std::map<std::pair<int, int>, double> weight;
    for (const Gate& g : circuit.gates) {
        const auto key = std::minmax(g.qubit_a, g.qubit_b);
        weight[{key.first, key.second}] += 1.0 / (1.0 + layer_of[g.program_index]);
    }
    struct Edge {
        double w;
        int a, b;
    };
    std::vector<Edge> edges;
    edges.reserve(weight.size());
    for (const auto& [pair, w] : weight) edges.push_back({w, pair.first, pair.second});
    std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) {
        if (x.w != y.w) return x.w > y.w;
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    });

    std::vector<int> trap_of(circuit.n_qubits, -1);
    std::vector<int> load(topology.n_traps, 0);
    const auto first_trap_with = [&](int slots) {
        for (int t = 0; t < topology.n_traps; ++t)
            if (reserve - load[t] >= slots) return t;
        return -1;
    };
    const auto place = [&](int q, int t) {
        trap_of[q] = t;
        ++load[t];
    };
    for (const Edge& e : edges) {
        const bool pa = trap_of[e.a] != -1;
        const bool pb = trap_of[e.b] != -1;
        if (pa && pb) continue;
        if (!pa && !pb) {
            const int t = first_trap_with(2);
            if (t != -1) {
                place(e.a, t);
                place(e.b, t);
            } else {
                place(e.a, first_trap_with(1));
                place(e.b, first_trap_with(1));
            }
        } else {
            const int placed = pa ? e.a : e.b;
            const int loose = pa ? e.b : e.a;
            const int home = trap_of[placed];
            place(loose, load[home] < reserve ? home : first_trap_with(1));
        }
    }
    for (int q = 0; q < circuit.n_qubits; ++q)
        if (trap_of[q] == -1) place(q, first_trap_with(1));

    // Chain order by directional traffic: qubits whose interaction weight
    // leans toward higher traps sit nearer the right edge.
    std::vector<double> lean(circuit.n_qubits, 0.0);
    for (const auto& [pair, w] : weight) {
        const auto [a, b] = pair;
        if (trap_of[a] != trap_of[b]) {
            lean[a] += trap_of[b] > trap_of[a] ? w : -w;
            lean[b] += trap_of[a] > trap_of[b] ? w : -w;
        }
    }
    Placement out;
    out.positions.assign(circuit.n_qubits, {-1, -1});
    for (int t = 0; t < topology.n_traps; ++t) {
        std::vector<int> members;
        for (int q = 0; q < circuit.n_qubits; ++q)
            if (trap_of[q] == t) members.push_back(q);
        std::sort(members.begin(), members.end(), [&](int x, int y) {
            if (lean[x] != lean[y]) return lean[x] < lean[y];
            return x < y;
        });
        for (int pos = 0; pos < static_cast<int>(members.size()); ++pos)
            out.positions[members[pos]] = {t, pos};
    }
    return out;
}

Placement paired_placement(const Circuit& circuit, const Topology& topology) {
    require_valid(circuit);
    if (circuit.n_qubits % 2 != 0)
        throw std::invalid_argument("paired_placement: first layer is not a perfect matching");
    const Layering layering = asap_layering(circuit);
    if (layering.depth() == 0 ||
        static_cast<int>(layering.layers[0].size()) * 2 != circuit.n_qubits)
        throw std::invalid_argument("paired_placement: first layer is not a perfect matching");
    const int pairs = circuit.n_qubits / 2;
    if (pairs > topology.n_traps)
        throw std::invalid_argument("paired_placement: too few traps for first-layer pairs");
    if (topology.capacity < 3)
        throw std::invalid_argument("paired_placement: capacity must leave one free slot");

    Placement out;
    out.positions.assign(circuit.n_qubits, {-1, -1});
    for (int i = 0; i < pairs; ++i) {
        const Gate& g = circuit.gates[layering.layers[0][i]];
        const auto [lo, hi] = std::minmax(g.qubit_a, g.qubit_b);
        out.positions[lo] = {i, 0};
        out.positions[hi] = {i, 1};
    }
    return out;
}

MachineState::MachineState(const Placement& placement, const Topology& topology) : topo_(topology) {
    auto violations = validate(placement, topology);
    if (!violations.empty())
        throw std::invalid_argument("invalid placement: " + violations.front());
    chains_.assign(topology.n_traps, {});
    where_.assign(placement.n_qubits(), {-1, -1});
    std::vector<std::vector<int>> by_trap(topology.n_traps);
    for (int q = 0; q < placement.n_qubits(); ++q) {
        const auto [trap, pos] = placement.positions[q];
        if (static_cast<int>(by_trap[trap].size()) <= pos) by_trap[trap].resize(pos + 1, -1);
        by_trap[trap][pos] = q;
    }
    for (int t = 0; t < topology.n_traps; ++t) {
        chains_[t] = by_trap[t];
        reindex(t);
    }
}

bool MachineState::in_trap(int qubit) const { return where_[qubit].first >= 0; }

int MachineState::trap_of(int qubit) const {
    return where_[qubit].first >= 0 ? where_[qubit].first : -1;
}

int MachineState::position_of(int qubit) const {
    return where_[qubit].first >= 0 ? where_[qubit].second : -1;
}

void MachineState::reindex(int trap) {
    for (int pos = 0; pos < static_cast<int>(chains_[trap].size()); ++pos)
        where_[chains_[trap][pos]] = {trap, pos};
}

void MachineState::apply_swap(int qubit, int neighbour) {
    const auto [t1, p1] = where_[qubit];
    const auto [t2, p2] = where_[neighbour];
    if (t1 < 0 || t1 != t2 || std::abs(p1 - p2) != 1)
        throw std::logic_error("apply_swap: ions not adjacent in one trap");
    std::swap(chains_[t1][p1], chains_[t1][p2]);
    std::swap(where_[qubit], where_[neighbour]);
}

void MachineState::apply_split(int qubit, int seg) {
    const auto [trap, pos] = where_[qubit];
    if (trap < 0) throw std::logic_error("apply_split: ion not in a trap");
    if (seg != trap && seg != trap - 1) throw std::logic_error("apply_split: segment not adjacent");
    const bool right = seg == trap;
    const int edge = right ? static_cast<int>(chains_[trap].size()) - 1 : 0;
    if (pos != edge) throw std::logic_error("apply_split: ion not at the departure edge");
    chains_[trap].erase(chains_[trap].begin() + pos);
    reindex(trap);
    where_[qubit] = {-1 - seg, trap};
}

void MachineState::apply_hop(int qubit, int seg) {
    const auto [tag, side] = where_[qubit];
    if (tag != -1 - seg) throw std::logic_error("apply_hop: ion not on this segment");
    where_[qubit] = {-1 - seg, side == seg ? seg + 1 : seg};
}

void MachineState::apply_merge(int qubit, int trap) {
    const auto [tag, side] = where_[qubit];
    if (tag >= 0 || side != trap) throw std::logic_error("apply_merge: ion not at this trap's edge");
    if (occupancy(trap) >= topo_.capacity) throw std::logic_error("apply_merge: trap full");
    const int seg = -1 - tag;
    if (seg == trap - 1)
        chains_[trap].insert(chains_[trap].begin(), qubit); // arriving from the left
    else
        chains_[trap].push_back(qubit); // arriving from the right
    reindex(trap);
}

Timeline::Timeline(const Topology& topology, int n_qubits)
    : trap_free_us(topology.n_traps, 0.0),
      segment_free_us(std::max(0, topology.n_segments()), 0.0),
      ion_free_us(n_qubits, 0.0) {}

double Timeline::start_for(const ScheduleEvent& ev) const {
    double start = floor_us;
    if (ev.kind == EventKind::hop)
        start = std::max(start, segment_free_us[ev.resource]);
    else
        start = std::max(start, trap_free_us[ev.resource]);
    start = std::max(start, ion_free_us[ev.q0]);
    if (ev.q1 >= 0) start = std::max(start, ion_free_us[ev.q1]);
    return start;
}

void Timeline::commit(const ScheduleEvent& ev) {
    const double end = ev.end_us();
    if (ev.kind == EventKind::hop)
        segment_free_us[ev.resource] = end;
    else
        trap_free_us[ev.resource] = end;
    ion_free_us[ev.q0] = end;
    if (ev.q1 >= 0) ion_free_us[ev.q1] = end;
}

} // namespace qccd

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace qccd {

/// A two-qubit gate. Gate semantics (CNOT / CZ / ZZ) are a label only; the
/// cost model treats every two-qubit gate identically.
struct Gate {
    int qubit_a = 0;
    int qubit_b = 0;
    int program_index = 0;
};

/// Ordered two-qubit gate list over n virtual qubits. Program order is the
/// source of truth; every derived quantity is a deterministic function of it.
struct Circuit {
    int n_qubits = 0;
    std::vector<Gate> gates;

    Circuit() = default;
    Circuit(int n, std::vector<std::pair<int, int>> pairs);

    void add_gate(int a, int b);
};

/// ASAP timestep layering: layers[k] holds gate indices, ascending.
struct Layering {
    std::vector<std::vector<int>> layers;

    int depth() const { return static_cast<int>(layers.size()); }
};

/// Movement and parallelism statistics of a circuit (Table-I style).
struct CircuitStats {
    int n_qubits = 0;
    int depth = 0;
    int two_qubit_gate_count = 0;
    double avg_gates_per_ts = 0.0;
    std::vector<int> per_qubit_movements;
    long long total_movements = 0;
    double avg_ion_mov_per_ts = 0.0;
    /// Mean over layers of the percentage of active qubits whose partner
    /// differs from their previous gate's partner; in [0, 100].
    double movement_percentage = 0.0;
};

/// Checks Gate/Circuit invariants. Violations are data, not faults.
std::vector<std::string> validate(const Circuit& circuit);

/// Throws std::invalid_argument listing the first violation if invalid.
void require_valid(const Circuit& circuit);

/// Earliest-possible layering: each gate sits in the first layer allowed by
/// its qubit predecessors; within a layer no two gates share a qubit.
Layering asap_layering(const Circuit& circuit);

/// Per-qubit movement counts M_q: walking each qubit's gates in program
/// order, a gate counts when its partner differs from the previous gate's
/// partner; the first gate is free.
std::vector<int> partner_change_counts(const Circuit& circuit);

CircuitStats stats(const Circuit& circuit);

/// Circuit text format:
///   file    := header gate*
///   header  := "qubits" INT "\n"
///   gate    := "g" INT INT "\n"
/// Blank lines and lines starting with '#' are ignored on input; the writer
/// emits the canonical form (no comments, single spaces, trailing newline).
std::string to_text(const Circuit& circuit);
Circuit from_text(const std::string& text);
Circuit load_circuit(const std::string& path);
void save_circuit(const Circuit& circuit, const std::string& path);

} // namespace qccd

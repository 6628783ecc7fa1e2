#include "qccdlab/circuit.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace qccd {

Circuit::Circuit(int n, std::vector<std::pair<int, int>> pairs) : n_qubits(n) {
    gates.reserve(pairs.size());
    for (const auto& [a, b] : pairs) add_gate(a, b);
}

void Circuit::add_gate(int a, int b) {
    gates.push_back(Gate{a, b, static_cast<int>(gates.size())});
}

std::vector<std::string> validate(const Circuit& circuit) {
    std::vector<std::string> violations;
    if (circuit.n_qubits < 0)
        violations.push_back("negative qubit count");
    std::unordered_set<int> seen;
    for (const Gate& g : circuit.gates) {
        const std::string tag = "gate " + std::to_string(g.program_index);
        if (g.qubit_a == g.qubit_b)
            violations.push_back(tag + ": self-gate (" + std::to_string(g.qubit_a) + ")");
        for (int q : {g.qubit_a, g.qubit_b})
            if (q < 0 || q >= circuit.n_qubits)
                violations.push_back(tag + ": qubit out of range (" + std::to_string(q) + ")");
        if (!seen.insert(g.program_index).second)
            violations.push_back(tag + ": duplicate program_index");
    }
    for (int i = 0; i < static_cast<int>(circuit.gates.size()); ++i)
        if (!seen.count(i)) {
            violations.push_back("program_index values not dense (missing " + std::to_string(i) + ")");
            break;
        }
    return violations;
}

void require_valid(const Circuit& circuit) {
    auto v = validate(circuit);
    if (!v.empty()) throw std::invalid_argument("invalid circuit: " + v.front());
}

Layering asap_layering(const Circuit& circuit) {
    require_valid(circuit);
    std::vector<int> next_free(circuit.n_qubits, 0);
    Layering out;
    for (const Gate& g : circuit.gates) {
        const int layer = std::max(next_free[g.qubit_a], next_free[g.qubit_b]);
        if (layer >= static_cast<int>(out.layers.size())) out.layers.resize(layer + 1);
        out.layers[layer].push_back(g.program_index);
        next_free[g.qubit_a] = layer + 1;
        next_free[g.qubit_b] = layer + 1;
    }
    return out;
}

std::vector<int> partner_change_counts(const Circuit& circuit) {
    require_valid(circuit);
    std::vector<int> counts(circuit.n_qubits, 0);
    std::vector<int> last_partner(circuit.n_qubits, -1);
    for (const Gate& g : circuit.gates) {
        if (last_partner[g.qubit_a] != -1 && last_partner[g.qubit_a] != g.qubit_b)
            ++counts[g.qubit_a];
        if (last_partner[g.qubit_b] != -1 && last_partner[g.qubit_b] != g.qubit_a)
            ++counts[g.qubit_b];
        last_partner[g.qubit_a] = g.qubit_b;
        last_partner[g.qubit_b] = g.qubit_a;
    }
    return counts;
}

CircuitStats stats(const Circuit& circuit) {
    const Layering layering = asap_layering(circuit);
    CircuitStats s;
    s.n_qubits = circuit.n_qubits;
    s.depth = layering.depth();
    s.two_qubit_gate_count = static_cast<int>(circuit.gates.size());
    s.per_qubit_movements = partner_change_counts(circuit);
    for (int m : s.per_qubit_movements) s.total_movements += m;
    if (s.depth > 0) {
        s.avg_gates_per_ts = static_cast<double>(s.two_qubit_gate_count) / s.depth;
        s.avg_ion_mov_per_ts = static_cast<double>(s.total_movements) / s.depth;
    }

    // Mean over layers of the changed-partner fraction among active qubits;
    // a qubit's first gate never counts as a change.
    std::vector<int> last_partner(circuit.n_qubits, -1);
    double fraction_sum = 0.0;
    for (const auto& layer : layering.layers) {
        int active = 0;
        int changed = 0;
        for (int gi : layer) {
            const Gate& g = circuit.gates[gi];
            active += 2;
            if (last_partner[g.qubit_a] != -1 && last_partner[g.qubit_a] != g.qubit_b) ++changed;
            if (last_partner[g.qubit_b] != -1 && last_partner[g.qubit_b] != g.qubit_a) ++changed;
        }
        for (int gi : layer) {
            const Gate& g = circuit.gates[gi];
            last_partner[g.qubit_a] = g.qubit_b;
            last_partner[g.qubit_b] = g.qubit_a;
        }
        if (active > 0) fraction_sum += static_cast<double>(changed) / active;
    }
    if (s.depth > 0) s.movement_percentage = 100.0 * fraction_sum / s.depth;
    return s;
}

std::string to_text(const Circuit& circuit) {
    std::ostringstream out;
    out << "qubits " << circuit.n_qubits << "\n";
    for (const Gate& g : circuit.gates) out << "g " << g.qubit_a << " " << g.qubit_b << "\n";
    return out.str();
}

Circuit from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    Circuit circuit;
    bool have_header = false;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        std::string tok;
        ls >> tok;
        if (!have_header) {
            int n = 0;
            if (tok != "qubits" || !(ls >> n) || n < 0)
                throw std::invalid_argument("circuit text: expected 'qubits N' header at line " +
                                            std::to_string(line_no));
            circuit.n_qubits = n;
            have_header = true;
        } else {
            int a = 0;
            int b = 0;
            if (tok != "g" || !(ls >> a >> b))
                throw std::invalid_argument("circuit text: expected 'g A B' at line " +
                                            std::to_string(line_no));
            circuit.add_gate(a, b);
        }
        std::string extra;
        if (ls >> extra)
            throw std::invalid_argument("circuit text: trailing tokens at line " + std::to_string(line_no));
    }
    if (!have_header) throw std::invalid_argument("circuit text: missing 'qubits N' header");
    require_valid(circuit);
    return circuit;
}

Circuit load_circuit(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open circuit file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_text(buf.str());
}

void save_circuit(const Circuit& circuit, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write circuit file: " + path);
    out << to_text(circuit);
}

} // namespace qccd

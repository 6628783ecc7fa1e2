#include "qccdlab/generators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qccd {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Changed-qubit counts realizable by one pairing transition: rotating k >= 2
// pair slots changes exactly 2k partners; a single slot cannot change alone.
int nearest_achievable(double deficit, int n_slots) {
    int best = 0;
    double best_dist = std::abs(deficit);
    for (int k = 2; k <= n_slots; ++k) {
        const int c = 2 * k;
        const double dist = std::abs(c - deficit);
        if (dist < best_dist - 1e-9 || (std::abs(dist - best_dist) <= 1e-9 && c > best)) {
            best = c;
            best_dist = dist;
        }
    }
    return best;
}

} // namespace

Circuit random_parallel(const BenchSpec& spec) {
    if (spec.n_qubits < 2 || spec.n_qubits % 2 != 0)
        throw std::invalid_argument("random_parallel: n_qubits must be even and >= 2");
    if (spec.movement_pct < 0.0 || spec.movement_pct > 100.0)
        throw std::invalid_argument("random_parallel: movement_pct must be in [0, 100]");

    const int n = spec.n_qubits;
    const int slots = n / 2;
    std::vector<int> first(slots);
    std::vector<int> second(slots);
    for (int i = 0; i < slots; ++i) {
        first[i] = 2 * i;
        second[i] = 2 * i + 1;
    }

    Circuit circuit;
    circuit.n_qubits = n;
    int window = static_cast<int>(splitmix64(spec.seed) % static_cast<std::uint64_t>(slots));
    double achieved = 0.0;
    for (int step = 0; step < n; ++step) {
        if (step > 0) {
            const double target = spec.movement_pct / 100.0 * n * step;
            const int changed = nearest_achievable(target - achieved, slots);
            const int k = changed / 2;
            if (k >= 2) {
                // Cyclically rotate the second members of slots [window, window+k).
                std::vector<int> idx(k);
                for (int i = 0; i < k; ++i) idx[i] = (window + i) % slots;
                const int carry = second[idx[k - 1]];
                for (int i = k - 1; i > 0; --i) second[idx[i]] = second[idx[i - 1]];
                second[idx[0]] = carry;
                achieved += changed;
            }
            window = (window + 1) % slots;
        }
        for (int i = 0; i < slots; ++i) circuit.add_gate(first[i], second[i]);
    }
    return circuit;
}

Circuit qft(int n) {
    if (n < 2) throw std::invalid_argument("qft: n must be >= 2");
    Circuit circuit;
    circuit.n_qubits = n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) circuit.add_gate(i, j);
    return circuit;
}

Circuit qaoa_complete(int n, bool round_robin) {
    if (n < 2) throw std::invalid_argument("qaoa_complete: n must be >= 2");
    if (!round_robin) return qft(n);

    // Circle-method 1-factorization: n-1 rounds of perfect matchings (even n).
    if (n % 2 != 0)
        throw std::invalid_argument("qaoa_complete: round-robin order requires even n");
    Circuit circuit;
    circuit.n_qubits = n;
    std::vector<int> ring(n - 1);
    for (int i = 0; i < n - 1; ++i) ring[i] = i + 1;
    for (int round = 0; round < n - 1; ++round) {
        circuit.add_gate(std::min(0, ring[0]), std::max(0, ring[0]));
        for (int i = 1; i < n / 2; ++i) {
            const int a = ring[i];
            const int b = ring[n - 1 - i];
            circuit.add_gate(std::min(a, b), std::max(a, b));
        }
        std::rotate(ring.begin(), ring.end() - 1, ring.end());
    }
    return circuit;
}

Circuit draper(int n_total) {
    if (n_total < 4 || n_total % 2 != 0)
        throw std::invalid_argument("draper: n_total must be even and >= 4");
    const int m = n_total / 2;
    const auto A = [](int i) { return i; };
    const auto B = [m](int i) { return m + i; };

    Circuit circuit;
    circuit.n_qubits = n_total;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) circuit.add_gate(B(i), B(j));
    for (int j = m - 1; j >= 0; --j)
        for (int i = j; i >= 0; --i) circuit.add_gate(A(i), B(j));
    // Inverse QFT: same two-qubit skeleton, emitted in forward enumeration.
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) circuit.add_gate(B(i), B(j));
    return circuit;
}

namespace {

// CCX(c, b, a) with the carry as first control; two-qubit skeleton of the
// textbook 6-CNOT decomposition.
void emit_ccx(Circuit& circuit, int c, int b, int a) {
    circuit.add_gate(c, a);
    circuit.add_gate(b, a);
    circuit.add_gate(c, a);
    circuit.add_gate(b, a);
    circuit.add_gate(c, b);
    circuit.add_gate(c, b);
}

} // namespace

Circuit cuccaro(int n_total) {
    if (n_total < 4 || n_total % 2 != 0)
        throw std::invalid_argument("cuccaro: n_total must be 2m + 2 with m >= 1");
    const int m = (n_total - 2) / 2;
    const int carry_in = 0;
    const int carry_out = 2 * m + 1;
    const auto a = [](int i) { return 1 + 2 * i; };
    const auto b = [](int i) { return 2 + 2 * i; };

    Circuit circuit;
    circuit.n_qubits = n_total;
    const auto maj = [&](int c, int y, int t) {
        circuit.add_gate(t, c);
        circuit.add_gate(t, y);
        emit_ccx(circuit, c, y, t);
    };
    const auto uma = [&](int c, int y, int t) {
        emit_ccx(circuit, c, y, t);
        circuit.add_gate(t, c);
        circuit.add_gate(c, y);
    };

    for (int i = 0; i < m; ++i) maj(i == 0 ? carry_in : a(i - 1), b(i), a(i));
    circuit.add_gate(a(m - 1), carry_out);
    for (int i = m - 1; i >= 0; --i) uma(i == 0 ? carry_in : a(i - 1), b(i), a(i));
    return circuit;
}

} // namespace qccd

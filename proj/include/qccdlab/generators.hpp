#pragma once

#include "qccdlab/circuit.hpp"

#include <cstdint>

namespace qccd {

/// Worst-case random benchmark parameters. Depth is fixed to n_qubits.
struct BenchSpec {
    int n_qubits = 0;             // even, >= 2
    double movement_pct = 0.0;    // in [0, 100]
    std::uint64_t seed = 0;
};

/// Fully parallel random benchmark: every layer is a perfect matching on the
/// n qubits (n/2 gates per layer, n layers). Pairings start as (2i, 2i+1);
/// between steps a window of pair slots rotates its second members so the
/// measured partner-change rate tracks movement_pct (0 keeps pairings
/// constant, 100 changes every partner every step).
Circuit random_parallel(const BenchSpec& spec);

/// Standard QFT order: for target i ascending, controls j > i ascending.
/// G = n(n-1)/2, ASAP depth 2n-3.
Circuit qft(int n);

/// One ZZ gate per edge of the complete graph. Default emission matches
/// qft(n) gate-for-gate so both benchmarks share identical statistics;
/// round_robin instead emits n-1 perfect matchings (circle method, even n),
/// which is depth-optimal but not the default.
Circuit qaoa_complete(int n, bool round_robin = false);

/// Draper adder on two n_total/2-bit registers: QFT on B, the controlled-
/// phase ladder (A_i, B_j) for i <= j emitted register-B-target-major, then
/// the inverse QFT on B (same two-qubit skeleton, forward enumeration).
/// G = m(m-1) + m(m+1)/2 with m = n_total/2.
Circuit draper(int n_total);

/// Cuccaro ripple-carry adder with carry-in and carry-out: n_total = 2m + 2.
/// Each Toffoli uses a fixed 6-CNOT template: CCX(c,b,a) emits the pair
/// skeleton (c,a),(b,a),(c,a),(b,a),(c,b),(c,b). MAJ(c,b,a) is CX(a,c),
/// CX(a,b), CCX(c,b,a); UMA(c,b,a) is CCX(c,b,a), CX(a,c), CX(c,b).
/// G = 16m + 1.
Circuit cuccaro(int n_total);

} // namespace qccd

#pragma once

#include "qccdlab/circuit.hpp"
#include "qccdlab/fidelity.hpp"
#include "qccdlab/machine.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qccd {

enum class Benchmark { random, qft, qaoa, draper, cuccaro };

const char* to_string(Benchmark b);
Benchmark benchmark_from_string(const std::string& name);

Circuit make_benchmark(Benchmark kind, int n_qubits, double movement_pct = 0.0,
                       std::uint64_t seed = 0);

/// Grid description for the experiment harness. Every grid must be
/// non-empty; trap counts derive capacity as ceil(n / n_traps) + 1 so the
/// slot total stays consistent with the qubit count at every point.
struct SweepSpec {
    Benchmark benchmark = Benchmark::random;
    std::vector<int> qubit_counts;
    std::vector<double> movement_grid;
    std::vector<double> t2_grid_ms;      // milliseconds
    std::vector<int> trap_grid;
    std::vector<double> swap_ratio_grid;
    std::vector<std::uint64_t> seeds;
    std::string router = "naive";        // parallel arm of sweep-movement
    std::string placement = "paired";
    int lookahead = 20;
    DeviceParams params;                 // base; grids override T2 / r
};

std::vector<std::string> validate(const SweepSpec& spec);

/// Full pipeline for one configuration: placement -> route -> replay
/// validation -> fidelity. Throws on any violation.
FidelityReport run_one(const Circuit& circuit, const Topology& topology,
                       const DeviceParams& params, const std::string& router,
                       const std::string& placement, int lookahead = 20);

/// One CSV row of a sweep. The first ten columns follow the documented
/// order: n_qubits,p,t2_ms,r,n_traps,fidelity,coherence,t_us,swap_count,
/// hop_count; seed/router/placement/benchmark/capacity/delta columns follow.
struct SweepRow {
    int n_qubits = 0;
    double movement_pct = 0.0;
    double t2_ms = 0.0;
    double swap_ratio = 0.0;
    int n_traps = 0;
    int capacity = 0;
    std::uint64_t seed = 0;
    Benchmark benchmark = Benchmark::random;
    FidelityReport report;
};

struct SweepResult {
    std::vector<SweepRow> rows;

    std::string to_csv() const;
    std::string to_json() const;
};

/// Worst-case movement sweep (Fig. 1 / Fig. 3): for each (n, seed, p) the
/// random_parallel benchmark runs on n/2 traps of capacity 3 with the
/// parallel router, and once per (n, seed) configuration the single-trap
/// sequential baseline row (n_traps = 1) is emitted alongside; T2 and r vary
/// only the metric, not the schedule.
SweepResult sweep_movement(const SweepSpec& spec);

/// Trap-count sweep summary line (Table II): Opt.Traps maximizes fidelity
/// (ties toward fewer traps), Max.Traps is the largest trap count still
/// beating the sequential baseline (0 when none does), delta_f_pct is the
/// improvement at the optimum.
struct TrapSummary {
    Benchmark benchmark = Benchmark::qft;
    int n_qubits = 0;
    int opt_traps = 0;
    int max_traps = 0;
    double delta_f_pct = 0.0;
    double f_opt = 0.0;
    double f_seq = 0.0;
};

struct TrapSweepResult {
    std::vector<SweepRow> rows;
    std::vector<TrapSummary> summaries;

    std::string rows_csv() const;
    std::string summary_csv() const;
    std::string to_json() const;
};

/// Structured-algorithm sweep (Fig. 4 / Table II): for each benchmark and
/// qubit count, one run per trap count with capacity ceil(n/traps) + 1; the
/// trap grid defaults to 1..n/2 when the spec's grid is empty. Router and
/// placement default to greedy + sta.
TrapSweepResult sweep_traps(const SweepSpec& spec);

/// Table-I style row for one algorithm.
struct BenchTableRow {
    Benchmark benchmark = Benchmark::qft;
    int depth = 0;
    int gates = 0;
    double avg_gates_per_ts = 0.0;
    double avg_shuttle_per_ts = 0.0;
};

/// Rows for CA, DA, QAOA, QFT at the given qubit count (Table I order).
std::vector<BenchTableRow> bench_table(int n_qubits);
std::string bench_table_csv(const std::vector<BenchTableRow>& rows);
std::string bench_table_text(const std::vector<BenchTableRow>& rows);

} // namespace qccd

#include "qccdlab/sweep.hpp"

#include "qccdlab/compiler.hpp"
#include "qccdlab/generators.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace qccd {
namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

Schedule compile_with(const Circuit& circuit, const Topology& topology,
                      const DeviceParams& params, const std::string& router,
                      const std::string& placement_name, int lookahead) {
    Placement placement;
    if (placement_name == "sta")
        placement = sta_placement(circuit, topology);
    else if (placement_name == "paired")
        placement = paired_placement(circuit, topology);
    else
        throw std::invalid_argument("unknown placement: " + placement_name);

    RouteOptions options;
    options.lookahead_window = lookahead;
    Schedule schedule;
    if (router == "naive")
        schedule = route_naive_parallel(circuit, placement, topology, params, options);
    else if (router == "greedy")
        schedule = route_greedy_minmove(circuit, placement, topology, params, options);
    else
        throw std::invalid_argument("unknown router: " + router);
    schedule.placement = placement_name;
    return schedule;
}

int baseline_capacity(int n_qubits) { return n_qubits + 1; }

nlohmann::json row_json(const SweepRow& row) {
    return nlohmann::json{{"benchmark", to_string(row.benchmark)},
                          {"n_qubits", row.n_qubits},
                          {"p", row.movement_pct},
                          {"t2_ms", row.t2_ms},
                          {"r", row.swap_ratio},
                          {"n_traps", row.n_traps},
                          {"capacity", row.capacity},
                          {"seed", row.seed},
                          {"fidelity", row.report.fidelity},
                          {"coherence", row.report.coherence},
                          {"raw_product", row.report.raw_product},
                          {"t_us", row.report.makespan_us},
                          {"gates", row.report.gate_count},
                          {"swap_count", row.report.swap_count},
                          {"split_count", row.report.split_count},
                          {"hop_count", row.report.hop_count},
                          {"merge_count", row.report.merge_count},
                          {"router", row.report.router},
                          {"placement", row.report.placement}};
}

const char* kRowHeader =
    "n_qubits,p,t2_ms,r,n_traps,fidelity,coherence,t_us,swap_count,hop_count,"
    "seed,router,placement,benchmark,capacity,gates,split_count,merge_count,raw_product";

void append_row_csv(std::ostringstream& out, const SweepRow& row) {
    out << row.n_qubits << ',' << fmt(row.movement_pct) << ',' << fmt(row.t2_ms) << ','
        << fmt(row.swap_ratio) << ',' << row.n_traps << ',' << fmt(row.report.fidelity) << ','
        << fmt(row.report.coherence) << ',' << fmt(row.report.makespan_us) << ','
        << row.report.swap_count << ',' << row.report.hop_count << ',' << row.seed << ','
        << row.report.router << ',' << row.report.placement << ',' << to_string(row.benchmark)
        << ',' << row.capacity << ',' << row.report.gate_count << ',' << row.report.split_count
        << ',' << row.report.merge_count << ',' << fmt(row.report.raw_product) << '\n';
}

} // namespace

const char* to_string(Benchmark b) {
    switch (b) {
    case Benchmark::random: return "random";
    case Benchmark::qft: return "qft";
    case Benchmark::qaoa: return "qaoa";
    case Benchmark::draper: return "draper";
    case Benchmark::cuccaro: return "cuccaro";
    }
    return "?";
}

Benchmark benchmark_from_string(const std::string& name) {
    if (name == "random") return Benchmark::random;
    if (name == "qft") return Benchmark::qft;
    if (name == "qaoa") return Benchmark::qaoa;
    if (name == "draper") return Benchmark::draper;
    if (name == "cuccaro") return Benchmark::cuccaro;
    throw std::invalid_argument("unknown benchmark: " + name);
}

Circuit make_benchmark(Benchmark kind, int n_qubits, double movement_pct, std::uint64_t seed) {
    switch (kind) {
    case Benchmark::random: return random_parallel({n_qubits, movement_pct, seed});
    case Benchmark::qft: return qft(n_qubits);
    case Benchmark::qaoa: return qaoa_complete(n_qubits);
    case Benchmark::draper: return draper(n_qubits);
    case Benchmark::cuccaro: return cuccaro(n_qubits);
    }
    throw std::invalid_argument("unknown benchmark kind");
}

std::vector<std::string> validate(const SweepSpec& spec) {
    std::vector<std::string> violations;
    if (spec.qubit_counts.empty()) violations.push_back("qubit_counts grid is empty");
    if (spec.movement_grid.empty()) violations.push_back("movement grid is empty");
    if (spec.t2_grid_ms.empty()) violations.push_back("T2 grid is empty");
    if (spec.swap_ratio_grid.empty()) violations.push_back("swap ratio grid is empty");
    if (spec.seeds.empty()) violations.push_back("seed list is empty");
    for (double p : spec.movement_grid)
        if (p < 0.0 || p > 100.0) violations.push_back("movement percentage outside [0, 100]");
    for (double t2 : spec.t2_grid_ms)
        if (t2 <= 0.0) violations.push_back("non-positive T2");
    for (double r : spec.swap_ratio_grid)
        if (r < 1.0) violations.push_back("swap ratio below 1");
    for (int n : spec.qubit_counts) {
        if (n < 2 || n % 2 != 0) violations.push_back("qubit counts must be even and >= 2");
        for (int traps : spec.trap_grid) {
            if (traps < 1) {
                violations.push_back("trap count below 1");
                continue;
            }
            // Slot consistency: capacity ceil(n/traps) + 1 must fit the count.
            const int cap = (n + traps - 1) / traps + 1;
            if (traps * (cap - 1) < n)
                violations.push_back("trap grid point cannot hold all qubits");
        }
    }
    return violations;
}

FidelityReport run_one(const Circuit& circuit, const Topology& topology,
                       const DeviceParams& params, const std::string& router,
                       const std::string& placement, int lookahead) {
    require_valid(circuit);
    const Schedule schedule = compile_with(circuit, topology, params, router, placement, lookahead);
    const auto violations = validate_schedule(schedule, circuit, topology);
    if (!violations.empty())
        throw std::runtime_error("run_one: schedule validation failed: " + violations.front());
    return schedule_fidelity(schedule, circuit, topology, params);
}

SweepResult sweep_movement(const SweepSpec& spec) {
    {
        const auto violations = validate(spec);
        if (!violations.empty())
            throw std::invalid_argument("sweep_movement: " + violations.front());
    }
    SweepResult result;
    for (int n : spec.qubit_counts) {
        for (std::uint64_t seed : spec.seeds) {
            // Sequential baseline: one run per (n, seed); rows repeat per
            // (T2, r) so every parallel configuration has its dashed line.
            const Circuit baseline_circuit = random_parallel({n, 0.0, seed});
            const Topology single = linear_topology(1, baseline_capacity(n));
            const Schedule baseline =
                compile_with(baseline_circuit, single, spec.params, "greedy", "sta", spec.lookahead);
            for (double p : spec.movement_grid) {
                const Circuit circuit = random_parallel({n, p, seed});
                const Topology topo = linear_topology(n / 2, 3);
                const Schedule schedule = compile_with(circuit, topo, spec.params, spec.router,
                                                       spec.placement, spec.lookahead);
                for (double t2 : spec.t2_grid_ms) {
                    for (double r : spec.swap_ratio_grid) {
                        DeviceParams params = spec.params;
                        params.t2_ms = t2;
                        params.swap_error_ratio = r;
                        SweepRow row;
                        row.benchmark = Benchmark::random;
                        row.n_qubits = n;
                        row.movement_pct = p;
                        row.t2_ms = t2;
                        row.swap_ratio = r;
                        row.n_traps = topo.n_traps;
                        row.capacity = topo.capacity;
                        row.seed = seed;
                        row.report = schedule_fidelity(schedule, circuit, topo, params);
                        result.rows.push_back(row);

                        SweepRow base = row;
                        base.movement_pct = p;
                        base.n_traps = 1;
                        base.capacity = single.capacity;
                        base.report =
                            schedule_fidelity(baseline, baseline_circuit, single, params);
                        result.rows.push_back(base);
                    }
                }
            }
        }
    }
    return result;
}

TrapSweepResult sweep_traps(const SweepSpec& spec) {
    if (spec.qubit_counts.empty())
        throw std::invalid_argument("sweep_traps: qubit_counts grid is empty");
    for (int n : spec.qubit_counts)
        if (n < 2 || n % 2 != 0)
            throw std::invalid_argument("sweep_traps: qubit counts must be even and >= 2");

    const std::string router = spec.router == "naive" ? "naive" : "greedy";
    TrapSweepResult result;
    for (int n : spec.qubit_counts) {
        std::vector<int> trap_grid = spec.trap_grid;
        if (trap_grid.empty()) {
            for (int t = 1; t <= n / 2; ++t) trap_grid.push_back(t);
        }
        const Circuit circuit = make_benchmark(spec.benchmark, n);

        double f_seq = -1.0;
        FidelityReport seq_report;
        {
            const Topology single = linear_topology(1, baseline_capacity(n));
            seq_report = run_one(circuit, single, spec.params, "greedy", "sta", spec.lookahead);
            f_seq = seq_report.fidelity;
        }

        TrapSummary summary;
        summary.benchmark = spec.benchmark;
        summary.n_qubits = n;
        summary.f_seq = f_seq;
        double best_f = -1.0;
        for (int traps : trap_grid) {
            const int cap = std::max(2, (n + traps - 1) / traps + 1);
            const Topology topo = linear_topology(traps, cap);
            FidelityReport report =
                traps == 1 ? seq_report
                           : run_one(circuit, topo, spec.params, router, "sta", spec.lookahead);
            SweepRow row;
            row.benchmark = spec.benchmark;
            row.n_qubits = n;
            row.t2_ms = spec.params.t2_ms;
            row.swap_ratio = spec.params.swap_error_ratio;
            row.n_traps = traps;
            row.capacity = traps == 1 ? baseline_capacity(n) : cap;
            row.report = report;
            result.rows.push_back(row);

            if (report.fidelity > best_f) {
                best_f = report.fidelity;
                summary.opt_traps = traps;
                summary.f_opt = report.fidelity;
            }
            if (traps > 1 && report.fidelity > f_seq) summary.max_traps = std::max(summary.max_traps, traps);
        }
        summary.delta_f_pct = 100.0 * (summary.f_opt - f_seq) / f_seq;
        result.summaries.push_back(summary);
    }
    return result;
}

std::string SweepResult::to_csv() const {
    std::ostringstream out;
    out << kRowHeader << '\n';
    for (const SweepRow& row : rows) append_row_csv(out, row);
    return out.str();
}

std::string SweepResult::to_json() const {
    nlohmann::json rows_json = nlohmann::json::array();
    for (const SweepRow& row : rows) rows_json.push_back(row_json(row));
    return nlohmann::json{{"rows", rows_json}}.dump(2) + "\n";
}

std::string TrapSweepResult::rows_csv() const {
    std::ostringstream out;
    out << kRowHeader << '\n';
    for (const SweepRow& row : rows) append_row_csv(out, row);
    return out.str();
}

std::string TrapSweepResult::summary_csv() const {
    std::ostringstream out;
    out << "benchmark,n_qubits,opt_traps,max_traps,delta_f_pct,f_opt,f_seq\n";
    for (const TrapSummary& s : summaries)
        out << to_string(s.benchmark) << ',' << s.n_qubits << ',' << s.opt_traps << ','
            << s.max_traps << ',' << fmt(s.delta_f_pct) << ',' << fmt(s.f_opt) << ','
            << fmt(s.f_seq) << '\n';
    return out.str();
}

std::string TrapSweepResult::to_json() const {
    nlohmann::json rows_json = nlohmann::json::array();
    for (const SweepRow& row : rows) rows_json.push_back(row_json(row));
    nlohmann::json summaries_json = nlohmann::json::array();
    for (const TrapSummary& s : summaries)
        summaries_json.push_back(nlohmann::json{{"benchmark", to_string(s.benchmark)},
                                                {"n_qubits", s.n_qubits},
                                                {"opt_traps", s.opt_traps},
                                                {"max_traps", s.max_traps},
                                                {"delta_f_pct", s.delta_f_pct},
                                                {"f_opt", s.f_opt},
                                                {"f_seq", s.f_seq}});
    return nlohmann::json{{"rows", rows_json}, {"summaries", summaries_json}}.dump(2) + "\n";
}

std::vector<BenchTableRow> bench_table(int n_qubits) {
    std::vector<BenchTableRow> rows;
    for (Benchmark b : {Benchmark::cuccaro, Benchmark::draper, Benchmark::qaoa, Benchmark::qft}) {
        const Circuit circuit = make_benchmark(b, n_qubits);
        const CircuitStats s = stats(circuit);
        BenchTableRow row;
        row.benchmark = b;
        row.depth = s.depth;
        row.gates = s.two_qubit_gate_count;
        row.avg_gates_per_ts = s.avg_gates_per_ts;
        row.avg_shuttle_per_ts = s.avg_ion_mov_per_ts;
        rows.push_back(row);
    }
    return rows;
}

std::string bench_table_csv(const std::vector<BenchTableRow>& rows) {
    std::ostringstream out;
    out << "benchmark,depth,gates_2q,avg_2q_gates_per_ts,avg_shuttle_per_ts\n";
    for (const BenchTableRow& r : rows)
        out << to_string(r.benchmark) << ',' << r.depth << ',' << r.gates << ','
            << fmt(r.avg_gates_per_ts) << ',' << fmt(r.avg_shuttle_per_ts) << '\n';
    return out.str();
}

std::string bench_table_text(const std::vector<BenchTableRow>& rows) {
    std::ostringstream out;
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%-9s %7s %9s %15s %15s\n", "bench", "depth", "2q-gates",
                  "av-2q-gates/TS", "av-shuttle/TS");
    out << buf;
    for (const BenchTableRow& r : rows) {
        std::snprintf(buf, sizeof(buf), "%-9s %7d %9d %15.2f %15.2f\n", to_string(r.benchmark),
                      r.depth, r.gates, r.avg_gates_per_ts, r.avg_shuttle_per_ts);
        out << buf;
    }
    return out.str();
}

} // namespace qccd

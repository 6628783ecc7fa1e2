#include "qccdlab/compiler.hpp"
#include "qccdlab/fidelity.hpp"
#include "qccdlab/generators.hpp"
#include "qccdlab/machine.hpp"
#include "qccdlab/sweep.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <optional>

namespace {

void write_output(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write output file: " + path);
    out << text;
}

struct MachineArgs {
    std::string config_path;
    std::optional<int> traps;
    std::optional<int> capacity;

    qccd::MachineConfig resolve() const {
        qccd::MachineConfig cfg;
        if (!config_path.empty()) cfg = qccd::load_config(config_path);
        if (traps) cfg.topology.n_traps = *traps;
        if (capacity) cfg.topology.capacity = *capacity;
        cfg.topology = qccd::linear_topology(cfg.topology.n_traps, cfg.topology.capacity);
        return cfg;
    }
};

void add_machine_flags(CLI::App* cmd, MachineArgs& args) {
    cmd->add_option("--config", args.config_path, "machine config file (key = value)");
    cmd->add_option("--traps", args.traps, "override trap count");
    cmd->add_option("--capacity", args.capacity, "override trap capacity");
}

nlohmann::json report_json(const qccd::FidelityReport& r) {
    return nlohmann::json{{"fidelity", r.fidelity},
                          {"coherence", r.coherence},
                          {"raw_product", r.raw_product},
                          {"t_us", r.makespan_us},
                          {"gates", r.gate_count},
                          {"swaps", r.swap_count},
                          {"splits", r.split_count},
                          {"hops", r.hop_count},
                          {"merges", r.merge_count},
                          {"topology", r.topology},
                          {"router", r.router},
                          {"placement", r.placement}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"QCCD parallelism-vs-movement compilation laboratory"};
    app.require_subcommand(1);

    // --- gen ---
    std::string gen_kind = "qft";
    int gen_qubits = 0;
    double gen_movement = 0.0;
    std::uint64_t gen_seed = 0;
    bool gen_round_robin = false;
    std::string gen_out;
    auto* gen = app.add_subcommand("gen", "generate a benchmark circuit");
    gen->add_option("--kind", gen_kind, "random|qft|qaoa|draper|cuccaro")->required();
    gen->add_option("--qubits", gen_qubits, "number of virtual qubits")->required();
    gen->add_option("--movement-pct", gen_movement, "movement percentage (random only)");
    gen->add_option("--seed", gen_seed, "seed (random only)");
    gen->add_flag("--qaoa-round-robin", gen_round_robin, "round-robin QAOA edge order");
    gen->add_option("--out,-o", gen_out, "output path (default stdout)");

    // --- compile ---
    std::string compile_circuit_path;
    std::string compile_router = "greedy";
    std::string compile_placement = "sta";
    int compile_lookahead = 20;
    bool compile_serialize_moves = false;
    std::string compile_out;
    MachineArgs compile_machine;
    auto* compile = app.add_subcommand("compile", "compile a circuit to a schedule dump");
    compile->add_option("--circuit", compile_circuit_path, "circuit text file")->required();
    compile->add_option("--router", compile_router, "naive|greedy");
    compile->add_option("--placement", compile_placement, "sta|paired");
    compile->add_option("--lookahead", compile_lookahead, "greedy lookahead window (gates)");
    compile->add_flag("--serialize-moves", compile_serialize_moves,
                      "naive router: serialize move primitives");
    compile->add_option("--out,-o", compile_out, "output path (default stdout)");
    add_machine_flags(compile, compile_machine);

    // --- run ---
    std::string run_circuit_path;
    std::string run_router = "greedy";
    std::string run_placement = "sta";
    int run_lookahead = 20;
    std::string run_format = "text";
    std::string run_out;
    MachineArgs run_machine;
    auto* run = app.add_subcommand("run", "compile and evaluate fidelity");
    run->add_option("--circuit", run_circuit_path, "circuit text file")->required();
    run->add_option("--router", run_router, "naive|greedy");
    run->add_option("--placement", run_placement, "sta|paired");
    run->add_option("--lookahead", run_lookahead, "greedy lookahead window (gates)");
    run->add_option("--format", run_format, "text|json");
    run->add_option("--out,-o", run_out, "output path (default stdout)");
    add_machine_flags(run, run_machine);

    // --- sweep-movement ---
    std::vector<int> sm_qubits{40};
    std::vector<double> sm_movement;
    std::vector<double> sm_t2{1000.0};
    std::vector<double> sm_ratio{3.0};
    std::vector<std::uint64_t> sm_seeds{1};
    std::string sm_format = "csv";
    std::string sm_out;
    MachineArgs sm_machine;
    auto* sm = app.add_subcommand("sweep-movement", "worst-case movement sweep (Fig. 1/3)");
    sm->add_option("--qubits", sm_qubits, "qubit counts");
    sm->add_option("--movement-grid", sm_movement, "movement percentages (default 0,10,...,100)");
    sm->add_option("--t2-grid", sm_t2, "T2 grid in ms");
    sm->add_option("--r-grid", sm_ratio, "swap error ratio grid");
    sm->add_option("--seeds", sm_seeds, "benchmark seeds");
    sm->add_option("--format", sm_format, "csv|json");
    sm->add_option("--out,-o", sm_out, "output path (default stdout)");
    add_machine_flags(sm, sm_machine);

    // --- sweep-traps ---
    std::vector<std::string> st_benchmarks{"cuccaro", "draper", "qaoa", "qft"};
    std::vector<int> st_qubits{40};
    std::vector<int> st_traps;
    std::string st_router = "greedy";
    int st_lookahead = 20;
    std::string st_format = "csv";
    std::string st_out;
    std::string st_summary_out;
    MachineArgs st_machine;
    auto* st = app.add_subcommand("sweep-traps", "trap-count sweep (Fig. 4 / Table II)");
    st->add_option("--benchmarks", st_benchmarks, "subset of cuccaro,draper,qaoa,qft");
    st->add_option("--qubits", st_qubits, "qubit counts");
    st->add_option("--trap-grid", st_traps, "trap counts (default 1..n/2)");
    st->add_option("--router", st_router, "naive|greedy");
    st->add_option("--lookahead", st_lookahead, "greedy lookahead window (gates)");
    st->add_option("--format", st_format, "csv|json");
    st->add_option("--out,-o", st_out, "rows output path (default stdout)");
    st->add_option("--summary-out", st_summary_out, "summary CSV path (default stdout)");
    add_machine_flags(st, st_machine);

    // --- bench-table ---
    int bt_qubits = 40;
    std::string bt_format = "text";
    std::string bt_out;
    auto* bt = app.add_subcommand("bench-table", "benchmark statistics table (Table I)");
    bt->add_option("qubits", bt_qubits, "qubit count")->required();
    bt->add_option("--format", bt_format, "text|csv");
    bt->add_option("--out,-o", bt_out, "output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            qccd::Circuit circuit;
            if (gen_kind == "qaoa" && gen_round_robin)
                circuit = qccd::qaoa_complete(gen_qubits, true);
            else
                circuit = qccd::make_benchmark(qccd::benchmark_from_string(gen_kind), gen_qubits,
                                               gen_movement, gen_seed);
            write_output(qccd::to_text(circuit), gen_out);
        } else if (*compile) {
            const auto cfg = compile_machine.resolve();
            const qccd::Circuit circuit = qccd::load_circuit(compile_circuit_path);
            qccd::Placement placement = compile_placement == "paired"
                                            ? qccd::paired_placement(circuit, cfg.topology)
                                            : qccd::sta_placement(circuit, cfg.topology);
            qccd::RouteOptions options;
            options.lookahead_window = compile_lookahead;
            options.serialize_moves = compile_serialize_moves;
            qccd::Schedule schedule =
                compile_router == "naive"
                    ? qccd::route_naive_parallel(circuit, placement, cfg.topology, cfg.params, options)
                    : qccd::route_greedy_minmove(circuit, placement, cfg.topology, cfg.params, options);
            schedule.placement = compile_placement;
            const auto violations = qccd::validate_schedule(schedule, circuit, cfg.topology);
            if (!violations.empty()) {
                for (const auto& v : violations) std::cerr << "violation: " << v << "\n";
                return 1;
            }
            write_output(qccd::to_text(schedule), compile_out);
        } else if (*run) {
            const auto cfg = run_machine.resolve();
            const qccd::Circuit circuit = qccd::load_circuit(run_circuit_path);
            const qccd::FidelityReport report = qccd::run_one(
                circuit, cfg.topology, cfg.params, run_router, run_placement, run_lookahead);
            if (run_format == "json") {
                write_output(report_json(report).dump(2) + "\n", run_out);
            } else {
                std::ostringstream out;
                out << "fidelity " << report.fidelity << "\n"
                    << "coherence " << report.coherence << "\n"
                    << "raw_product " << report.raw_product << "\n"
                    << "t_us " << report.makespan_us << "\n"
                    << "gates " << report.gate_count << "\n"
                    << "swaps " << report.swap_count << "\n"
                    << "splits " << report.split_count << "\n"
                    << "hops " << report.hop_count << "\n"
                    << "merges " << report.merge_count << "\n"
                    << "topology " << report.topology << "\n"
                    << "router " << report.router << "\n"
                    << "placement " << report.placement << "\n";
                write_output(out.str(), run_out);
            }
        } else if (*sm) {
            qccd::SweepSpec spec;
            spec.benchmark = qccd::Benchmark::random;
            spec.qubit_counts = sm_qubits;
            spec.movement_grid = sm_movement;
            if (spec.movement_grid.empty())
                for (int p = 0; p <= 100; p += 10) spec.movement_grid.push_back(p);
            spec.t2_grid_ms = sm_t2;
            spec.swap_ratio_grid = sm_ratio;
            spec.seeds = sm_seeds;
            spec.router = "naive";
            spec.placement = "paired";
            spec.params = sm_machine.resolve().params;
            const qccd::SweepResult result = qccd::sweep_movement(spec);
            write_output(sm_format == "json" ? result.to_json() : result.to_csv(), sm_out);
        } else if (*st) {
            std::ostringstream rows_out;
            std::ostringstream summary_out;
            bool first = true;
            nlohmann::json all_json;
            for (const std::string& name : st_benchmarks) {
                qccd::SweepSpec spec;
                spec.benchmark = qccd::benchmark_from_string(name);
                spec.qubit_counts = st_qubits;
                spec.trap_grid = st_traps;
                spec.movement_grid = {0.0};
                spec.t2_grid_ms = {0.0};
                spec.router = st_router;
                spec.lookahead = st_lookahead;
                spec.params = st_machine.resolve().params;
                spec.t2_grid_ms = {spec.params.t2_ms};
                spec.swap_ratio_grid = {spec.params.swap_error_ratio};
                spec.seeds = {0};
                const qccd::TrapSweepResult result = qccd::sweep_traps(spec);
                if (st_format == "json") {
                    all_json[name] = nlohmann::json::parse(result.to_json());
                } else {
                    const std::string rows = result.rows_csv();
                    const std::string summary = result.summary_csv();
                    if (first) {
                        rows_out << rows;
                        summary_out << summary;
                    } else {
                        rows_out << rows.substr(rows.find('\n') + 1);
                        summary_out << summary.substr(summary.find('\n') + 1);
                    }
                }
                first = false;
            }
            if (st_format == "json") {
                write_output(all_json.dump(2) + "\n", st_out);
            } else {
                write_output(rows_out.str(), st_out);
                if (st_summary_out.empty() && (st_out.empty() || st_out == "-"))
                    std::cout << "\n";
                write_output(summary_out.str(), st_summary_out);
            }
        } else if (*bt) {
            const auto rows = qccd::bench_table(bt_qubits);
            write_output(bt_format == "csv" ? qccd::bench_table_csv(rows)
                                            : qccd::bench_table_text(rows),
                         bt_out);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

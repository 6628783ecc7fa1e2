#include "qccdlab/compiler.hpp"
#include "qccdlab/fidelity.hpp"
#include "qccdlab/generators.hpp"
#include "qccdlab/machine.hpp"
#include "qccdlab/sweep.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace qccd;

PYBIND11_MODULE(_core, m) {
    m.doc() = "QCCD compilation laboratory: trap-level routing, scheduling and "
              "fidelity models for 1D-linear ion trap arrays.";

    py::class_<Gate>(m, "Gate")
        .def_readonly("qubit_a", &Gate::qubit_a)
        .def_readonly("qubit_b", &Gate::qubit_b)
        .def_readonly("program_index", &Gate::program_index)
        .def("__repr__", [](const Gate& g) {
            return "Gate(" + std::to_string(g.qubit_a) + ", " + std::to_string(g.qubit_b) + ")";
        });

    py::class_<Circuit>(m, "Circuit")
        .def(py::init<>())
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& pairs) {
                 return Circuit(n, pairs);
             }),
             py::arg("n_qubits"), py::arg("gates"))
        .def_readonly("n_qubits", &Circuit::n_qubits)
        .def_readonly("gates", &Circuit::gates)
        .def("add_gate", &Circuit::add_gate)
        .def("to_text", [](const Circuit& c) { return to_text(c); })
        .def_static("from_text", &from_text)
        .def("__len__", [](const Circuit& c) { return c.gates.size(); });

    py::class_<Layering>(m, "Layering")
        .def_readonly("layers", &Layering::layers)
        .def_property_readonly("depth", &Layering::depth);

    py::class_<CircuitStats>(m, "CircuitStats")
        .def_readonly("n_qubits", &CircuitStats::n_qubits)
        .def_readonly("depth", &CircuitStats::depth)
        .def_readonly("two_qubit_gate_count", &CircuitStats::two_qubit_gate_count)
        .def_readonly("avg_gates_per_ts", &CircuitStats::avg_gates_per_ts)
        .def_readonly("per_qubit_movements", &CircuitStats::per_qubit_movements)
        .def_readonly("total_movements", &CircuitStats::total_movements)
        .def_readonly("avg_ion_mov_per_ts", &CircuitStats::avg_ion_mov_per_ts)
        .def_readonly("movement_percentage", &CircuitStats::movement_percentage);

    m.def("validate_circuit", [](const Circuit& c) { return validate(c); });
    m.def("asap_layering", &asap_layering);
    m.def("partner_change_counts", &partner_change_counts);
    m.def("stats", &stats);

    m.def(
        "random_parallel",
        [](int n, double p, std::uint64_t seed) { return random_parallel({n, p, seed}); },
        py::arg("n_qubits"), py::arg("movement_pct"), py::arg("seed") = 0);
    m.def("qft", &qft, py::arg("n"));
    m.def("qaoa_complete", &qaoa_complete, py::arg("n"), py::arg("round_robin") = false);
    m.def("draper", &draper, py::arg("n_total"));
    m.def("cuccaro", &cuccaro, py::arg("n_total"));

    py::class_<Topology>(m, "Topology")
        .def_readonly("n_traps", &Topology::n_traps)
        .def_readonly("capacity", &Topology::capacity)
        .def_property_readonly("n_segments", &Topology::n_segments)
        .def_property_readonly("total_slots", &Topology::total_slots);
    m.def("linear_topology", &linear_topology, py::arg("n_traps"), py::arg("capacity"));

    py::class_<DeviceParams>(m, "DeviceParams")
        .def(py::init<>())
        .def_readwrite("eps_2q0", &DeviceParams::eps_2q0)
        .def_readwrite("gamma", &DeviceParams::gamma)
        .def_readwrite("swap_error_ratio", &DeviceParams::swap_error_ratio)
        .def_readwrite("f_hop", &DeviceParams::f_hop)
        .def_readwrite("f_split", &DeviceParams::f_split)
        .def_readwrite("f_merge", &DeviceParams::f_merge)
        .def_readwrite("t_2q_us", &DeviceParams::t_2q_us)
        .def_readwrite("t_swap_us", &DeviceParams::t_swap_us)
        .def_readwrite("t_split_us", &DeviceParams::t_split_us)
        .def_readwrite("t_merge_us", &DeviceParams::t_merge_us)
        .def_readwrite("t_hop_us", &DeviceParams::t_hop_us)
        .def_readwrite("t2_ms", &DeviceParams::t2_ms);
    m.def("gate_error", &gate_error, py::arg("params"), py::arg("chain_length"));
    m.def("swap_error", &swap_error, py::arg("params"), py::arg("chain_length"));
    m.def("load_config", [](const std::string& path) {
        const MachineConfig cfg = load_config(path);
        return py::make_tuple(cfg.topology, cfg.params);
    });

    py::class_<Placement>(m, "Placement").def_readonly("positions", &Placement::positions);
    m.def("sta_placement", &sta_placement);
    m.def("paired_placement", &paired_placement);

    py::enum_<EventKind>(m, "EventKind")
        .value("gate", EventKind::gate)
        .value("swap", EventKind::swap)
        .value("split", EventKind::split)
        .value("hop", EventKind::hop)
        .value("merge", EventKind::merge);

    py::class_<ScheduleEvent>(m, "ScheduleEvent")
        .def_readonly("kind", &ScheduleEvent::kind)
        .def_readonly("q0", &ScheduleEvent::q0)
        .def_readonly("q1", &ScheduleEvent::q1)
        .def_readonly("resource", &ScheduleEvent::resource)
        .def_readonly("start_us", &ScheduleEvent::start_us)
        .def_readonly("duration_us", &ScheduleEvent::duration_us);

    py::class_<Schedule>(m, "Schedule")
        .def_readonly("events", &Schedule::events)
        .def_readonly("initial_positions", &Schedule::initial_positions)
        .def_readonly("router", &Schedule::router)
        .def_property_readonly("makespan_us", &Schedule::makespan_us)
        .def_property_readonly("movement_event_count", &Schedule::movement_event_count)
        .def("to_text", [](const Schedule& s) { return to_text(s); });

    m.def(
        "route_naive_parallel",
        [](const Circuit& c, const Placement& pl, const Topology& t, const DeviceParams& p,
           bool serialize_moves) {
            RouteOptions opt;
            opt.serialize_moves = serialize_moves;
            return route_naive_parallel(c, pl, t, p, opt);
        },
        py::arg("circuit"), py::arg("placement"), py::arg("topology"), py::arg("params"),
        py::arg("serialize_moves") = false);
    m.def(
        "route_greedy_minmove",
        [](const Circuit& c, const Placement& pl, const Topology& t, const DeviceParams& p,
           int lookahead) {
            RouteOptions opt;
            opt.lookahead_window = lookahead;
            return route_greedy_minmove(c, pl, t, p, opt);
        },
        py::arg("circuit"), py::arg("placement"), py::arg("topology"), py::arg("params"),
        py::arg("lookahead") = 20);
    m.def("validate_schedule", &validate_schedule);

    py::class_<FidelityReport>(m, "FidelityReport")
        .def_readonly("fidelity", &FidelityReport::fidelity)
        .def_readonly("coherence", &FidelityReport::coherence)
        .def_readonly("raw_product", &FidelityReport::raw_product)
        .def_readonly("makespan_us", &FidelityReport::makespan_us)
        .def_readonly("gate_count", &FidelityReport::gate_count)
        .def_readonly("swap_count", &FidelityReport::swap_count)
        .def_readonly("split_count", &FidelityReport::split_count)
        .def_readonly("hop_count", &FidelityReport::hop_count)
        .def_readonly("merge_count", &FidelityReport::merge_count)
        .def_readonly("topology", &FidelityReport::topology)
        .def_readonly("router", &FidelityReport::router)
        .def_readonly("placement", &FidelityReport::placement);

    m.def("coherence", &coherence, py::arg("t"), py::arg("t2"));
    m.def(
        "schedule_fidelity",
        [](const Schedule& s, const Circuit& c, const Topology& t, const DeviceParams& p) {
            return schedule_fidelity(s, c, t, p);
        },
        py::arg("schedule"), py::arg("circuit"), py::arg("topology"), py::arg("params"));
    m.def("delta_f", &delta_f);
    m.def("run_one", &run_one, py::arg("circuit"), py::arg("topology"), py::arg("params"),
          py::arg("router") = "greedy", py::arg("placement") = "sta", py::arg("lookahead") = 20);

    py::class_<BenchTableRow>(m, "BenchTableRow")
        .def_property_readonly("benchmark",
                               [](const BenchTableRow& r) { return std::string(to_string(r.benchmark)); })
        .def_readonly("depth", &BenchTableRow::depth)
        .def_readonly("gates", &BenchTableRow::gates)
        .def_readonly("avg_gates_per_ts", &BenchTableRow::avg_gates_per_ts)
        .def_readonly("avg_shuttle_per_ts", &BenchTableRow::avg_shuttle_per_ts);
    m.def("bench_table", &bench_table, py::arg("n_qubits"));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qccdlab/fidelity.hpp"
#include "qccdlab/generators.hpp"
#include "qccdlab/sweep.hpp"

#include <cmath>

using namespace qccd;

namespace {

Schedule one_gate_schedule(double t_2q) {
    Schedule s;
    s.router = "hand";
    s.initial_positions = {{0, 0}, {0, 1}};
    s.events.push_back({EventKind::gate, 0, 1, 0, 0.0, t_2q});
    return s;
}

} // namespace

TEST_CASE("coherence analytic values") {
    CHECK(coherence(0.0, 123.0) == 1.0);
    CHECK(coherence(5.0, 5.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
    CHECK(coherence(200.0, 1000.0) == doctest::Approx(std::exp(-0.2)).epsilon(1e-12));
    CHECK_THROWS_AS(coherence(1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(coherence(-1.0, 1.0), std::invalid_argument);
}

TEST_CASE("schedule_fidelity: single gate in a 2-ion trap") {
    DeviceParams params;
    params.gamma = 0.0;
    const Circuit c(2, {{0, 1}});
    const Topology topo = linear_topology(1, 3);
    const FidelityReport r = schedule_fidelity(one_gate_schedule(params.t_2q_us), c, topo, params);
    CHECK(r.raw_product == doctest::Approx(0.999).epsilon(1e-12));
    CHECK(r.coherence == doctest::Approx(std::exp(-1e-4)).epsilon(1e-12));
    CHECK(r.fidelity == doctest::Approx(0.999 * std::exp(-1e-4)).epsilon(1e-9));
    CHECK(r.makespan_us == doctest::Approx(100.0));
}

TEST_CASE("schedule_fidelity: empty schedule is lossless") {
    Schedule s;
    const Circuit c(0, {});
    const FidelityReport r = schedule_fidelity(s, c, linear_topology(1, 3), DeviceParams{});
    CHECK(r.fidelity == 1.0);
    CHECK(r.makespan_us == 0.0);
}

TEST_CASE("schedule_fidelity: gate plus swap in one trap") {
    DeviceParams params;
    params.gamma = 0.0;
    Schedule s;
    s.router = "hand";
    s.initial_positions = {{0, 0}, {0, 1}};
    s.events.push_back({EventKind::swap, 0, 1, 0, 0.0, params.t_swap_us});
    s.events.push_back({EventKind::gate, 0, 1, 0, params.t_swap_us, params.t_2q_us});
    const Circuit c(2, {{0, 1}});
    const FidelityReport r = schedule_fidelity(s, c, linear_topology(1, 3), params);
    CHECK(r.raw_product == doctest::Approx(0.999 * 0.997).epsilon(1e-12));
    CHECK(r.swap_count == 1);
}

TEST_CASE("schedule_fidelity: invalid schedules are rejected") {
    Schedule s = one_gate_schedule(100.0);
    s.events.push_back({EventKind::gate, 0, 1, 0, 0.0, 100.0}); // overlap + coverage
    const Circuit c(2, {{0, 1}});
    CHECK_THROWS_AS(schedule_fidelity(s, c, linear_topology(1, 3), DeviceParams{}),
                    std::invalid_argument);
}

TEST_CASE("fidelity monotone in error knobs") {
    const Circuit c = random_parallel({8, 50.0, 5});
    const Topology topo = linear_topology(4, 3);
    const Placement p = paired_placement(c, topo);
    DeviceParams params;
    const Schedule s = route_naive_parallel(c, p, topo, params);

    const auto fidelity_with = [&](auto mutate) {
        DeviceParams q = params;
        mutate(q);
        return schedule_fidelity(s, c, topo, q).fidelity;
    };
    const double base = fidelity_with([](DeviceParams&) {});
    CHECK(fidelity_with([](DeviceParams& q) { q.swap_error_ratio = 2.0; }) >= base);
    CHECK(fidelity_with([](DeviceParams& q) { q.eps_2q0 *= 2.0; }) <= base);
    CHECK(fidelity_with([](DeviceParams& q) { q.gamma *= 4.0; }) <= base);
    CHECK(fidelity_with([](DeviceParams& q) { q.t2_ms /= 10.0; }) <= base);
    CHECK(fidelity_with([](DeviceParams& q) { q.t2_ms *= 10.0; }) >= base);
}

TEST_CASE("fidelity non-increasing as events are appended") {
    // Prefixes of a growing circuit: every extra gate lowers fidelity.
    DeviceParams params;
    const Topology topo = linear_topology(1, 9);
    double prev = 1.0;
    for (int g = 1; g <= 8; ++g) {
        Circuit c;
        c.n_qubits = 8;
        for (int i = 0; i < g; ++i) c.add_gate(i % 8, (i + 1) % 8);
        const Placement p = sta_placement(c, topo);
        const Schedule s = route_greedy_minmove(c, p, topo, params);
        const double f = schedule_fidelity(s, c, topo, params).fidelity;
        CHECK(f <= prev);
        prev = f;
    }
}

TEST_CASE("raw product is permutation invariant at equal occupancies") {
    DeviceParams params;
    const Topology topo = linear_topology(1, 5);
    const Circuit ab(4, {{0, 1}, {2, 3}});
    const Circuit ba(4, {{2, 3}, {0, 1}});
    Schedule s1, s2;
    s1.initial_positions = s2.initial_positions = {{0, 0}, {0, 1}, {0, 2}, {0, 3}};
    s1.events.push_back({EventKind::gate, 0, 1, 0, 0.0, 100.0});
    s1.events.push_back({EventKind::gate, 2, 3, 0, 100.0, 100.0});
    s2.events.push_back({EventKind::gate, 2, 3, 0, 0.0, 100.0});
    s2.events.push_back({EventKind::gate, 0, 1, 0, 100.0, 100.0});
    const double r1 = schedule_fidelity(s1, ab, topo, params).raw_product;
    const double r2 = schedule_fidelity(s2, ba, topo, params).raw_product;
    CHECK(r1 == r2);
}

TEST_CASE("delta_f") {
    FidelityReport a, b;
    a.fidelity = 0.5;
    b.fidelity = 0.5;
    CHECK(delta_f(a, b) == doctest::Approx(0.0));
    a.fidelity = 0.6;
    b.fidelity = 0.4;
    CHECK(delta_f(a, b) == doctest::Approx(50.0));
    b.fidelity = 0.0;
    CHECK_THROWS_AS(delta_f(a, b), std::invalid_argument);
}

TEST_CASE("per-qubit idle coherence variant stays in (0, 1]") {
    const Circuit c = qft(6);
    const Topology topo = linear_topology(3, 3);
    const Placement p = sta_placement(c, topo);
    DeviceParams params;
    const Schedule s = route_greedy_minmove(c, p, topo, params);
    FidelityOptions opt;
    opt.per_qubit_idle = true;
    const FidelityReport r = schedule_fidelity(s, c, topo, params, opt);
    CHECK(r.coherence > 0.0);
    CHECK(r.coherence <= 1.0);
    // Idle time is bounded by the makespan, so this variant cannot be worse.
    const FidelityReport global = schedule_fidelity(s, c, topo, params);
    CHECK(r.coherence >= global.coherence);
}

TEST_CASE("run_one: analytic zero-movement fidelity") {
    DeviceParams params;
    params.gamma = 0.0;
    const Circuit c = random_parallel({8, 0.0, 2});
    const FidelityReport r =
        run_one(c, linear_topology(4, 3), params, "naive", "paired");
    CHECK(r.hop_count == 0);
    CHECK(r.swap_count == 0);
    CHECK(r.raw_product == doctest::Approx(std::pow(0.999, 32)).epsilon(1e-12));
    CHECK(r.makespan_us == doctest::Approx(800.0));
}

TEST_CASE("run_one: single trap greedy has no movement") {
    const FidelityReport r =
        run_one(qft(4), linear_topology(1, 5), DeviceParams{}, "greedy", "sta");
    CHECK(r.swap_count + r.split_count + r.hop_count + r.merge_count == 0);
    CHECK(r.gate_count == 6);
}

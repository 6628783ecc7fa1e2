#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qccdlab/machine.hpp"

using namespace qccd;

TEST_CASE("linear topology shapes") {
    const Topology t = linear_topology(4, 3);
    CHECK(t.n_traps == 4);
    CHECK(t.n_segments() == 3);

    const Topology single = linear_topology(1, 41);
    CHECK(single.n_segments() == 0);

    const Topology wide = linear_topology(10, 3);
    CHECK(wide.total_slots() == 30); // holds 20 ions with one free slot per trap

    CHECK_THROWS_AS(linear_topology(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(linear_topology(2, 1), std::invalid_argument);
}

TEST_CASE("gate error model") {
    DeviceParams p;
    p.eps_2q0 = 0.001;

    p.gamma = 0.0;
    CHECK(gate_error(p, 40) == doctest::Approx(0.001));

    p.gamma = 0.05;
    CHECK(gate_error(p, 2) == doctest::Approx(0.001));
    CHECK(gate_error(p, 1) == doctest::Approx(0.001));
    CHECK(gate_error(p, 12) == doctest::Approx(0.0015));

    CHECK_THROWS_AS(gate_error(p, 0), std::invalid_argument);
}

TEST_CASE("gate error monotonicity and swap dominance") {
    DeviceParams p;
    p.eps_2q0 = 2e-3;
    for (double gamma : {0.0, 0.01, 0.1, 0.5}) {
        p.gamma = gamma;
        double prev = 0.0;
        for (int len = 1; len <= 50; ++len) {
            const double e = gate_error(p, len);
            CHECK(e >= prev);
            CHECK(swap_error(p, len) >= e); // r >= 1
            prev = e;
        }
    }
    // Monotone in gamma as well.
    p.gamma = 0.02;
    const double low = gate_error(p, 10);
    p.gamma = 0.08;
    CHECK(gate_error(p, 10) >= low);
}

TEST_CASE("device params validation") {
    DeviceParams p;
    CHECK_NOTHROW(require_valid(p));
    p.swap_error_ratio = 0.5;
    CHECK_THROWS_AS(require_valid(p), std::invalid_argument);
    p = DeviceParams{};
    p.t2_ms = 0.0;
    CHECK_THROWS_AS(require_valid(p), std::invalid_argument);
    p = DeviceParams{};
    p.t_hop_us = -1.0;
    CHECK_THROWS_AS(require_valid(p), std::invalid_argument);
}

TEST_CASE("config parsing: defaults, overrides, round trip") {
    const MachineConfig def = parse_config("");
    CHECK(def.params.eps_2q0 == doctest::Approx(1e-3));
    CHECK(def.params.t2_ms == doctest::Approx(1000.0));
    CHECK(def.topology.n_traps == 1);

    const MachineConfig cfg = parse_config(
        "# comment\n"
        "n_traps = 4\n"
        "capacity = 3\n"
        "gamma = 0.02\n"
        "t2_ms = 250\n");
    CHECK(cfg.topology.n_traps == 4);
    CHECK(cfg.topology.capacity == 3);
    CHECK(cfg.params.gamma == doctest::Approx(0.02));
    CHECK(cfg.params.t2_ms == doctest::Approx(250.0));
    CHECK(cfg.params.eps_2q0 == doctest::Approx(1e-3)); // untouched default

    const MachineConfig back = parse_config(config_to_text(cfg));
    CHECK(back.topology.n_traps == cfg.topology.n_traps);
    CHECK(back.params.gamma == cfg.params.gamma);

    CHECK_THROWS_AS(parse_config("bogus_key = 2\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config("gamma 0.1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config("t2_ms = -5\n"), std::invalid_argument);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qccdlab/circuit.hpp"
#include "qccdlab/generators.hpp"

#include <map>
#include <set>

using namespace qccd;

namespace {

// Every layer of a fully parallel benchmark must be a perfect matching.
void check_perfect_matching_layers(const Circuit& c) {
    const int slots = c.n_qubits / 2;
    REQUIRE(static_cast<int>(c.gates.size()) == slots * c.n_qubits);
    for (int layer = 0; layer < c.n_qubits; ++layer) {
        std::set<int> seen;
        for (int i = 0; i < slots; ++i) {
            const Gate& g = c.gates[layer * slots + i];
            seen.insert(g.qubit_a);
            seen.insert(g.qubit_b);
        }
        CHECK(static_cast<int>(seen.size()) == c.n_qubits);
    }
}

} // namespace

TEST_CASE("random_parallel: p=0 keeps pairings constant") {
    const Circuit c = random_parallel({8, 0.0, 42});
    check_perfect_matching_layers(c);
    for (std::size_t i = 4; i < c.gates.size(); ++i) {
        CHECK(c.gates[i].qubit_a == c.gates[i % 4].qubit_a);
        CHECK(c.gates[i].qubit_b == c.gates[i % 4].qubit_b);
    }
    CHECK(stats(c).movement_percentage == 0.0);
}

TEST_CASE("random_parallel: p=100 changes every partner every step") {
    const Circuit c = random_parallel({8, 100.0, 1});
    check_perfect_matching_layers(c);
    const CircuitStats s = stats(c);
    CHECK(s.total_movements == 56); // 8 qubits x 7 transitions
    CHECK(s.avg_ion_mov_per_ts == doctest::Approx(7.0));
    for (int m : s.per_qubit_movements) CHECK(m == 7);
}

TEST_CASE("random_parallel: measured movement tracks p") {
    const Circuit c = random_parallel({4, 50.0, 0});
    const double measured = stats(c).movement_percentage;
    CHECK(measured == doctest::Approx(50.0).epsilon(0.1));
}

TEST_CASE("random_parallel: odd n rejected") {
    CHECK_THROWS_AS(random_parallel({7, 0.0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(random_parallel({8, 150.0, 0}), std::invalid_argument);
}

TEST_CASE("random_parallel: movement percentage monotone in p") {
    for (int n : {8, 16, 30}) {
        for (std::uint64_t seed : {0ULL, 3ULL, 99ULL}) {
            double prev = -1.0;
            for (int p = 0; p <= 100; p += 10) {
                const Circuit c = random_parallel({n, static_cast<double>(p), seed});
                check_perfect_matching_layers(c);
                const double measured = stats(c).movement_percentage;
                CHECK(measured >= prev - 1e-9);
                prev = measured;
            }
        }
    }
}

TEST_CASE("random_parallel: deterministic in the seed") {
    const Circuit a = random_parallel({12, 37.5, 5});
    const Circuit b = random_parallel({12, 37.5, 5});
    CHECK(to_text(a) == to_text(b));
    const Circuit other = random_parallel({12, 37.5, 6});
    CHECK(to_text(a) != to_text(other));
}

TEST_CASE("qft: gate counts and depth") {
    const Circuit c40 = qft(40);
    CHECK(c40.gates.size() == 780);
    CHECK(asap_layering(c40).depth() == 77);

    const Circuit c2 = qft(2);
    CHECK(c2.gates.size() == 1);
    CHECK(asap_layering(c2).depth() == 1);

    const Circuit c4 = qft(4);
    CHECK(c4.gates.size() == 6);
    CHECK(asap_layering(c4).depth() == 5);
}

TEST_CASE("qft/qaoa: complete edge set without duplicates") {
    for (int n : {2, 5, 9, 16}) {
        std::set<std::pair<int, int>> edges;
        for (const Gate& g : qft(n).gates) {
            CHECK(g.qubit_a < g.qubit_b);
            CHECK(edges.insert({g.qubit_a, g.qubit_b}).second);
        }
        CHECK(static_cast<int>(edges.size()) == n * (n - 1) / 2);
    }
}

TEST_CASE("qaoa_complete: identical to qft by construction") {
    CHECK(to_text(qaoa_complete(40)) == to_text(qft(40)));
    const CircuitStats a = stats(qaoa_complete(40));
    const CircuitStats b = stats(qft(40));
    CHECK(a.depth == b.depth);
    CHECK(a.avg_ion_mov_per_ts == b.avg_ion_mov_per_ts);
    CHECK(qaoa_complete(2).gates.size() == 1);
    CHECK(stats(qaoa_complete(6)).depth == 9);
    CHECK(qaoa_complete(6).gates.size() == 15);
}

TEST_CASE("qaoa_complete: round-robin option is depth optimal") {
    for (int n : {6, 10, 16}) {
        const Circuit c = qaoa_complete(n, true);
        CHECK(asap_layering(c).depth() == n - 1);
        std::set<std::pair<int, int>> edges;
        for (const Gate& g : c.gates) CHECK(edges.insert({g.qubit_a, g.qubit_b}).second);
        CHECK(static_cast<int>(edges.size()) == n * (n - 1) / 2);
    }
}

TEST_CASE("draper: Table-I gate count and depth") {
    const Circuit c40 = draper(40);
    CHECK(c40.gates.size() == 590); // 380 + 210
    const CircuitStats s = stats(c40);
    CHECK(s.depth == 113); // construction golden; acceptance band is +-10%
    CHECK(s.avg_ion_mov_per_ts == doctest::Approx(1140.0 / 113.0));

    CHECK(draper(4).gates.size() == 5); // m=2: 1 + 3 + 1
    CHECK_THROWS_AS(draper(41), std::invalid_argument);
    CHECK_THROWS_AS(draper(2), std::invalid_argument);
}

TEST_CASE("cuccaro: gate counts within the Table-I band") {
    const Circuit c40 = cuccaro(40);
    CHECK(c40.gates.size() == 305); // 16m + 1, m = 19
    CHECK(c40.gates.size() >= 289);
    CHECK(c40.gates.size() <= 353);
    const CircuitStats s = stats(c40);
    CHECK(s.depth == 268);                                    // construction golden
    CHECK(s.avg_ion_mov_per_ts == doctest::Approx(1.347).epsilon(0.01)); // band 1.28 +-20%

    CHECK(cuccaro(4).gates.size() == 17); // golden: single MAJ/UMA pair
    CHECK_THROWS_AS(cuccaro(5), std::invalid_argument);
    CHECK_THROWS_AS(cuccaro(2), std::invalid_argument);
}

TEST_CASE("generators are deterministic") {
    CHECK(to_text(draper(20)) == to_text(draper(20)));
    CHECK(to_text(cuccaro(20)) == to_text(cuccaro(20)));
}

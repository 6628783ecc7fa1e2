#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qccdlab/sweep.hpp"

#include <sstream>

using namespace qccd;

namespace {

SweepSpec small_movement_spec() {
    SweepSpec spec;
    spec.benchmark = Benchmark::random;
    spec.qubit_counts = {8};
    spec.movement_grid = {0.0, 50.0, 100.0};
    spec.t2_grid_ms = {200.0, 1000.0};
    spec.swap_ratio_grid = {3.0};
    spec.seeds = {1};
    return spec;
}

} // namespace

TEST_CASE("sweep spec validation") {
    SweepSpec spec = small_movement_spec();
    CHECK(validate(spec).empty());
    spec.movement_grid.clear();
    CHECK(!validate(spec).empty());
    spec = small_movement_spec();
    spec.movement_grid.push_back(120.0);
    CHECK(!validate(spec).empty());
    spec = small_movement_spec();
    spec.qubit_counts = {7};
    CHECK(!validate(spec).empty());
}

TEST_CASE("sweep_movement: grid shape and baselines") {
    const SweepResult result = sweep_movement(small_movement_spec());
    // 3 p-values x 2 T2 x 1 r, each with a parallel row and a baseline row.
    CHECK(result.rows.size() == 12);
    int baselines = 0;
    for (const SweepRow& row : result.rows) {
        if (row.n_traps == 1) {
            ++baselines;
            CHECK(row.report.hop_count == 0);
            CHECK(row.report.router == "greedy");
        } else {
            CHECK(row.n_traps == 4);
            if (row.movement_pct == 0.0) CHECK(row.report.hop_count == 0);
        }
    }
    CHECK(baselines == 6);
}

TEST_CASE("sweep_movement: CSV is byte-identical across runs") {
    const std::string a = sweep_movement(small_movement_spec()).to_csv();
    const std::string b = sweep_movement(small_movement_spec()).to_csv();
    CHECK(a == b);
    CHECK(a.rfind("n_qubits,p,t2_ms,r,n_traps,fidelity,coherence,t_us,swap_count,hop_count", 0) ==
          0);
}

TEST_CASE("sweep_movement: JSON mirror carries the same rows") {
    const SweepResult result = sweep_movement(small_movement_spec());
    const std::string json = result.to_json();
    CHECK(json.find("\"rows\"") != std::string::npos);
    CHECK(json.find("\"fidelity\"") != std::string::npos);
}

TEST_CASE("sweep_traps: summary invariants on a small instance") {
    SweepSpec spec;
    spec.benchmark = Benchmark::cuccaro;
    spec.qubit_counts = {12};
    spec.params.gamma = 0.3; // strong chain penalty: parallel wins somewhere
    const TrapSweepResult result = sweep_traps(spec);
    REQUIRE(result.summaries.size() == 1);
    const TrapSummary& s = result.summaries.front();
    CHECK(s.opt_traps >= 1);
    if (s.max_traps > 0) CHECK(s.opt_traps <= s.max_traps);
    CHECK(s.f_seq > 0.0);
    // Rows cover the default 1..n/2 grid.
    CHECK(result.rows.size() == 6);
}

TEST_CASE("sweep_traps: single candidate trap count") {
    SweepSpec spec;
    spec.benchmark = Benchmark::cuccaro;
    spec.qubit_counts = {12};
    spec.trap_grid = {3};
    spec.params.gamma = 0.5;
    const TrapSweepResult result = sweep_traps(spec);
    const TrapSummary& s = result.summaries.front();
    CHECK(s.opt_traps == 3);
    CHECK(s.max_traps == 3); // beats the sequential baseline at this gamma
}

TEST_CASE("sweep_traps: qft and qaoa produce identical numbers") {
    for (Benchmark b : {Benchmark::qft, Benchmark::qaoa}) {
        (void)b;
    }
    SweepSpec spec;
    spec.qubit_counts = {12};
    spec.trap_grid = {1, 2, 3};
    spec.benchmark = Benchmark::qft;
    const TrapSweepResult qft_result = sweep_traps(spec);
    spec.benchmark = Benchmark::qaoa;
    const TrapSweepResult qaoa_result = sweep_traps(spec);
    REQUIRE(qft_result.rows.size() == qaoa_result.rows.size());
    for (std::size_t i = 0; i < qft_result.rows.size(); ++i) {
        CHECK(qft_result.rows[i].report.fidelity == qaoa_result.rows[i].report.fidelity);
        CHECK(qft_result.rows[i].report.makespan_us == qaoa_result.rows[i].report.makespan_us);
    }
    CHECK(qft_result.summaries.front().opt_traps == qaoa_result.summaries.front().opt_traps);
    CHECK(qft_result.summaries.front().delta_f_pct ==
          qaoa_result.summaries.front().delta_f_pct);
}

TEST_CASE("sweep_traps: deterministic CSV") {
    SweepSpec spec;
    spec.benchmark = Benchmark::draper;
    spec.qubit_counts = {8};
    CHECK(sweep_traps(spec).rows_csv() == sweep_traps(spec).rows_csv());
    CHECK(sweep_traps(spec).summary_csv() == sweep_traps(spec).summary_csv());
}

TEST_CASE("bench_table: Table-I rows") {
    const auto rows = bench_table(40);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].benchmark == Benchmark::cuccaro);
    CHECK(rows[1].benchmark == Benchmark::draper);
    CHECK(rows[2].benchmark == Benchmark::qaoa);
    CHECK(rows[3].benchmark == Benchmark::qft);

    // QFT and QAOA rows are exact and identical.
    for (int i : {2, 3}) {
        CHECK(rows[i].depth == 77);
        CHECK(rows[i].gates == 780);
        CHECK(rows[i].avg_gates_per_ts == doctest::Approx(10.13).epsilon(1e-3));
        CHECK(rows[i].avg_shuttle_per_ts == doctest::Approx(19.74).epsilon(1e-3));
    }
    CHECK(rows[1].gates == 590);

    const auto small = bench_table(4);
    CHECK(small[3].depth == 5);
    CHECK(small[3].gates == 6);
    CHECK(small[3].avg_gates_per_ts == doctest::Approx(1.2));
    CHECK(small[3].avg_shuttle_per_ts == doctest::Approx(1.6));
}

TEST_CASE("bench_table renders to CSV and text") {
    const auto rows = bench_table(8);
    const std::string csv = bench_table_csv(rows);
    CHECK(csv.rfind("benchmark,depth,gates_2q", 0) == 0);
    CHECK(bench_table_text(rows).find("qft") != std::string::npos);
}

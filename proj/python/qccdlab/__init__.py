"""QCCD compilation laboratory.

Trap-level routing, scheduling and fidelity models for 1D-linear ion trap
arrays, plus the benchmark generators and sweep metrics used to study the
parallelism-vs-movement trade-off.
"""

from qccdlab._core import (  # noqa: F401
    BenchTableRow,
    Circuit,
    CircuitStats,
    DeviceParams,
    EventKind,
    FidelityReport,
    Gate,
    Layering,
    Placement,
    Schedule,
    ScheduleEvent,
    Topology,
    asap_layering,
    bench_table,
    coherence,
    cuccaro,
    delta_f,
    draper,
    gate_error,
    linear_topology,
    load_config,
    paired_placement,
    partner_change_counts,
    qaoa_complete,
    qft,
    random_parallel,
    route_greedy_minmove,
    route_naive_parallel,
    run_one,
    schedule_fidelity,
    sta_placement,
    stats,
    swap_error,
    validate_circuit,
    validate_schedule,
)

__version__ = "0.1.0"

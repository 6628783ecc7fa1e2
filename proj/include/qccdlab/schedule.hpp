#pragma once

#include <string>
#include <vector>

namespace qccd {

enum class EventKind { gate, swap, split, hop, merge };

const char* to_string(EventKind kind);

/// One timed event. Resource is a trap id for gate/swap/split/merge and a
/// segment id for hop. q1 is -1 for single-ion events (split/hop/merge).
struct ScheduleEvent {
    EventKind kind = EventKind::gate;
    int q0 = 0;
    int q1 = -1;
    int resource = 0;
    double start_us = 0.0;
    double duration_us = 0.0;

    double end_us() const { return start_us + duration_us; }
};

struct Placement; // compiler.hpp

/// Validated, resource-exclusive event timeline. Events are stored in
/// emission order; replay order is (start time, emission index).
struct Schedule {
    std::vector<ScheduleEvent> events;
    std::vector<std::pair<int, int>> initial_positions; // qubit -> (trap, pos)
    std::string router;
    std::string placement;

    double makespan_us() const;
    int count(EventKind kind) const;
    int movement_event_count() const; // swaps + splits + hops + merges
};

/// Schedule dump, one event per line:
///   kind q0 q1 resource start_us duration_us
/// preceded by "placement" lines ("q TRAP POS" per qubit). Byte-stable for
/// identical inputs.
std::string to_text(const Schedule& schedule);
Schedule schedule_from_text(const std::string& text);

} // namespace qccd

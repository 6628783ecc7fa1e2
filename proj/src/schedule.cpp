#include "qccdlab/schedule.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace qccd {

const char* to_string(EventKind kind) {
    switch (kind) {
    case EventKind::gate: return "gate";
    case EventKind::swap: return "swap";
    case EventKind::split: return "split";
    case EventKind::hop: return "hop";
    case EventKind::merge: return "merge";
    }
    return "?";
}

namespace {

EventKind kind_from_string(const std::string& s) {
    if (s == "gate") return EventKind::gate;
    if (s == "swap") return EventKind::swap;
    if (s == "split") return EventKind::split;
    if (s == "hop") return EventKind::hop;
    if (s == "merge") return EventKind::merge;
    throw std::invalid_argument("unknown event kind: " + s);
}

std::string format_time(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

} // namespace

double Schedule::makespan_us() const {
    double end = 0.0;
    for (const ScheduleEvent& ev : events) end = std::max(end, ev.end_us());
    return end;
}

int Schedule::count(EventKind kind) const {
    int n = 0;
    for (const ScheduleEvent& ev : events) n += ev.kind == kind ? 1 : 0;
    return n;
}

int Schedule::movement_event_count() const {
    return static_cast<int>(events.size()) - count(EventKind::gate);
}

std::string to_text(const Schedule& schedule) {
    std::ostringstream out;
    out << "router " << schedule.router << "\n";
    out << "placement-name " << schedule.placement << "\n";
    for (int q = 0; q < static_cast<int>(schedule.initial_positions.size()); ++q)
        out << "q " << q << " " << schedule.initial_positions[q].first << " "
            << schedule.initial_positions[q].second << "\n";
    for (const ScheduleEvent& ev : schedule.events)
        out << to_string(ev.kind) << " " << ev.q0 << " " << ev.q1 << " " << ev.resource << " "
            << format_time(ev.start_us) << " " << format_time(ev.duration_us) << "\n";
    return out.str();
}

Schedule schedule_from_text(const std::string& text) {
    Schedule schedule;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        std::string tok;
        ls >> tok;
        if (tok == "router") {
            ls >> schedule.router;
        } else if (tok == "placement-name") {
            ls >> schedule.placement;
        } else if (tok == "q") {
            int q = 0, trap = 0, pos = 0;
            if (!(ls >> q >> trap >> pos))
                throw std::invalid_argument("schedule text: bad placement line " +
                                            std::to_string(line_no));
            if (q != static_cast<int>(schedule.initial_positions.size()))
                throw std::invalid_argument("schedule text: placement lines out of order");
            schedule.initial_positions.emplace_back(trap, pos);
        } else {
            ScheduleEvent ev;
            ev.kind = kind_from_string(tok);
            if (!(ls >> ev.q0 >> ev.q1 >> ev.resource >> ev.start_us >> ev.duration_us))
                throw std::invalid_argument("schedule text: bad event line " +
                                            std::to_string(line_no));
            schedule.events.push_back(ev);
        }
    }
    return schedule;
}

} // namespace qccd

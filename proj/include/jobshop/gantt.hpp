#pragma once

#include <string>

#include "jobshop/schedule.hpp"

namespace jobshop {

// SVG Gantt chart: one horizontal lane per machine, one rectangle per
// operation at x = start, width = duration, labeled "J{job}.{op}".
// Coordinates are integer time units scaled by the viewBox, so the output
// bytes are a pure function of the schedule.
std::string emit_gantt(const Schedule& sched, const JsspInstance& inst);

}  // namespace jobshop

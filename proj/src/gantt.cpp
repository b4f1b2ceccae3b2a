#include "jobshop/gantt.hpp"

namespace jobshop {

namespace {

// Fixed palette cycled by job index; repeats past 12 jobs are fine, lane
// position and label carry the identity.
const char* const kPalette[] = {
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948",
    "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac", "#86bcb6", "#d37295",
};
constexpr int kPaletteSize = static_cast<int>(sizeof(kPalette) / sizeof(kPalette[0]));

constexpr int kLaneHeight = 28;
constexpr int kBarHeight = 22;
constexpr int kLeftMargin = 56;   // room for machine labels
constexpr int kTopMargin = 24;    // room for the time axis
constexpr int kRightMargin = 12;
constexpr int kBottomMargin = 8;

}  // namespace

std::string emit_gantt(const Schedule& sched, const JsspInstance& inst) {
  // x is in raw time units; the viewBox does the scaling so every coordinate
  // stays an exact integer and the bytes depend only on the schedule.
  const int width = kLeftMargin + sched.makespan + kRightMargin;
  const int height = kTopMargin + inst.n_machines * kLaneHeight + kBottomMargin;

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " +
         std::to_string(width) + " " + std::to_string(height) + "\">\n";
  svg += "<style>text{font-family:monospace;font-size:9px;}</style>\n";
  svg += "<text x=\"" + std::to_string(kLeftMargin) +
         "\" y=\"12\">makespan " + std::to_string(sched.makespan) + "</text>\n";

  for (int m = 0; m < inst.n_machines; ++m) {
    const int lane_y = kTopMargin + m * kLaneHeight;
    svg += "<text x=\"4\" y=\"" +
           std::to_string(lane_y + kBarHeight / 2 + 3) + "\">M" +
           std::to_string(m) + "</text>\n";
    svg += "<line x1=\"" + std::to_string(kLeftMargin) + "\" y1=\"" +
           std::to_string(lane_y + kLaneHeight - 2) + "\" x2=\"" +
           std::to_string(kLeftMargin + sched.makespan) + "\" y2=\"" +
           std::to_string(lane_y + kLaneHeight - 2) +
           "\" stroke=\"#ddd\" stroke-width=\"1\"/>\n";
  }

  for (int j = 0; j < inst.n_jobs; ++j) {
    for (int k = 0; k < inst.n_machines; ++k) {
      const Step step = inst.routing[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
      const OpTimes t = sched.times[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
      const int x = kLeftMargin + t.start;
      const int y = kTopMargin + step.machine * kLaneHeight;
      svg += "<rect x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) +
             "\" width=\"" + std::to_string(t.completion - t.start) + "\" height=\"" +
             std::to_string(kBarHeight) + "\" fill=\"" +
             kPalette[j % kPaletteSize] + "\" stroke=\"#333\" stroke-width=\"1\"/>\n";
      svg += "<text x=\"" + std::to_string(x + 2) + "\" y=\"" +
             std::to_string(y + kBarHeight / 2 + 3) + "\">J" +
             std::to_string(j) + "." + std::to_string(k) + "</text>\n";
    }
  }

  svg += "</svg>\n";
  return svg;
}

}  // namespace jobshop

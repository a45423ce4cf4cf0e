#pragma once

// Text output: locale-independent 17-significant-digit numbers, sweep CSV
// (header eps_x[,eps_y],infidelity, row-major over (y, x), LF endings) and
// Bloch-trajectory CSV (header stage,t,x,y,z).

#include "parity.hpp"
#include "robustness.hpp"

#include <charconv>
#include <ostream>
#include <string>

namespace dicke {

inline std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v,
                                 std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

inline void write_sweep_csv(std::ostream& os, const SweepGrid& grid) {
  const bool two_d = grid.axes.size() == 2;
  os << (two_d ? "eps_x,eps_y,infidelity\n" : "eps_x,infidelity\n");
  if (two_d) {
    const AxisSpec& ax = grid.axes[0];
    const AxisSpec& ay = grid.axes[1];
    std::size_t idx = 0;
    for (int iy = 0; iy < ay.steps; ++iy)
      for (int ix = 0; ix < ax.steps; ++ix)
        os << format_double(ax.value(ix)) << ',' << format_double(ay.value(iy))
           << ',' << format_double(grid.values[idx++]) << '\n';
  } else {
    const AxisSpec& ax = grid.axes[0];
    for (int ix = 0; ix < ax.steps; ++ix)
      os << format_double(ax.value(ix)) << ',' << format_double(grid.values[ix])
         << '\n';
  }
}

inline void write_trajectory_csv(std::ostream& os,
                                 const std::vector<BlochSample>& trajectory) {
  os << "stage,t,x,y,z\n";
  for (const BlochSample& s : trajectory)
    os << s.stage << ',' << format_double(s.t) << ',' << format_double(s.point.x)
       << ',' << format_double(s.point.y) << ',' << format_double(s.point.z)
       << '\n';
}

}  // namespace dicke

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "lab.hpp"

namespace mackey::lab {

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string tag(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << text;
}

std::string heatmap_svg(const std::vector<double>& values, int side, double lo, double hi) {
  // Eight stops sampled from the viridis map.
  static constexpr std::array<std::array<int, 3>, 8> kRamp = {{{68, 1, 84},
                                                              {70, 50, 126},
                                                              {54, 92, 141},
                                                              {39, 127, 142},
                                                              {31, 161, 135},
                                                              {74, 193, 109},
                                                              {160, 218, 57},
                                                              {253, 231, 37}}};
  const int cell = 4;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side * cell << "\" height=\"" << side * cell
     << "\" shape-rendering=\"crispEdges\">\n";
  for (int i = 0; i < side; ++i) {
    for (int j = 0; j < side; ++j) {
      const double v = values[static_cast<std::size_t>(i) * side + j];
      double u = hi > lo ? (v - lo) / (hi - lo) : 0.5;
      u = std::clamp(u, 0.0, 1.0) * (kRamp.size() - 1);
      const auto k = std::min<std::size_t>(static_cast<std::size_t>(u), kRamp.size() - 2);
      const double f = u - static_cast<double>(k);
      int rgb[3];
      for (int c = 0; c < 3; ++c) {
        rgb[c] = static_cast<int>(std::lround((1 - f) * kRamp[k][static_cast<std::size_t>(c)] +
                                              f * kRamp[k + 1][static_cast<std::size_t>(c)]));
      }
      // x to the right, y upwards.
      os << "<rect x=\"" << i * cell << "\" y=\"" << (side - 1 - j) * cell << "\" width=\"" << cell
         << "\" height=\"" << cell << "\" fill=\"rgb(" << rgb[0] << "," << rgb[1] << "," << rgb[2] << ")\"/>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace mackey::lab

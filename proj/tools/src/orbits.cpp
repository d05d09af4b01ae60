#include <array>
#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>

#include "lab.hpp"
#include "mackey/deformation.hpp"
#include "mackey/sl2.hpp"

namespace mackey::lab {
namespace {

// Coordinates of X in the basis (W, h, s).
std::array<double, 3> wxy(const Matrix& m) {
  return {0.5 * (m(0, 1) - m(1, 0)), 0.5 * (m(0, 0) - m(1, 1)), 0.5 * (m(0, 1) + m(1, 0))};
}

}  // namespace

int cmd_orbits(const OrbitsOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.samples < 2) {
    err << "error: --samples must be at least 2\n";
    return kExitUsage;
  }
  for (double t : opt.t_list) {
    if (!(t > 0.0)) {
      err << "error: orbit parameters must be > 0\n";
      return kExitUsage;
    }
  }
  const AlgebraElement lambda0(sl2::w_mat());
  // Ad_{G_t}(k, v) fixes lambda0 under k, so sample v on a polar grid.
  std::ostringstream csv;
  csv << "t,orbit_w,orbit_x,orbit_y,image_w,image_x,image_y,trace_residual\n";
  double worst = 0.0;
  for (double t : opt.t_list) {
    std::vector<DeformedElement> samples;
    for (int i = 0; i < opt.samples; ++i) {
      const double r = 1.5 * i / (opt.samples - 1);
      for (int j = 0; j < opt.samples; ++j) {
        const double phi = 2.0 * std::numbers::pi * j / opt.samples;
        samples.push_back(make_deformed(Matrix::Identity(2, 2), sl2::p_element(r * std::cos(phi), r * std::sin(phi)), t));
      }
    }
    for (const OrbitSample& s : adjoint_orbit_map(lambda0, t, samples)) {
      const auto o = wxy(s.orbit_point.matrix());
      const auto im = wxy(s.image.matrix());
      csv << format_double(t) << ',' << format_double(o[0]) << ',' << format_double(o[1]) << ','
          << format_double(o[2]) << ',' << format_double(im[0]) << ',' << format_double(im[1]) << ','
          << format_double(im[2]) << ',' << format_double(s.trace_residual) << '\n';
      worst = std::max(worst, s.trace_residual);
    }
  }
  write_text(opt.out / "orbits.csv", csv.str());
  out << "wrote " << (opt.out / "orbits.csv").string() << "; max trace residual " << format_double(worst) << "\n";
  return worst <= 1e-8 ? kExitOk : kExitFailed;
}

}  // namespace mackey::lab

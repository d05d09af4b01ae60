#include <algorithm>
#include <ostream>
#include <sstream>

#include "lab.hpp"
#include "mackey/errors.hpp"
#include "mackey/principal_series.hpp"

namespace mackey::lab {

int cmd_waves(const WavesOptions& opt, std::ostream& out, std::ostream& err) {
  const PGrid grid{opt.box_min, opt.box_max, opt.step};
  try {
    grid.side();
    for (double t : opt.t_list)
      if (t < 0.0) throw InvalidArgument("t must be >= 0");
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  const AlgebraElement lambda = sl2::functional(opt.lambda);
  const std::vector<sl2::P2> pts = grid.points();
  for (double t : opt.t_list) {
    std::ostringstream csv;
    csv << "x,y,re,im\n";
    std::vector<double> re;
    re.reserve(pts.size());
    for (const auto& p : pts) {
      const Complex w = contracted_wave({lambda, opt.b, t}, p);
      csv << format_double(p.x) << ',' << format_double(p.y) << ',' << format_double(w.real()) << ','
          << format_double(w.imag()) << '\n';
      re.push_back(w.real());
    }
    const std::string stem = "wave_lambda" + tag(opt.lambda) + "_t" + tag(t);
    write_text(opt.out / (stem + ".csv"), csv.str());
    if (opt.svg) {
      const auto [lo, hi] = std::minmax_element(re.begin(), re.end());
      write_text(opt.out / (stem + ".svg"), heatmap_svg(re, grid.side(), *lo, *hi));
    }
    out << "wrote " << (opt.out / (stem + ".csv")).string() << "\n";
  }
  return kExitOk;
}

}  // namespace mackey::lab

#include "sortnet/svg.hpp"

#include <fstream>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace sortnet {

namespace {

constexpr double kMargin = 36.0;
constexpr double kStepX = 26.0;
constexpr double kStepY = 26.0;

double wire_y(int pos) { return kMargin + (pos - 1) * kStepY; }
double time_x(int t) { return kMargin + t * kStepX; }

}  // namespace

void write_wiring_diagram(const SortingNetwork& net, std::ostream& out) {
  if (!validate(net)) throw std::invalid_argument("invalid sorting network");
  const int n = net.n;
  const int N = net.length();

  const double width = time_x(N) + kMargin;
  const double height = wire_y(n) + kMargin - kStepY + kMargin;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
      << height << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Track each particle's position through time; wire i is the polyline of
  // particle i. Wire 1 starts at the top.
  std::vector<int> pos(static_cast<size_t>(n) + 1);
  std::iota(pos.begin(), pos.end(), 0);
  std::vector<std::vector<int>> track(static_cast<size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) track[i].push_back(pos[i]);
  std::vector<int> conf(static_cast<size_t>(n) + 1);
  std::iota(conf.begin(), conf.end(), 0);
  for (int s : net.swaps) {
    std::swap(conf[s], conf[s + 1]);
    std::swap(pos[conf[s]], pos[conf[s + 1]]);
    for (int i = 1; i <= n; ++i) track[i].push_back(pos[i]);
  }

  out << "<g fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" "
         "stroke-linejoin=\"round\">\n";
  for (int i = 1; i <= n; ++i) {
    out << "<polyline points=\"";
    for (int t = 0; t <= N; ++t)
      out << time_x(t) << ',' << wire_y(track[i][t]) << ' ';
    out << "\"/>\n";
  }
  out << "</g>\n";

  // One marker per swap, halfway through the crossing.
  out << "<g class=\"swaps\">\n";
  for (int t = 1; t <= N; ++t) {
    const double cx = (time_x(t - 1) + time_x(t)) / 2;
    const double cy = (wire_y(net.swaps[t - 1]) + wire_y(net.swaps[t - 1] + 1)) / 2;
    out << "<circle class=\"swap\" cx=\"" << cx << "\" cy=\"" << cy
        << "\" r=\"2\" fill=\"black\"/>\n";
  }
  out << "</g>\n";

  out << "<g font-family=\"sans-serif\" font-size=\"13\" fill=\"black\">\n";
  for (int i = 1; i <= n; ++i) {
    out << "<text x=\"" << kMargin - 10 << "\" y=\"" << wire_y(i) + 4
        << "\" text-anchor=\"end\">" << i << "</text>\n";
    out << "<text x=\"" << time_x(N) + 10 << "\" y=\""
        << wire_y(track[i][N]) + 4 << "\">" << i << "</text>\n";
  }
  out << "</g>\n</svg>\n";
}

void write_wiring_diagram_file(const SortingNetwork& net, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write diagram file: " + path);
  write_wiring_diagram(net, out);
  out.flush();
  if (!out) throw std::runtime_error("error while writing diagram file: " + path);
}

}  // namespace sortnet

#include "sortnet/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "sortnet/rational.hpp"

namespace sortnet::geom {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTieTolerance = 1e-12;

struct AngledPair {
  double angle;
  int i;  // 1-based labels, i < j
  int j;
};

std::vector<AngledPair> angled_pairs(const PointSet& ps) {
  const int m = ps.size();
  std::vector<AngledPair> pairs;
  pairs.reserve(static_cast<size_t>(swap_count(m)));
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      pairs.push_back({pair_swap_angle(ps[i], ps[j]), i, j});
  std::sort(pairs.begin(), pairs.end(),
            [](const AngledPair& a, const AngledPair& b) { return a.angle < b.angle; });
  return pairs;
}

void require_distinct_angles(const std::vector<AngledPair>& pairs) {
  for (size_t t = 1; t < pairs.size(); ++t)
    if (pairs[t].angle - pairs[t - 1].angle < kTieTolerance)
      throw DegenerateConfiguration("two pairs share a swap angle");
}

// Adaptive Gauss-Kronrod G7/K15 bisection.
struct GkResult {
  double value;
  double error;
};

template <class F>
GkResult gk15(const F& f, double a, double b) {
  static constexpr double xgk[8] = {
      0.991455371120813, 0.949107912342759, 0.864864423359769,
      0.741531185599394, 0.586087235467691, 0.405845151377397,
      0.207784955007898, 0.0};
  static constexpr double wgk[8] = {
      0.022935322010529, 0.063092092629979, 0.104790010322250,
      0.140653259715525, 0.169004726639267, 0.190350578064785,
      0.204432940075298, 0.209482141084728};
  static constexpr double wg[4] = {
      0.129484966168870, 0.279705391489277, 0.381830050505119,
      0.417959183673469};

  const double mid = (a + b) / 2;
  const double half = (b - a) / 2;
  const double fc = f(mid);
  double kronrod = wgk[7] * fc;
  double gauss = wg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double lo = f(mid - half * xgk[i]);
    const double hi = f(mid + half * xgk[i]);
    kronrod += wgk[i] * (lo + hi);
    if (i % 2 == 1) gauss += wg[i / 2] * (lo + hi);
  }
  kronrod *= half;
  gauss *= half;
  return {kronrod, std::abs(kronrod - gauss)};
}

template <class F>
double adaptive_quadrature(const F& f, double a, double b, double abs_tol) {
  struct Segment {
    double a, b, tol;
    int depth;
  };
  std::vector<Segment> stack{{a, b, abs_tol, 0}};
  double total = 0;
  while (!stack.empty()) {
    const Segment seg = stack.back();
    stack.pop_back();
    const GkResult r = gk15(f, seg.a, seg.b);
    if (r.error <= seg.tol || seg.depth >= 48) {
      total += r.value;
      continue;
    }
    const double mid = (seg.a + seg.b) / 2;
    stack.push_back({seg.a, mid, seg.tol / 2, seg.depth + 1});
    stack.push_back({mid, seg.b, seg.tol / 2, seg.depth + 1});
  }
  return total;
}

double binomial_d(int n, int k) { return binomial(static_cast<unsigned long>(n),
                                                  static_cast<unsigned long>(k)).get_d(); }

}  // namespace

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
  if (points_.size() < 2) throw std::invalid_argument("point set needs m >= 2 points");
  for (const Point& p : points_)
    if (p.x * p.x + p.y * p.y >= 1.0)
      throw std::invalid_argument("points must lie strictly inside the unit disc");
  std::sort(points_.begin(), points_.end(),
            [](const Point& a, const Point& b) { return a.x < b.x; });
  for (size_t i = 1; i < points_.size(); ++i)
    if (points_[i].x - points_[i - 1].x < kTieTolerance)
      throw DegenerateConfiguration("two points share a vertical line");
  // Swap-angle ties also cover three collinear points, whose pairs would
  // share a common perpendicular.
  require_distinct_angles(angled_pairs(*this));
}

std::string to_csv(const PointSet& ps) {
  std::ostringstream out;
  out.precision(17);
  for (const Point& p : ps.points()) out << p.x << ',' << p.y << '\n';
  return out.str();
}

PointSet point_set_from_csv(std::istream& in) {
  std::vector<Point> pts;
  std::string line;
  while (std::getline(in, line)) {
    std::string cleaned = line;
    std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
    if (cleaned.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(cleaned);
    Point p;
    if (!(fields >> p.x >> p.y)) {
      if (pts.empty()) continue;  // tolerate a header row
      throw std::invalid_argument("bad point row: " + line);
    }
    pts.push_back(p);
  }
  return PointSet(std::move(pts));
}

PointSet point_set_from_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open point file: " + path);
  return point_set_from_csv(in);
}

ArchimedesSample sample_archimedes(int m, Rng& rng) {
  if (m < 2) throw std::invalid_argument("sample_archimedes needs m >= 2");
  int resamples = 0;
  for (;;) {
    std::vector<Point> pts;
    pts.reserve(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
      // Uniform point on the sphere, third coordinate dropped.
      const double z = 2.0 * rng.unit() - 1.0;
      const double phi = 2.0 * kPi * rng.unit();
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      pts.push_back({r * std::cos(phi), r * std::sin(phi)});
    }
    try {
      return {PointSet(std::move(pts)), resamples};
    } catch (const DegenerateConfiguration&) {
      ++resamples;
    } catch (const std::invalid_argument&) {
      ++resamples;  // point on the disc boundary (measure zero)
    }
  }
}

double pair_swap_angle(const Point& a, const Point& b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  if (dx == 0.0 && dy == 0.0)
    throw DegenerateConfiguration("coincident points have no swap angle");
  // Direction perpendicular to the segment, reduced mod pi into (0, pi].
  double theta = std::atan2(dx, -dy);
  if (theta <= 0) theta += kPi;
  return theta;
}

std::vector<double> swap_angles(const PointSet& ps) {
  const auto pairs = angled_pairs(ps);
  std::vector<double> angles;
  angles.reserve(pairs.size());
  for (const auto& p : pairs) angles.push_back(p.angle);
  return angles;
}

SortingNetwork geometric_network(const PointSet& ps) {
  const int m = ps.size();
  const auto pairs = angled_pairs(ps);
  require_distinct_angles(pairs);

  std::vector<int> position(static_cast<size_t>(m) + 1);  // label -> position
  std::iota(position.begin(), position.end(), 0);
  SortingNetwork net;
  net.n = m;
  net.swaps.reserve(pairs.size());
  for (const auto& pair : pairs) {
    const int pi = position[pair.i];
    const int pj = position[pair.j];
    if (pi - pj != 1 && pj - pi != 1)
      throw DegenerateConfiguration("swapping pair is not adjacent");
    net.swaps.push_back(std::min(pi, pj));
    std::swap(position[pair.i], position[pair.j]);
  }
  if (!validate(net))
    throw DegenerateConfiguration("replayed swaps do not form a sorting network");
  return net;
}

double pair_projection_distance(const PointSet& ps, int i, int j) {
  if (i == j) throw std::invalid_argument("need two distinct labels");
  if (i > j) std::swap(i, j);
  const Point& a = ps[i];
  const Point& b = ps[j];
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double length = std::hypot(dx, dy);
  if (length == 0.0) throw DegenerateConfiguration("coincident points");
  // cross(b - a, origin - a) / |b - a|: positive iff the origin lies to the
  // left of the directed segment.
  return (dx * (-a.y) - dy * (-a.x)) / length;
}

double archimedes_expected_swaps(int m, int j) {
  if (m < 2) throw std::invalid_argument("need m >= 2");
  if (j < 1 || j > m - 1) throw std::invalid_argument("location out of range");
  const double scale = binomial_d(m, 2) * binomial_d(m - 2, j - 1) * 2.0 / kPi;
  // Swap location is j iff j-1 of the other m-2 uniform projections land
  // left of the semicircle-distributed meeting point r; substituting
  // r = cos(phi) removes the square-root endpoint behaviour.
  const auto integrand = [=](double phi) {
    const double r = std::cos(phi);
    const double s = std::sin(phi);
    return scale * std::pow((1.0 + r) / 2.0, j - 1) *
           std::pow((1.0 - r) / 2.0, m - j - 1) * s * s;
  };
  return adaptive_quadrature(integrand, 0.0, kPi, 1e-11);
}

BetaEval beta_integral(int j, int m) {
  if (j < 1 || j > m - 1) throw std::invalid_argument("need 1 <= j <= m-1");
  BetaEval out;
  // t = sin^2(u) turns the integrand into a smooth trigonometric one.
  const auto integrand = [=](double u) {
    const double s = std::sin(u);
    const double c = std::cos(u);
    return 2.0 * std::pow(s, 2 * j) * std::pow(c, 2 * (m - j));
  };
  out.quadrature = adaptive_quadrature(integrand, 0.0, kPi / 2, 1e-15);
  // Gamma(k + 1/2) = (2k)! sqrt(pi) / (4^k k!); the pi factor is exact.
  Rational ratio(factorial(static_cast<unsigned long>(2 * j)) *
                     factorial(static_cast<unsigned long>(2 * (m - j))),
                 factorial(static_cast<unsigned long>(j)) *
                     factorial(static_cast<unsigned long>(m - j)) *
                     factorial(static_cast<unsigned long>(m)));
  ratio.canonicalize();
  BigInt four_pow_m = BigInt(1) << (2 * m);
  out.gamma_form = kPi * Rational(ratio / Rational(four_pow_m)).get_d();
  return out;
}

mc::Estimate mc_swap_expectation(int m, int j, int64_t samples,
                                 std::uint64_t seed, int workers) {
  if (m < 2) throw std::invalid_argument("need m >= 2");
  if (j < 1 || j > m - 1) throw std::invalid_argument("location out of range");
  return mc::run_parallel(samples, seed, workers, [&](Rng& rng, mc::Welford& acc) {
    const SortingNetwork net = geometric_network(sample_archimedes(m, rng).points);
    acc.add(static_cast<double>(std::count(net.swaps.begin(), net.swaps.end(), j)));
  }).estimate();
}

std::pair<std::vector<double>, std::vector<double>>
first_and_second_swap_frequencies(int m, int64_t samples, std::uint64_t seed,
                                  int workers) {
  if (m < 3) throw std::invalid_argument("second swap needs m >= 3");
  struct Acc {
    std::vector<int64_t> first, second;
    int64_t samples = 0;
  };
  Acc init{std::vector<int64_t>(static_cast<size_t>(m) - 1, 0),
           std::vector<int64_t>(static_cast<size_t>(m) - 1, 0), 0};
  const Acc folded = mc::parallel_fold(
      samples, seed, workers, init,
      [&](Rng& rng, Acc& acc) {
        const SortingNetwork net = geometric_network(sample_archimedes(m, rng).points);
        ++acc.first[static_cast<size_t>(net.swaps[0]) - 1];
        ++acc.second[static_cast<size_t>(net.swaps[1]) - 1];
        ++acc.samples;
      },
      [](Acc a, const Acc& b) {
        for (size_t i = 0; i < a.first.size(); ++i) {
          a.first[i] += b.first[i];
          a.second[i] += b.second[i];
        }
        a.samples += b.samples;
        return a;
      });
  std::vector<double> f1, f2;
  for (size_t i = 0; i + 1 < static_cast<size_t>(m); ++i) {
    f1.push_back(static_cast<double>(folded.first[i]) / static_cast<double>(folded.samples));
    f2.push_back(static_cast<double>(folded.second[i]) / static_cast<double>(folded.samples));
  }
  return {f1, f2};
}

}  // namespace sortnet::geom

#pragma once

#include <iosfwd>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sortnet/montecarlo.hpp"
#include "sortnet/network.hpp"
#include "sortnet/rng.hpp"

// Geometric sorting networks: points in the unit disc swap as the projection
// direction rotates through a half-turn. Under the Archimedes density
// (vertical projection of the uniform sphere measure) the per-location swap
// expectation reproduces the subnetwork closed form; this module checks that
// numerically via quadrature and by direct simulation.
namespace sortnet::geom {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

struct DegenerateConfiguration : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// m >= 2 planar points inside the open unit disc in general position,
// labeled 1..m by increasing horizontal coordinate. Construction rejects
// (throws DegenerateConfiguration) vertical ties and swap-angle ties within
// 1e-12, which also excludes collinear triples.
class PointSet {
 public:
  explicit PointSet(std::vector<Point> points);

  int size() const { return static_cast<int>(points_.size()); }
  const Point& operator[](int label) const { return points_[label - 1]; }  // 1-based
  const std::vector<Point>& points() const { return points_; }

 private:
  std::vector<Point> points_;
};

std::string to_csv(const PointSet& ps);                // "x,y" per row
PointSet point_set_from_csv(std::istream& in);
PointSet point_set_from_csv_file(const std::string& path);

struct ArchimedesSample {
  PointSet points;
  int resamples = 0;  // degenerate draws discarded before success
};

// m independent points with density 1/(2 pi sqrt(1-x^2-y^2)): a uniform
// point on the sphere with the third coordinate dropped. Degenerate
// configurations (probability zero) are resampled and counted.
ArchimedesSample sample_archimedes(int m, Rng& rng);

// The angle in (0, pi) at which the projections of the pair coincide, i.e.
// the direction perpendicular to their segment.
double pair_swap_angle(const Point& a, const Point& b);

// All C(m,2) pairwise swap angles, ascending.
std::vector<double> swap_angles(const PointSet& ps);

// Replays the swaps in angle order starting from the horizontal-projection
// order. The result always validates as an m-particle network.
SortingNetwork geometric_network(const PointSet& ps);

// Signed distance from the origin to the line through points i and j
// (1-based labels, i != j); positive when the origin lies to the left of the
// directed segment from lower to higher label. Semicircle-distributed for
// Archimedes pairs.
double pair_projection_distance(const PointSet& ps, int i, int j);

// Expected swaps at location j among m Archimedes points, by adaptive
// quadrature of the semicircle mixture to 1e-10 absolute; agrees with
// exact::expected_swaps(m, j) to 1e-8.
double archimedes_expected_swaps(int m, int j);

// int_0^1 t^(j-1/2) (1-t)^(m-j-1/2) dt, evaluated two independent ways.
struct BetaEval {
  double quadrature = 0.0;
  double gamma_form = 0.0;  // Gamma(j+1/2)Gamma(m-j+1/2)/Gamma(m+1)
};
BetaEval beta_integral(int j, int m);

// Mean +- SE of #{t: s_t = j} over independent Archimedes point sets.
mc::Estimate mc_swap_expectation(int m, int j, int64_t samples,
                                 std::uint64_t seed, int workers = 1);

// Empirical laws of the first and second swap locations of the geometric
// network (index 0 holds location 1). Stationarity appears to fail here;
// this is a report, not an assertion.
std::pair<std::vector<double>, std::vector<double>>
first_and_second_swap_frequencies(int m, int64_t samples, std::uint64_t seed,
                                  int workers = 1);

}  // namespace sortnet::geom

#include "ringlab/density.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "ringlab/errors.hpp"

namespace ringlab::analytic {

namespace {

constexpr double kPi = std::numbers::pi;

// Cumulative mass fraction below radius r for the smooth single-ring density:
// 2 pi / N * int_a^r r' R1(r') dr' = t V'(t) - a^2 V'(a^2) with t = r^2.
double mass_fn(const Potential& p, double t) { return t * p.eval(t).v1; }

struct SupportGrid {
  double t_lo;   // exclusive lower edge (0 unless the potential diverges there)
  double t_hi;   // scan upper edge in t
  bool bounded;  // true when t_hi is the natural support edge
};

// Picks the t-range the radius search scans. Unbounded supports are expanded
// until the ring capacity comfortably exceeds one unit of mass fraction.
SupportGrid scan_range(const Potential& p) {
  const double t_max = p.support_t_max();
  if (std::isfinite(t_max)) return {0.0, t_max, true};
  double hi = 4.0;
  for (int i = 0; i < 64; ++i) {
    if (p.eval(hi).v1 * hi > 8.0) return {0.0, hi, false};
    hi *= 2.0;
  }
  throw InfeasibleRingError("ring_radii: confining force never builds up mass",
                            0.0, 1.0);
}

double bisect(const std::function<double(double)>& f, double lo, double hi,
              double tol) {
  double flo = f(lo);
  for (int i = 0; i < 200 && hi - lo > tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((flo <= 0.0) == (fm <= 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

RingRadii ring_radii(const Potential& p, int n) {
  if (n < 1) throw std::invalid_argument("ring_radii: n must be positive");
  const SupportGrid grid = scan_range(p);
  const int kScan = 4096;
  const double dt = (grid.t_hi - grid.t_lo) / kScan;

  // Inner radius: largest ascending zero of V', or 0 when V' >= 0 from the
  // start. Scan in t, refine sign changes by bisection.
  double t_a = -1.0;
  {
    double t_prev = grid.t_lo + 0.5 * dt;
    double v1_prev = p.eval(t_prev).v1;
    for (int i = 1; i < kScan; ++i) {
      const double t = grid.t_lo + (i + 0.5) * dt;
      const double v1 = p.eval(t).v1;
      if (v1_prev < 0.0 && v1 >= 0.0) {
        t_a = bisect([&](double x) { return p.eval(x).v1; }, t_prev, t, 1e-14 * (1.0 + t));
      }
      t_prev = t;
      v1_prev = v1;
    }
    if (t_a < 0.0) {
      const double v1_origin = p.eval(grid.t_lo + 1e-12 * (1.0 + dt)).v1;
      if (v1_origin >= 0.0) {
        t_a = 0.0;
      } else {
        throw InfeasibleRingError("ring_radii: V' < 0 up to the support edge",
                                  0.0, static_cast<double>(n));
      }
    }
  }
  const double a = std::sqrt(std::max(0.0, t_a));
  const double base = t_a > 0.0 ? mass_fn(p, t_a) : 0.0;

  // Monotonicity cap: the ring must stay where V' is nondecreasing.
  double t_cap = grid.t_hi;
  {
    const int kMono = 4096;
    const double lo = std::max(t_a, grid.t_lo) + 1e-12;
    const double dm = (grid.t_hi - lo) / kMono;
    if (dm > 0.0) {
      double t_prev = lo;
      double v2_prev = p.eval(t_prev).v2;
      for (int i = 1; i <= kMono; ++i) {
        const double t = lo + i * dm;
        const double v2 = p.eval(std::min(t, grid.t_hi - 1e-12 * grid.t_hi)).v2;
        if (v2_prev >= 0.0 && v2 < 0.0) {
          t_cap = bisect([&](double x) { return p.eval(x).v2; }, t_prev, t, 1e-13 * (1.0 + t));
          break;
        }
        t_prev = t;
        v2_prev = v2;
      }
    }
  }

  // Outer radius from the normalization condition: mass fraction reaches 1
  // before the monotone region (or the support) ends.
  const double eps_edge = grid.bounded ? 1e-12 * std::max(1.0, t_cap) : 0.0;
  const double t_edge = std::min(t_cap, grid.t_hi) - eps_edge;
  const double capacity = mass_fn(p, t_edge) - base;
  if (capacity < 1.0) {
    std::ostringstream msg;
    msg << "ring_radii: ring from a = " << a << " holds only "
        << capacity * n << " of " << n << " eigenvalues inside the support";
    throw InfeasibleRingError(msg.str(), capacity * n, static_cast<double>(n));
  }
  const double r_lo = a;
  const double r_hi = std::sqrt(t_edge);
  const double b = bisect(
      [&](double r) { return mass_fn(p, r * r) - base - 1.0; }, r_lo, r_hi,
      1e-10);
  return {a, b};
}

AnnulusDensity::AnnulusDensity(Potential p, int n)
    : potential_(std::move(p)), n_(n), radii_(ring_radii(potential_, n)) {}

double AnnulusDensity::operator()(double r) const {
  if (r < radii_.a || r > radii_.b) return 0.0;
  const double t = r * r;
  const PotentialDerivs d = potential_.eval(t);
  return (n_ / kPi) * (d.v1 + t * d.v2);
}

double density_r1(const Potential& p, int n, double r) {
  return AnnulusDensity(p, n)(r);
}

double RadialProfile::mass() const {
  double m = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    m += values[i] * kPi * (edges[i + 1] * edges[i + 1] - edges[i] * edges[i]);
  }
  for (const auto& [r, w] : point_masses) m += w;
  return m;
}

double RadialProfile::value_at(double r) const {
  if (edges.empty() || r < edges.front() || r >= edges.back()) return 0.0;
  const auto it = std::upper_bound(edges.begin(), edges.end(), r);
  const std::size_t i = static_cast<std::size_t>(it - edges.begin()) - 1;
  return values[std::min(i, values.size() - 1)];
}

namespace {

// Bin-averaged profile of the smooth ring density over [r_lo, r_hi]; bin
// masses use the exact antiderivative t V'(t), so the profile mass matches
// the analytic mass to rounding.
RadialProfile binned_ring(const Potential& p, int n, double r_lo, double r_hi,
                          int n_bins) {
  RadialProfile prof;
  prof.matrix_dim = n;
  prof.edges.resize(n_bins + 1);
  prof.values.resize(n_bins);
  for (int i = 0; i <= n_bins; ++i)
    prof.edges[i] = r_lo + (r_hi - r_lo) * i / n_bins;
  for (int i = 0; i < n_bins; ++i) {
    const double t0 = prof.edges[i] * prof.edges[i];
    const double t1 = prof.edges[i + 1] * prof.edges[i + 1];
    const double mass = n * (mass_fn(p, t1) - mass_fn(p, t0));
    prof.values[i] = mass / (kPi * (t1 - t0));
  }
  return prof;
}

}  // namespace

RadialProfile sample_profile(const AnnulusDensity& density, int n_bins) {
  const RingRadii& rr = density.radii();
  return binned_ring(density.potential(), density.matrix_dim(), rr.a, rr.b,
                     n_bins);
}

RadialProfile bounded_density(const Potential& p, int n,
                              std::pair<double, double> walls, int n_bins) {
  const auto [r1, r2] = walls;
  if (!(r1 >= 0.0) || !(r1 < r2))
    throw std::invalid_argument("bounded_density: need 0 <= r1 < r2");
  if (n_bins < 1) throw std::invalid_argument("bounded_density: n_bins < 1");

  const RingRadii rr = ring_radii(p, n);
  const bool inner_active = r1 > rr.a;
  const bool outer_active = r2 < rr.b;

  const double lo = std::max(rr.a, r1);
  const double hi = std::min(rr.b, r2);
  if (!(lo < hi))
    throw std::invalid_argument(
        "bounded_density: walls leave no smooth support inside the ring");

  RadialProfile prof = binned_ring(p, n, lo, hi, n_bins);

  // Mass that the smooth density would have carried outside the walls piles
  // up on them. Wall deltas sit on the edge of the radial integration range
  // and count at half weight, which is what keeps the total mass at N.
  double m_inner = 0.0;
  double m_outer = 0.0;
  if (inner_active) m_inner = n * r1 * r1 * p.eval(r1 * r1).v1;
  if (outer_active) m_outer = n * (1.0 - r2 * r2 * p.eval(r2 * r2).v1);
  prof.point_masses.emplace_back(r1, m_inner);
  prof.point_masses.emplace_back(r2, m_outer);
  return prof;
}

}  // namespace ringlab::analytic

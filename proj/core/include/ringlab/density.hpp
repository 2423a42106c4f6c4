#ifndef RINGLAB_DENSITY_HPP
#define RINGLAB_DENSITY_HPP

#include <utility>
#include <vector>

#include "ringlab/potential.hpp"

namespace ringlab::analytic {

// Support annulus [a, b] of the large-N eigenvalue density; a = 0 for a disk.
struct RingRadii {
  double a;
  double b;
};

// Ring radii for the single-ring large-N density: a is the largest radius
// beyond which V'(t) is nonnegative and nondecreasing, b closes the
// normalization. Throws InfeasibleRingError when the ring cannot hold all
// eigenvalues inside the support.
RingRadii ring_radii(const Potential& p, int n);

// Large-N smooth density R1(r) = (N/pi) [V'(r^2) + r^2 V''(r^2)] on [a, b],
// zero outside. Radii are computed once at construction.
class AnnulusDensity {
 public:
  AnnulusDensity(Potential p, int n);

  double operator()(double r) const;
  const RingRadii& radii() const { return radii_; }
  int matrix_dim() const { return n_; }
  const Potential& potential() const { return potential_; }

 private:
  Potential potential_;
  int n_;
  RingRadii radii_;
};

// Convenience wrapper around AnnulusDensity for a single evaluation.
double density_r1(const Potential& p, int n, double r);

// Binned radial density: either a histogram estimate or a sampled analytic
// curve. Values are eigenvalues per unit area; point masses carry the
// hard-wall accumulations as (radius, expected count) pairs.
struct RadialProfile {
  std::vector<double> edges;   // n_bins + 1 ascending radii
  std::vector<double> values;  // n_bins densities
  std::vector<std::pair<double, double>> point_masses;
  int matrix_dim = 0;

  std::size_t n_bins() const { return values.size(); }
  double center(std::size_t i) const { return 0.5 * (edges[i] + edges[i + 1]); }
  // Total mass: area integral of the smooth part plus point masses.
  double mass() const;
  // Smooth density at radius r (0 outside the binned range).
  double value_at(double r) const;
};

// Analytic curve export: bin-averaged AnnulusDensity over [a, b].
RadialProfile sample_profile(const AnnulusDensity& density, int n_bins);

// Density for a potential with hard walls at radii (r1, r2) strictly inside
// the natural ring: the smooth part is unchanged between the walls and the
// cut-off tails accumulate as point masses at the walls. Walls at or outside
// the natural radii contribute no mass and the natural density is returned.
RadialProfile bounded_density(const Potential& p, int n,
                              std::pair<double, double> walls,
                              int n_bins = 200);

}  // namespace ringlab::analytic

#endif

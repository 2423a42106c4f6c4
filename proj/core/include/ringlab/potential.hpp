#ifndef RINGLAB_POTENTIAL_HPP
#define RINGLAB_POTENTIAL_HPP

#include <complex>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ringlab {

enum class PotentialKind { gaussian, quartic, log, truncated_log, cosine, custom };

std::string to_string(PotentialKind kind);

// Value and first two derivatives of V with respect to t = |z|^2.
struct PotentialDerivs {
  double v;
  double v1;
  double v2;
};

struct ComplexDerivs {
  std::complex<double> v;
  std::complex<double> v1;
  std::complex<double> v2;
};

// Hard-wall radii: the weight vanishes for |z| outside [inner, outer].
struct Walls {
  double inner;
  double outer;
};

// Radial confining potential V(t), t = |z|^2. Immutable after construction,
// safe for concurrent shared reads.
//
// Built-ins:
//   gaussian        V = t
//   quartic         V = t^2 - alpha t
//   log             V = t - alpha ln t            (support t > 0)
//   truncated_log   V = -mu ln(1 - t)             (support t < 1)
//   cosine          V = cos(n pi |z|) - 1         (support |z| < gamma)
class Potential {
 public:
  using RealFn = std::function<double(double)>;

  static Potential gaussian();
  static Potential quartic(double alpha);
  static Potential logarithmic(double alpha);
  static Potential truncated_log(double mu);
  static Potential cosine(int n, double gamma);
  // User closures for (V, V', V''); complex evaluation unavailable.
  static Potential custom(RealFn v, RealFn v1, RealFn v2,
                          double support_t_min = 0.0,
                          double support_t_max =
                              std::numeric_limits<double>::infinity());

  // Returns a copy with hard walls at the given radii (0 <= inner < outer,
  // both inside the natural support).
  Potential with_walls(double inner_radius, double outer_radius) const;

  PotentialKind kind() const { return kind_; }
  double alpha() const { return alpha_; }
  double mu() const { return mu_; }
  int harmonic_n() const { return harmonic_n_; }
  double gamma_cut() const { return gamma_cut_; }
  const std::optional<Walls>& walls() const { return walls_; }
  bool complex_evaluable() const { return complex_evaluable_; }

  // Named parameters, for reports and config serialization.
  std::vector<std::pair<std::string, double>> params() const;

  // Natural support in t = |z|^2, ignoring walls. The upper bound is
  // exclusive when finite; the lower bound is exclusive when positive.
  double support_t_min() const { return support_t_min_; }
  double support_t_max() const { return support_t_max_; }
  bool in_natural_support(double t) const;
  // Natural support restricted by walls; this is where sampling lives.
  bool in_sampling_support(double t) const;

  // V, V', V'' at t; throws OutOfSupportError outside the natural support.
  PotentialDerivs eval(double t) const;

  // Analytic continuation V(w) for w = z_j z_k^*; principal branch for the
  // log kinds. Throws UnsupportedCapabilityError unless complex_evaluable().
  std::complex<double> eval_complex(std::complex<double> w) const;
  ComplexDerivs eval_complex_derivs(std::complex<double> w) const;

 private:
  Potential() = default;

  PotentialKind kind_ = PotentialKind::gaussian;
  double alpha_ = 0.0;
  double mu_ = 0.0;
  int harmonic_n_ = 0;
  double gamma_cut_ = 0.0;
  std::optional<Walls> walls_;
  bool complex_evaluable_ = false;
  double support_t_min_ = 0.0;
  double support_t_max_ = std::numeric_limits<double>::infinity();
  RealFn custom_v_, custom_v1_, custom_v2_;
};

}  // namespace ringlab

#endif

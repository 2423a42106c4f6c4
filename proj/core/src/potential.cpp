#include "ringlab/potential.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "ringlab/errors.hpp"

namespace ringlab {

namespace {

constexpr double kPi = std::numbers::pi;

// sin(u)/u, stable near 0.
double sinc(double u) {
  if (std::abs(u) < 1e-2) {
    const double u2 = u * u;
    return 1.0 - u2 / 6.0 + u2 * u2 / 120.0 - u2 * u2 * u2 / 5040.0;
  }
  return std::sin(u) / u;
}

// (sin u - u cos u)/u^3, stable near 0 (limit 1/3).
double sinc3(double u) {
  if (std::abs(u) < 1e-1) {
    const double u2 = u * u;
    return 1.0 / 3.0 - u2 / 30.0 + u2 * u2 / 840.0 - u2 * u2 * u2 / 45360.0;
  }
  return (std::sin(u) - u * std::cos(u)) / (u * u * u);
}

}  // namespace

std::string to_string(PotentialKind kind) {
  switch (kind) {
    case PotentialKind::gaussian: return "gaussian";
    case PotentialKind::quartic: return "quartic";
    case PotentialKind::log: return "log";
    case PotentialKind::truncated_log: return "truncated_log";
    case PotentialKind::cosine: return "cosine";
    case PotentialKind::custom: return "custom";
  }
  return "unknown";
}

Potential Potential::gaussian() {
  Potential p;
  p.kind_ = PotentialKind::gaussian;
  p.complex_evaluable_ = true;
  return p;
}

Potential Potential::quartic(double alpha) {
  Potential p;
  p.kind_ = PotentialKind::quartic;
  p.alpha_ = alpha;
  p.complex_evaluable_ = true;
  return p;
}

Potential Potential::logarithmic(double alpha) {
  Potential p;
  p.kind_ = PotentialKind::log;
  p.alpha_ = alpha;
  p.complex_evaluable_ = true;
  p.support_t_min_ = 0.0;  // exclusive: V diverges at t = 0 unless alpha = 0
  return p;
}

Potential Potential::truncated_log(double mu) {
  if (mu <= 0.0) throw std::invalid_argument("truncated_log: mu must be > 0");
  Potential p;
  p.kind_ = PotentialKind::truncated_log;
  p.mu_ = mu;
  p.support_t_max_ = 1.0;
  return p;
}

Potential Potential::cosine(int n, double gamma) {
  if (n < 1) throw std::invalid_argument("cosine: n must be a positive integer");
  if (gamma <= 0.0) throw std::invalid_argument("cosine: gamma must be > 0");
  Potential p;
  p.kind_ = PotentialKind::cosine;
  p.harmonic_n_ = n;
  p.gamma_cut_ = gamma;
  p.support_t_max_ = gamma * gamma;
  return p;
}

Potential Potential::custom(RealFn v, RealFn v1, RealFn v2, double support_t_min,
                            double support_t_max) {
  if (!v || !v1 || !v2) throw std::invalid_argument("custom: missing closure");
  Potential p;
  p.kind_ = PotentialKind::custom;
  p.custom_v_ = std::move(v);
  p.custom_v1_ = std::move(v1);
  p.custom_v2_ = std::move(v2);
  p.support_t_min_ = support_t_min;
  p.support_t_max_ = support_t_max;
  return p;
}

Potential Potential::with_walls(double inner_radius, double outer_radius) const {
  if (!(inner_radius >= 0.0) || !(inner_radius < outer_radius))
    throw std::invalid_argument("walls: need 0 <= inner < outer");
  const double t_out = outer_radius * outer_radius;
  if (t_out > support_t_max_)
    throw std::invalid_argument("walls: outer wall outside the natural support");
  Potential p = *this;
  p.walls_ = Walls{inner_radius, outer_radius};
  return p;
}

std::vector<std::pair<std::string, double>> Potential::params() const {
  std::vector<std::pair<std::string, double>> out;
  switch (kind_) {
    case PotentialKind::quartic:
    case PotentialKind::log:
      out.emplace_back("alpha", alpha_);
      break;
    case PotentialKind::truncated_log:
      out.emplace_back("mu", mu_);
      break;
    case PotentialKind::cosine:
      out.emplace_back("n", static_cast<double>(harmonic_n_));
      out.emplace_back("gamma", gamma_cut_);
      break;
    default:
      break;
  }
  if (walls_) {
    out.emplace_back("wall_inner", walls_->inner);
    out.emplace_back("wall_outer", walls_->outer);
  }
  return out;
}

bool Potential::in_natural_support(double t) const {
  if (!(t >= 0.0) || !std::isfinite(t)) return false;
  if (t < support_t_min_ || (t == support_t_min_ && support_t_min_ > 0.0))
    return false;
  if (kind_ == PotentialKind::log && alpha_ != 0.0 && t == 0.0) return false;
  return t < support_t_max_;
}

bool Potential::in_sampling_support(double t) const {
  if (!in_natural_support(t)) return false;
  if (walls_) {
    const double r = std::sqrt(t);
    if (r < walls_->inner || r > walls_->outer) return false;
  }
  return true;
}

PotentialDerivs Potential::eval(double t) const {
  if (!in_natural_support(t)) {
    std::ostringstream msg;
    msg << to_string(kind_) << ": t = " << t << " outside support ";
    if (kind_ == PotentialKind::log && alpha_ != 0.0)
      msg << "(t > 0)";
    else if (std::isfinite(support_t_max_))
      msg << "[" << support_t_min_ << ", " << support_t_max_ << ")";
    else
      msg << "[0, inf)";
    throw OutOfSupportError(msg.str());
  }
  switch (kind_) {
    case PotentialKind::gaussian:
      return {t, 1.0, 0.0};
    case PotentialKind::quartic:
      return {t * t - alpha_ * t, 2.0 * t - alpha_, 2.0};
    case PotentialKind::log:
      return {t - alpha_ * std::log(t), 1.0 - alpha_ / t, alpha_ / (t * t)};
    case PotentialKind::truncated_log: {
      const double q = 1.0 - t;
      return {-mu_ * std::log(q), mu_ / q, mu_ / (q * q)};
    }
    case PotentialKind::cosine: {
      // V is given as a function of |z| = sqrt(t); derivatives are taken in t
      // via the chain rule, with the |z| -> 0 limit handled by series.
      const double c = harmonic_n_ * kPi;
      const double u = c * std::sqrt(t);
      const double v = std::cos(u) - 1.0;
      const double v1 = -0.5 * c * c * sinc(u);
      const double v2 = 0.25 * c * c * c * c * sinc3(u);
      return {v, v1, v2};
    }
    case PotentialKind::custom:
      return {custom_v_(t), custom_v1_(t), custom_v2_(t)};
  }
  throw std::logic_error("unreachable potential kind");
}

ComplexDerivs Potential::eval_complex_derivs(std::complex<double> w) const {
  if (!complex_evaluable_)
    throw UnsupportedCapabilityError(to_string(kind_) +
                                     ": no complex-argument evaluation");
  switch (kind_) {
    case PotentialKind::gaussian:
      return {w, 1.0, 0.0};
    case PotentialKind::quartic:
      return {w * w - alpha_ * w, 2.0 * w - alpha_, 2.0};
    case PotentialKind::log:
      return {w - alpha_ * std::log(w), 1.0 - alpha_ / w, alpha_ / (w * w)};
    default:
      throw UnsupportedCapabilityError(to_string(kind_) +
                                       ": no complex-argument evaluation");
  }
}

std::complex<double> Potential::eval_complex(std::complex<double> w) const {
  return eval_complex_derivs(w).v;
}

}  // namespace ringlab

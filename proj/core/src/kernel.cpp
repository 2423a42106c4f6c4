#include "ringlab/kernel.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/Dense>

#include "ringlab/errors.hpp"

namespace ringlab::analytic {

namespace {

constexpr double kPi = std::numbers::pi;
// Integrand support is cut where the log falls this far below the peak.
constexpr double kLogTail = 46.0;

using GK = boost::math::quadrature::gauss_kronrod<double, 31>;

// log N_l = log pi + log int t^l e^{-N V(t)} dt over [t_lo, t_hi), with the
// peak value factored out of the exponent before quadrature.
double log_norm_quadrature(const Potential& p, int n, int l) {
  // Divergence screen for the log kind: near t = 0 the integrand behaves as
  // t^{l + N alpha}.
  bool singular_left = false;
  if (p.kind() == PotentialKind::log && p.support_t_min() == 0.0) {
    const double g = l + n * p.alpha();
    if (g <= -1.0) {
      std::ostringstream msg;
      msg << "finite_n_norms: integral for l = " << l
          << " diverges at t = 0 (t exponent " << g << ")";
      throw DivergenceError(msg.str(), l);
    }
    singular_left = g < 0.0;
  }

  const double t_min = p.support_t_min();
  const double t_max = p.support_t_max();
  auto phi = [&](double t) { return l * std::log(t) - n * p.eval(t).v; };

  // Peak search on a coarse grid; unbounded supports expand until the right
  // tail has decayed below the peak.
  double t_hi = std::isfinite(t_max) ? t_max : std::max(1.0, 2.0 * t_min);
  double peak_t = 0.0;
  double peak_phi = -std::numeric_limits<double>::infinity();
  for (;;) {
    peak_phi = -std::numeric_limits<double>::infinity();
    const int kGrid = 2048;
    const double eps = std::isfinite(t_max) ? (t_hi - t_min) * 1e-12 : 0.0;
    for (int i = 1; i < kGrid; ++i) {
      const double t = t_min + (t_hi - eps - t_min) * i / kGrid;
      if (t <= 0.0) continue;
      const double v = phi(t);
      if (v > peak_phi) {
        peak_phi = v;
        peak_t = t;
      }
    }
    if (std::isfinite(t_max)) break;
    if (phi(t_hi) < peak_phi - kLogTail) break;
    t_hi *= 2.0;
    if (t_hi > 1e12) {
      std::ostringstream msg;
      msg << "finite_n_norms: integrand for l = " << l << " does not decay";
      throw DivergenceError(msg.str(), l);
    }
  }
  if (!std::isfinite(peak_phi))
    throw DivergenceError("finite_n_norms: empty integrand", l);

  // Integration window [left, right] around the peak.
  double left = t_min;
  {
    const double probe = t_min + (peak_t - t_min) * 1e-9 + 1e-300;
    if (!singular_left && probe > 0.0 && phi(probe) < peak_phi - kLogTail) {
      double lo = t_min, hi = peak_t;
      for (int i = 0; i < 200 && hi - lo > 1e-14 * std::max(peak_t, 1.0); ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= 0.0 || phi(mid) < peak_phi - kLogTail)
          lo = mid;
        else
          hi = mid;
      }
      left = lo;
    }
  }
  double right;
  if (std::isfinite(t_max)) {
    right = t_hi - (t_hi - t_min) * 1e-13;
  } else {
    double lo = peak_t, hi = t_hi;
    while (phi(hi) > peak_phi - kLogTail) hi *= 2.0;
    for (int i = 0; i < 200 && hi - lo > 1e-12 * hi; ++i) {
      const double mid = 0.5 * (lo + hi);
      if (phi(mid) < peak_phi - kLogTail)
        hi = mid;
      else
        lo = mid;
    }
    right = hi;
  }

  const double scale = singular_left ? std::max(peak_phi, phi(right)) : peak_phi;
  double integral = 0.0;
  double err_abs = 0.0;
  if (singular_left) {
    // Integrable t^g singularity, -1 < g < 0: substitute t = u^2 so the
    // integrand becomes u^{2g+1} * smooth with 2g+1 > -1 + 1 >= 0.
    auto f = [&](double u) {
      const double t = u * u;
      if (t <= 0.0) return 0.0;
      return 2.0 * u * std::exp(phi(t) - scale);
    };
    double err = 0.0;
    integral = GK::integrate(f, std::sqrt(std::max(left, 0.0)),
                             std::sqrt(right), 15, 1e-12, &err);
    err_abs = err;
  } else {
    auto f = [&](double t) { return std::exp(phi(t) - scale); };
    // Split at the peak so the adaptive rule sees two one-sided humps.
    const double split = std::clamp(peak_t, left, right);
    double err1 = 0.0, err2 = 0.0;
    if (split > left) integral += GK::integrate(f, left, split, 15, 1e-12, &err1);
    if (right > split)
      integral += GK::integrate(f, split, right, 15, 1e-12, &err2);
    err_abs = err1 + err2;
  }
  if (!(integral > 0.0) || !std::isfinite(integral))
    throw DivergenceError("finite_n_norms: quadrature failed", l);
  if (err_abs / integral > 1e-10)
    throw DivergenceError("finite_n_norms: quadrature tolerance not met", l);
  return std::log(kPi) + scale + std::log(integral);
}

}  // namespace

FiniteNKernel::FiniteNKernel(Potential p, int n)
    : potential_(std::move(p)), n_(n) {
  if (n < 1) throw std::invalid_argument("FiniteNKernel: n must be positive");
  // Walls truncate the radial integration range; share V through a custom
  // potential with a clipped support window in t.
  Potential integ = potential_;
  if (potential_.walls()) {
    const Walls w = *potential_.walls();
    const Potential src = potential_;
    integ = Potential::custom([src](double t) { return src.eval(t).v; },
                              [src](double t) { return src.eval(t).v1; },
                              [src](double t) { return src.eval(t).v2; },
                              w.inner * w.inner, w.outer * w.outer);
  }
  log_norms_.reserve(n);
  for (int l = 0; l < n; ++l)
    log_norms_.push_back(log_norm_quadrature(integ, n_, l));
}

double FiniteNKernel::norm(int l) const { return std::exp(log_norm(l)); }

std::complex<double> FiniteNKernel::operator()(std::complex<double> z1,
                                               std::complex<double> z2) const {
  const double t1 = std::norm(z1);
  const double t2 = std::norm(z2);
  const double pre = -0.5 * n_ * (potential_.eval(t1).v + potential_.eval(t2).v);
  const std::complex<double> w = z1 * std::conj(z2);
  const double rho = std::abs(w);

  if (rho == 0.0) return std::exp(pre - log_norms_[0]);
  const double log_rho = std::log(rho);
  const double phase = std::arg(w);

  // Shift all term magnitudes by the max exponent, then sum with Kahan
  // compensation.
  double m_max = -std::numeric_limits<double>::infinity();
  for (int l = 0; l < n_; ++l)
    m_max = std::max(m_max, l * log_rho - log_norms_[l]);
  const double shift = m_max + pre;
  if (shift < -745.0) return {0.0, 0.0};

  double sum_re = 0.0, comp_re = 0.0;
  double sum_im = 0.0, comp_im = 0.0;
  for (int l = 0; l < n_; ++l) {
    const double mag = std::exp(l * log_rho - log_norms_[l] - m_max);
    const double a = mag * std::cos(l * phase);
    const double b = mag * std::sin(l * phase);
    double y = a - comp_re;
    double t = sum_re + y;
    comp_re = (t - sum_re) - y;
    sum_re = t;
    y = b - comp_im;
    t = sum_im + y;
    comp_im = (t - sum_im) - y;
    sum_im = t;
  }
  return std::exp(shift) * std::complex<double>(sum_re, sum_im);
}

double FiniteNKernel::density(std::complex<double> z) const {
  return (*this)(z, z).real();
}

double rn_correlation(const FiniteNKernel& kernel,
                      std::span<const std::complex<double>> points) {
  const auto n = static_cast<int>(points.size());
  if (n < 1) throw std::invalid_argument("rn_correlation: empty point set");
  if (n > kernel.matrix_dim())
    throw std::invalid_argument("rn_correlation: more points than eigenvalues");
  if (n == 1) return kernel.density(points[0]);

  Eigen::MatrixXcd m(n, n);
  for (int j = 0; j < n; ++j) {
    m(j, j) = kernel.density(points[j]);
    for (int k = j + 1; k < n; ++k) {
      const std::complex<double> v = kernel(points[j], points[k]);
      m(j, k) = v;
      m(k, j) = std::conj(v);
    }
  }
  return m.determinant().real();
}

std::complex<double> kernel_large_n(const Potential& p, int n,
                                    std::complex<double> z1,
                                    std::complex<double> z2) {
  const std::complex<double> w = z1 * std::conj(z2);
  const ComplexDerivs d = p.eval_complex_derivs(w);
  const double v1 = p.eval(std::norm(z1)).v;
  const double v2 = p.eval(std::norm(z2)).v;
  const std::complex<double> exponent =
      static_cast<double>(n) * d.v - 0.5 * n * (v1 + v2);
  return (n / kPi) * (d.v1 + w * d.v2) * std::exp(exponent);
}

std::complex<double> unfolded_kernel(std::complex<double> zeta1,
                                     std::complex<double> zeta2) {
  const std::complex<double> dz = zeta1 - zeta2;
  const std::complex<double> cross =
      zeta1 * std::conj(zeta2) - std::conj(zeta1) * zeta2;
  return std::exp(-0.5 * std::norm(dz) + 0.5 * cross) / kPi;
}

}  // namespace ringlab::analytic

#include "ringlab/spacing_laws.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ringlab::analytic {

namespace {

constexpr double kPi = std::numbers::pi;

void check_order(int n_max) {
  if (n_max < 100)
    throw std::invalid_argument("p0_spacing: truncation order must be >= 100");
}

// Accumulates log F(s) and the log-derivative sum in one pass over the
// factors e_n(x) e^{-x} = Poisson CDF at n, using the pmf recurrence
// t_n = t_{n-1} x / n. Factors with n >> x are exponentially close to 1.
struct ProductState {
  double log_f = 0.0;     // sum_n ln[e_n(x) e^{-x}]
  double deriv_sum = 0.0; // sum_n pmf(n; x) / cdf(n; x)
};

ProductState accumulate(double x, int n_max) {
  ProductState st;
  double t = std::exp(-x);  // pmf(0; x)
  double c = t;             // cdf(0; x)
  for (int n = 1; n <= n_max; ++n) {
    t *= x / n;
    c += t;
    const double cdf = std::min(c, 1.0);
    st.log_f += std::log(cdf);
    st.deriv_sum += t / cdf;
    if (n > x && t < 1e-18 * cdf) break;  // remaining factors are 1 - O(eps)
  }
  return st;
}

}  // namespace

double r2_universal(double s) {
  return (2.0 / kPi) * s * (1.0 - std::exp(-s * s));
}

double p0_survival(double s, int n_max) {
  check_order(n_max);
  const double x = s * s;
  if (x == 0.0) return 1.0;
  if (x > 700.0) return 0.0;
  return std::exp(accumulate(x, n_max).log_f);
}

double p0_spacing(double s, int n_max) {
  check_order(n_max);
  const double x = s * s;
  if (x == 0.0) return 0.0;
  if (x > 700.0) return 0.0;
  const ProductState st = accumulate(x, n_max);
  // P0 = -F'(s) = F(s) * 2s * sum_n pmf(n; x)/cdf(n; x).
  return std::exp(st.log_f) * 2.0 * s * st.deriv_sum;
}

double p0_cdf(double s, int n_max) { return 1.0 - p0_survival(s, n_max); }

}  // namespace ringlab::analytic

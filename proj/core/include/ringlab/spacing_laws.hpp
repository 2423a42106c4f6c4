#ifndef RINGLAB_SPACING_LAWS_HPP
#define RINGLAB_SPACING_LAWS_HPP

namespace ringlab::analytic {

// Universal two-eigenvalue correlation of unfolded spacings:
//   R2(s) = (2/pi) s (1 - e^{-s^2}).
double r2_universal(double s);

// Survival function F(s) = prod_{n>=1} e_n(s^2) e^{-s^2} of the nearest
// neighbor spacing, truncated at n_max factors (n_max >= 100).
double p0_survival(double s, int n_max = 1000);

// Nearest-neighbor spacing density P0(s) = -dF/ds, evaluated through the
// analytic log-derivative of the product (no numeric differentiation).
double p0_spacing(double s, int n_max = 1000);

// CDF of the nearest-neighbor spacing, 1 - F(s).
double p0_cdf(double s, int n_max = 1000);

}  // namespace ringlab::analytic

#endif

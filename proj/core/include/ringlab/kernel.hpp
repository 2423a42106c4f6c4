#ifndef RINGLAB_KERNEL_HPP
#define RINGLAB_KERNEL_HPP

#include <complex>
#include <span>
#include <vector>

#include "ringlab/potential.hpp"

namespace ringlab::analytic {

// Finite-N determinantal kernel
//   K_N(z1, z2) = e^{-(N/2)[V(|z1|^2) + V(|z2|^2)]} sum_{l<N} (z1 z2*)^l / N_l
// with norms N_l = pi * int t^l e^{-N V(t)} dt over the support. Norms are
// computed once by adaptive quadrature and kept in log form so the power
// series can be evaluated in a scaled domain for large N.
class FiniteNKernel {
 public:
  FiniteNKernel(Potential p, int n);

  int matrix_dim() const { return n_; }
  const Potential& potential() const { return potential_; }

  double log_norm(int l) const { return log_norms_.at(l); }
  double norm(int l) const;  // exp(log_norm); may overflow to +inf

  std::complex<double> operator()(std::complex<double> z1,
                                  std::complex<double> z2) const;
  // Diagonal K_N(z, z) = R1(z).
  double density(std::complex<double> z) const;

 private:
  Potential potential_;
  int n_;
  std::vector<double> log_norms_;
};

// n-eigenvalue correlation R_n = det[K_N(z_j, z_k)]; real and nonnegative up
// to rounding. Throws std::invalid_argument when points.size() > N.
double rn_correlation(const FiniteNKernel& kernel,
                      std::span<const std::complex<double>> points);

// Large-N closed form of the kernel for complex-evaluable potentials:
//   (N/pi) [V'(w) + w V''(w)] exp(N V(w) - (N/2)[V(|z1|^2) + V(|z2|^2)]),
// w = z1 z2*. The diagonal reproduces the smooth ring density.
std::complex<double> kernel_large_n(const Potential& p, int n,
                                    std::complex<double> z1,
                                    std::complex<double> z2);

// Universal unfolded kernel (unit density 1/pi):
//   (1/pi) exp(-|dz|^2/2 + (z1 z2* - z1* z2)/2).
std::complex<double> unfolded_kernel(std::complex<double> zeta1,
                                     std::complex<double> zeta2);

}  // namespace ringlab::analytic

#endif

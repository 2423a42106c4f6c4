#ifndef RINGLAB_SAMPLER_HPP
#define RINGLAB_SAMPLER_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "ringlab/potential.hpp"
#include "ringlab/rng.hpp"
#include "ringlab/spectrum.hpp"

namespace ringlab::mc {

// Interaction exponent of the eigenvalue gas. Fixed: this code implements the
// unitary symmetry class only.
inline constexpr double kBeta = 2.0;

struct SamplerConfig {
  int n = 0;
  Potential potential = Potential::gaussian();
  int burn_sweeps = 2000;
  int sample_sweeps = 10000;
  int thin = 50;
  double target_accept = 0.30;
  // Fraction of proposals drawn uniformly from the sampling region instead of
  // locally. Local steps alone cannot cross the barriers between coexisting
  // rings (cosine potential), so the proposal law is a symmetric mixture.
  double global_move_prob = 0.10;
  std::uint64_t seed = 0;

  void validate() const;  // throws std::invalid_argument
};

// Monte Carlo chain over eigenvalue configurations of the 2-D log-gas.
struct ChainState {
  std::vector<std::complex<double>> positions;
  // log of the unnormalized target: beta * sum_{j<k} ln|z_j - z_k| - N sum V.
  double log_weight = 0.0;
  double step_scale = 0.0;
  long long propose_count = 0;
  long long accept_count = 0;
  long long local_propose = 0;  // adaptation tracks local moves only
  long long local_accept = 0;
  Rng rng;
  // Sampling region: natural support clipped by walls and truncated at r_cap
  // (far outside the ring, where the weight is negligible).
  double r_min = 0.0;
  double r_cap = 0.0;

  explicit ChainState(std::uint64_t seed) : rng(seed) {}
};

ChainState init_chain(const SamplerConfig& cfg);

// One sweep = N single-particle Metropolis moves, O(N^2) work.
void sweep(ChainState& state, const Potential& p);

// Burn-in with step adaptation (frozen afterwards), then thinned emission.
std::vector<Spectrum> run(const SamplerConfig& cfg);

// Independent chains with split seeds, merged in seed order. Each chain runs
// the full cfg schedule. max_threads = 0 picks hardware concurrency.
std::vector<Spectrum> run_ensemble(const SamplerConfig& cfg, int chains,
                                   int max_threads = 0);

// O(N^2) recomputation of the log weight; oracle for drift checks.
double recompute_log_weight(std::span<const std::complex<double>> positions,
                            const Potential& p, int n);

}  // namespace ringlab::mc

#endif

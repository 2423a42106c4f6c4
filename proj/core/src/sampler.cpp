#include "ringlab/sampler.hpp"

#include <cmath>
#include <future>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "ringlab/density.hpp"
#include "ringlab/errors.hpp"

namespace ringlab::mc {

namespace {

constexpr double kStepUp = 1.05;

struct Region {
  double r_min;
  double r_cap;
};

// Bounded sampling region: walls and natural support, truncated well outside
// the predicted ring for potentials with unbounded support.
Region sampling_region(const SamplerConfig& cfg) {
  const Potential& p = cfg.potential;
  double r_min = 0.0;
  double r_cap = std::sqrt(p.support_t_max());
  if (p.walls()) {
    r_min = p.walls()->inner;
    r_cap = std::min(r_cap, p.walls()->outer);
  }
  if (!std::isfinite(r_cap)) {
    const analytic::RingRadii rr = analytic::ring_radii(p, cfg.n);
    r_cap = 2.0 * rr.b + 1.0;
  }
  return {r_min, r_cap};
}

bool inside(const Potential& p, const Region& reg,
            std::complex<double> z) {
  const double r2 = std::norm(z);
  if (r2 < reg.r_min * reg.r_min || r2 > reg.r_cap * reg.r_cap) return false;
  return p.in_sampling_support(r2);
}

std::complex<double> uniform_in_annulus(Rng& rng, double r_lo, double r_hi) {
  const double t = r_lo * r_lo +
                   rng.uniform() * (r_hi * r_hi - r_lo * r_lo);
  const double theta = 2.0 * std::numbers::pi * rng.uniform();
  const double r = std::sqrt(t);
  return {r * std::cos(theta), r * std::sin(theta)};
}

// Log of prod_k |z' - z_k|^2 / |z - z_k|^2, with periodic renormalization so
// the running product never leaves the representable range.
double log_interaction_ratio(const std::vector<std::complex<double>>& zs,
                             std::size_t j, std::complex<double> z_new) {
  const std::complex<double> z_old = zs[j];
  double acc = 0.0;
  double prod = 1.0;
  int pending = 0;
  for (std::size_t k = 0; k < zs.size(); ++k) {
    if (k == j) continue;
    const double d_new = std::norm(z_new - zs[k]);
    if (d_new == 0.0) return -std::numeric_limits<double>::infinity();
    const double d_old = std::norm(z_old - zs[k]);
    prod *= d_new / d_old;
    if (++pending == 24 || prod > 1e120 || prod < 1e-120) {
      acc += std::log(prod);
      prod = 1.0;
      pending = 0;
    }
  }
  return acc + std::log(prod);
}

}  // namespace

void SamplerConfig::validate() const {
  if (n < 2) throw std::invalid_argument("sampler: n must be >= 2");
  if (burn_sweeps < 0 || sample_sweeps < 0)
    throw std::invalid_argument("sampler: negative sweep count");
  if (thin < 1) throw std::invalid_argument("sampler: thin must be >= 1");
  if (!(target_accept > 0.0 && target_accept < 1.0))
    throw std::invalid_argument("sampler: target acceptance must be in (0,1)");
  if (!(global_move_prob >= 0.0 && global_move_prob < 1.0))
    throw std::invalid_argument("sampler: global_move_prob must be in [0,1)");
}

double recompute_log_weight(std::span<const std::complex<double>> positions,
                            const Potential& p, int n) {
  double w = 0.0;
  for (std::size_t j = 0; j < positions.size(); ++j) {
    for (std::size_t k = j + 1; k < positions.size(); ++k) {
      w += kBeta * std::log(std::abs(positions[j] - positions[k]));
    }
    w -= n * p.eval(std::norm(positions[j])).v;
  }
  return w;
}

ChainState init_chain(const SamplerConfig& cfg) {
  cfg.validate();
  const Region reg = sampling_region(cfg);
  ChainState state(cfg.seed);
  state.r_min = reg.r_min;
  state.r_cap = reg.r_cap;

  // Start on the predicted ring when it exists, otherwise spread over the
  // whole sampling region.
  double r_lo = reg.r_min;
  double r_hi = reg.r_cap;
  try {
    const analytic::RingRadii rr = analytic::ring_radii(cfg.potential, cfg.n);
    r_lo = std::max(r_lo, rr.a);
    r_hi = std::min(r_hi, rr.b);
    if (!(r_lo < r_hi)) {
      r_lo = reg.r_min;
      r_hi = reg.r_cap;
    }
  } catch (const InfeasibleRingError&) {
    // fall through: uniform over the sampling region
  }

  state.positions.reserve(cfg.n);
  while (static_cast<int>(state.positions.size()) < cfg.n) {
    const std::complex<double> z = uniform_in_annulus(state.rng, r_lo, r_hi);
    if (inside(cfg.potential, reg, z)) state.positions.push_back(z);
  }
  state.step_scale = 0.5 / std::sqrt(static_cast<double>(cfg.n));
  state.log_weight = recompute_log_weight(state.positions, cfg.potential, cfg.n);
  return state;
}

void sweep(ChainState& state, const Potential& p) {
  const int n = static_cast<int>(state.positions.size());
  const Region reg{state.r_min, state.r_cap};
  const bool mix_global = state.global_prob > 0.0;
  for (int j = 0; j < n; ++j) {
    ++state.propose_count;
    const bool global =
        mix_global && state.rng.uniform() < state.global_prob;
    std::complex<double> z_new;
    if (global) {
      z_new = uniform_in_annulus(state.rng, reg.r_min, reg.r_cap);
    } else {
      ++state.local_propose;
      z_new = state.positions[j] +
              state.step_scale * state.rng.complex_normal();
    }
    if (!inside(p, reg, z_new)) continue;

    const double t_old = std::norm(state.positions[j]);
    const double t_new = std::norm(z_new);
    const double delta =
        log_interaction_ratio(state.positions, j, z_new) -
        n * (p.eval(t_new).v - p.eval(t_old).v);
    if (delta >= 0.0 || state.rng.uniform() < std::exp(delta)) {
      state.positions[j] = z_new;
      state.log_weight += delta;
      ++state.accept_count;
      if (!global) ++state.local_accept;
    }
  }
}

std::vector<Spectrum> run(const SamplerConfig& cfg) {
  ChainState state = init_chain(cfg);
  state.global_prob = cfg.global_move_prob;

  // Burn-in: multiplicative step adaptation toward the target acceptance,
  // frozen afterwards so the sampled chain satisfies detailed balance.
  for (int s = 0; s < cfg.burn_sweeps; ++s) {
    const long long a0 = state.local_accept;
    const long long p0 = state.local_propose;
    sweep(state, cfg.potential);
    const long long dp = state.local_propose - p0;
    if (dp > 0) {
      const double rate =
          static_cast<double>(state.local_accept - a0) / static_cast<double>(dp);
      state.step_scale *= (rate > cfg.target_accept) ? kStepUp : 1.0 / kStepUp;
      state.step_scale =
          std::clamp(state.step_scale, 1e-6, std::max(1.0, state.r_cap));
    }
  }

  std::vector<Spectrum> out;
  out.reserve(cfg.sample_sweeps / cfg.thin);
  for (int s = 1; s <= cfg.sample_sweeps; ++s) {
    sweep(state, cfg.potential);
    if (s % cfg.thin == 0) {
      Spectrum spec;
      spec.eigenvalues = state.positions;
      spec.provenance = Provenance::mc_sampled;
      spec.seed = cfg.seed;
      spec.config_id = static_cast<long>(out.size());
      spec.sweep = cfg.burn_sweeps + s;
      spec.params = cfg.potential.params();
      spec.params.emplace_back("n", static_cast<double>(cfg.n));
      out.push_back(std::move(spec));
    }
  }
  return out;
}

std::vector<Spectrum> run_ensemble(const SamplerConfig& cfg, int chains,
                                   int max_threads) {
  if (chains < 1) throw std::invalid_argument("run_ensemble: chains must be >= 1");
  cfg.validate();
  if (max_threads <= 0) {
    max_threads = static_cast<int>(std::thread::hardware_concurrency());
    if (max_threads < 1) max_threads = 1;
  }

  std::vector<SamplerConfig> configs(chains, cfg);
  for (int c = 0; c < chains; ++c) configs[c].seed = split_seed(cfg.seed, c);

  std::vector<std::vector<Spectrum>> results(chains);
  int next = 0;
  while (next < chains) {
    const int batch = std::min(max_threads, chains - next);
    std::vector<std::future<std::vector<Spectrum>>> futs;
    futs.reserve(batch);
    for (int i = 0; i < batch; ++i) {
      const SamplerConfig& c = configs[next + i];
      futs.push_back(std::async(std::launch::async, [&c] { return run(c); }));
    }
    for (int i = 0; i < batch; ++i) results[next + i] = futs[i].get();
    next += batch;
  }

  std::vector<Spectrum> merged;
  for (auto& chunk : results) {
    for (auto& spec : chunk) {
      spec.config_id = static_cast<long>(merged.size());
      merged.push_back(std::move(spec));
    }
  }
  return merged;
}

}  // namespace ringlab::mc

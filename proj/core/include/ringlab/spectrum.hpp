#ifndef RINGLAB_SPECTRUM_HPP
#define RINGLAB_SPECTRUM_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ringlab {

enum class Provenance { mc_sampled, qmap_diagonalized };

// One configuration of N complex eigenvalues plus provenance metadata.
struct Spectrum {
  std::vector<std::complex<double>> eigenvalues;
  Provenance provenance = Provenance::mc_sampled;
  std::uint64_t seed = 0;
  long config_id = 0;
  long sweep = 0;  // MC sweep index, or realization index for quantum maps
  std::vector<std::pair<std::string, double>> params;

  int size() const { return static_cast<int>(eigenvalues.size()); }
};

}  // namespace ringlab

#endif

#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace entromax {

/// Seeded random stream. Streams are addressed by (seed, stream id); two
/// streams with the same address produce identical draws, and different
/// ids give statistically independent sequences. Samplers derive one
/// stream per sample index so results do not depend on how work is split.
class RngStream {
public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  /// Child stream; children of distinct (parent, id) pairs never collide.
  RngStream substream(std::uint64_t id) const;

  /// Uniform on [0, 1).
  double uniform();
  /// Uniform on (0, 1), never exactly 0.
  double uniform_open();
  double normal();
  std::complex<double> complex_normal();
  /// exp(2 pi i u) with u uniform.
  std::complex<double> unit_phase();

  std::mt19937_64& engine() { return engine_; }

private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace entromax

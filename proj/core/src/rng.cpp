#include "entromax/rng.hpp"

#include <numbers>

namespace entromax {

namespace {

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                    0x656e7472u};
  return std::mt19937_64(seq);
}

// splitmix64 finalizer; mixes parent stream and child id into a new id.
std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream), engine_(make_engine(seed, stream)) {}

RngStream RngStream::substream(std::uint64_t id) const { return RngStream(seed_, mix(mix(stream_) ^ id)); }

double RngStream::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double RngStream::uniform_open() {
  double u = 0.0;
  do {
    u = uniform();
  } while (u == 0.0);
  return u;
}

double RngStream::normal() { return normal_(engine_); }

std::complex<double> RngStream::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re, im};
}

std::complex<double> RngStream::unit_phase() {
  return std::polar(1.0, 2.0 * std::numbers::pi * uniform());
}

}  // namespace entromax

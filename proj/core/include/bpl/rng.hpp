#pragma once

#include <array>
#include <cstdint>

namespace bpl {

// One raw Philox4x32-10 block: 10 rounds over `counter` with `key`,
// matching the reference known-answer vectors.
std::array<std::uint32_t, 4> philox4x32_10(const std::array<std::uint32_t, 4>& counter,
                                           const std::array<std::uint32_t, 2>& key);

// Counter-based Philox4x32-10 stream. Output is a pure function of
// (seed, stream_id, draw index): distinct stream_ids give independent
// streams, and a stream can be recreated anywhere (any thread, any worker
// count) and replayed identically. Estimators key stream_id by sample
// index.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  std::uint32_t next_u32();
  std::uint64_t next_u64();

  // Uniform double in [0, 1) with 53 random bits.
  double next_double();

  // Uniform double in [lo, hi).
  double uniform(double lo, double hi);

  // Standard normal pair via Box-Muller (two draws per call).
  std::array<double, 2> next_normal_pair();

 private:
  void refill();

  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 4> counter_;
  std::array<std::uint32_t, 4> block_{};
  int block_pos_ = 4;  // force refill on first draw
};

}  // namespace bpl

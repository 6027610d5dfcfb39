#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

namespace catswarm {

/// Counter-based random stream built on Philox4x32-10.
///
/// A stream is identified by (seed, stream_id). The stream id occupies the
/// upper 64 bits of the 128-bit Philox counter, so two streams with the same
/// seed and different ids never share a block. Runs derive per-iteration,
/// per-agent child streams through `child()`, which keeps the draw sequence
/// independent of the order in which agents are processed.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0) noexcept;

  /// A degenerate stream that returns `u` from every uniform draw.
  /// Integer draws map `u` onto the requested range. Test use only.
  static RngStream pinned(double u) noexcept;

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }

  std::uint32_t next_u32() noexcept;
  std::uint64_t next_u64() noexcept;

  /// Uniform in [0, 1) with 53 random bits.
  double next_uniform() noexcept;

  /// Uniform in [lo, hi).
  double next_uniform(double lo, double hi) noexcept { return lo + (hi - lo) * next_uniform(); }

  /// Uniform integer in [0, n). n must be positive.
  std::uint64_t next_below(std::uint64_t n) noexcept;

  /// Fair coin: +1.0 or -1.0.
  double next_sign() noexcept { return next_uniform() < 0.5 ? 1.0 : -1.0; }

  /// Chooses `out.size()` distinct indices from [0, n) uniformly without
  /// replacement (partial Fisher-Yates). `scratch` must have size n.
  void sample_without_replacement(std::size_t n, std::span<std::size_t> out,
                                  std::span<std::size_t> scratch) noexcept;

  /// Independent stream sharing this stream's seed.
  RngStream child(std::uint64_t stream_id) const noexcept { return RngStream(seed_, stream_id); }

 private:
  void refill() noexcept;

  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t block_ = 0;
  std::array<std::uint32_t, 4> buffer_{};
  unsigned used_ = 4;
  std::optional<double> pinned_;
};

/// One Philox4x32-10 block: exposed for known-answer testing.
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter,
                                           std::array<std::uint32_t, 2> key) noexcept;

/// SplitMix64 finalizer; used for seed derivation.
std::uint64_t mix64(std::uint64_t x) noexcept;

}  // namespace catswarm

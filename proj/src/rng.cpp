#include "catswarm/rng.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace catswarm {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
  const std::uint64_t product = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(product >> 32);
  lo = static_cast<std::uint32_t>(product);
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> ctr,
                                           std::array<std::uint32_t, 2> key) noexcept {
  for (int round = 0; round < 10; ++round) {
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kPhiloxM0, ctr[0], hi0, lo0);
    mulhilo(kPhiloxM1, ctr[2], hi1, lo1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    key[0] += kPhiloxW0;
    key[1] += kPhiloxW1;
  }
  return ctr;
}

std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id) noexcept
    : seed_(seed), stream_id_(stream_id) {}

RngStream RngStream::pinned(double u) noexcept {
  RngStream s(0);
  s.pinned_ = u;
  return s;
}

void RngStream::refill() noexcept {
  const std::array<std::uint32_t, 4> counter = {
      static_cast<std::uint32_t>(block_), static_cast<std::uint32_t>(block_ >> 32),
      static_cast<std::uint32_t>(stream_id_), static_cast<std::uint32_t>(stream_id_ >> 32)};
  const std::array<std::uint32_t, 2> key = {static_cast<std::uint32_t>(seed_),
                                            static_cast<std::uint32_t>(seed_ >> 32)};
  buffer_ = philox4x32_10(counter, key);
  ++block_;
  used_ = 0;
}

std::uint32_t RngStream::next_u32() noexcept {
  if (pinned_) return static_cast<std::uint32_t>(*pinned_ * 4294967296.0);
  if (used_ == 4) refill();
  return buffer_[used_++];
}

std::uint64_t RngStream::next_u64() noexcept {
  const std::uint64_t hi = next_u32();
  const std::uint64_t lo = next_u32();
  return (hi << 32) | lo;
}

double RngStream::next_uniform() noexcept {
  if (pinned_) return *pinned_;
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t RngStream::next_below(std::uint64_t n) noexcept {
  if (pinned_) {
    const auto k = static_cast<std::uint64_t>(std::floor(*pinned_ * static_cast<double>(n)));
    return std::min(k, n - 1);
  }
  // Rejection keeps the result exactly uniform.
  const std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    const std::uint64_t r = next_u64();
    if (r >= threshold) return r % n;
  }
}

void RngStream::sample_without_replacement(std::size_t n, std::span<std::size_t> out,
                                           std::span<std::size_t> scratch) noexcept {
  for (std::size_t i = 0; i < n; ++i) scratch[i] = i;
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::size_t j = i + static_cast<std::size_t>(next_below(n - i));
    std::swap(scratch[i], scratch[j]);
    out[i] = scratch[i];
  }
}

}  // namespace catswarm

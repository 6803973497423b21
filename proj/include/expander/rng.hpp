#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>

namespace expander {

// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
//
// A stream is identified by (seed, stream index); within a stream, the k-th
// 128-bit block is a pure function of k. Splitting work across threads or
// across a word is therefore a matter of choosing counters, with no shared
// state.
class Philox {
public:
  using Block = std::array<std::uint32_t, 4>;

  constexpr Philox(std::uint64_t seed, std::uint64_t stream) noexcept
      : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
        stream_(stream)
  {
  }

  constexpr Block block(std::uint64_t counter, std::uint32_t lane = 0) const noexcept
  {
    Block ctr{static_cast<std::uint32_t>(counter), static_cast<std::uint32_t>(counter >> 32),
              static_cast<std::uint32_t>(stream_), static_cast<std::uint32_t>(stream_ >> 32) ^ lane};
    std::array<std::uint32_t, 2> key = key_;
    for (int round = 0; round < 10; ++round) {
      const std::uint64_t p0 = std::uint64_t{0xD2511F53u} * ctr[0];
      const std::uint64_t p1 = std::uint64_t{0xCD9E8D57u} * ctr[2];
      ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0], static_cast<std::uint32_t>(p1),
             static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1], static_cast<std::uint32_t>(p0)};
      key[0] += 0x9E3779B9u;
      key[1] += 0xBB67AE85u;
    }
    return ctr;
  }

  constexpr std::uint64_t u64(std::uint64_t counter, std::uint32_t lane = 0) const noexcept
  {
    const Block b = block(counter, lane);
    return (std::uint64_t{b[0]} << 32) | b[1];
  }

  // Uniform integer in [0, bound) derived from counter `counter` alone.
  // Rejection sampling draws further lanes of the same counter, so the
  // counter-to-value mapping stays fixed.
  std::uint64_t below(std::uint64_t counter, std::uint64_t bound) const noexcept
  {
    if (bound <= 1)
      return 0;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    for (std::uint32_t lane = 0;; ++lane) {
      const std::uint64_t x = u64(counter, lane);
      if (x < limit)
        return x % bound;
    }
  }

  // Uniform double in [0, 1).
  double unit(std::uint64_t counter) const noexcept
  {
    return static_cast<double>(u64(counter) >> 11) * 0x1.0p-53;
  }

  std::uint64_t stream() const noexcept { return stream_; }

private:
  std::array<std::uint32_t, 2> key_;
  std::uint64_t stream_;
};

// Sequential convenience wrapper: draws consecutive counters of one stream.
class PhiloxStream {
public:
  PhiloxStream(std::uint64_t seed, std::uint64_t stream) : gen_(seed, stream) {}

  std::uint64_t below(std::uint64_t bound) { return gen_.below(counter_++, bound); }
  double unit() { return gen_.unit(counter_++); }
  std::uint64_t next_u64() { return gen_.u64(counter_++); }
  // Standard normal via Box-Muller.
  double normal()
  {
    double u1 = unit();
    const double u2 = unit();
    if (u1 <= 0.0)
      u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

  // UniformRandomBitGenerator interface.
  using result_type = std::uint64_t;
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()() { return next_u64(); }

private:
  Philox gen_;
  std::uint64_t counter_ = 0;
};

} // namespace expander

#pragma once

#include <array>
#include <cstdint>

namespace gsmc {

// Philox4x32-10 counter-based block cipher (Salmon et al. 2011).
// Output is a pure function of (key, counter): any (stream, draw) pair can be
// generated independently of every other one, which is what makes runs
// reproducible under arbitrary thread scheduling.
struct Philox4x32 {
  static constexpr std::uint32_t kW0 = 0x9E3779B9u;  // golden-ratio key bump
  static constexpr std::uint32_t kW1 = 0xBB67AE85u;  // sqrt(3)-1 key bump
  static constexpr std::uint32_t kM0 = 0xD2511F53u;
  static constexpr std::uint32_t kM1 = 0xCD9E8D57u;

  static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> ctr,
                                            std::array<std::uint32_t, 2> key) {
    for (int round = 0;; ++round) {
      const std::uint64_t p0 = std::uint64_t(kM0) * ctr[0];
      const std::uint64_t p1 = std::uint64_t(kM1) * ctr[2];
      const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
      const auto lo0 = static_cast<std::uint32_t>(p0);
      const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
      const auto lo1 = static_cast<std::uint32_t>(p1);
      ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
      if (round == 9) break;
      key[0] += kW0;
      key[1] += kW1;
    }
    return ctr;
  }
};

// Stream purposes; kept disjoint so no two subsystems ever share a counter.
enum class StreamKind : std::uint32_t {
  split = 0,      // per-particle split proposals (index = particle)
  init = 1,       // initial spanning trees for forest/linking spaces
  mcmc = 2,       // per-particle merge-split chains
  probe = 3,      // K estimation probes
  resample = 4,   // equal-weight resampling in diagnostics
  misc = 5,
};

// One logical random stream addressed by (seed; kind, stage, index).
// Draws consume 32-bit words from consecutive Philox blocks.
class RngStream {
 public:
  RngStream(std::uint64_t seed, StreamKind kind, std::uint32_t stage, std::uint32_t index)
      : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
        id_hi_((static_cast<std::uint32_t>(kind) << 27) | (stage & 0x07FFFFFFu)),
        id_lo_(index) {}

  std::uint32_t next_u32() {
    if (have_ == 0) refill();
    return buf_[--have_];
  }

  std::uint64_t next_u64() {
    const std::uint64_t hi = next_u32();
    return (hi << 32) | next_u32();
  }

  // Uniform double in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n); unbiased by rejection. n >= 1.
  std::uint64_t bounded(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
      const std::uint64_t r = next_u64();
      if (r >= threshold) return r % n;
    }
  }

 private:
  void refill() {
    buf_ = Philox4x32::block({id_hi_, id_lo_, static_cast<std::uint32_t>(block_),
                              static_cast<std::uint32_t>(block_ >> 32)},
                             key_);
    ++block_;
    have_ = 4;
  }

  std::array<std::uint32_t, 2> key_;
  std::uint32_t id_hi_, id_lo_;
  std::uint64_t block_ = 0;
  std::array<std::uint32_t, 4> buf_{};
  int have_ = 0;
};

}  // namespace gsmc

#pragma once

#include <array>
#include <cstdint>

namespace bell {

// Philox4x32-10 counter-based generator (Salmon et al., SC 2011).
// A block is a pure function of (counter, key), so any position in any
// stream can be generated independently on any worker. This is what makes
// Monte Carlo results independent of how trials are partitioned.
struct Philox4x32 {
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static Counter block(Counter counter, Key key) {
    for (int round = 0; round < 10; ++round) {
      counter = mix(counter, key);
      key[0] += 0x9E3779B9u;
      key[1] += 0xBB67AE85u;
    }
    return counter;
  }

 private:
  static Counter mix(const Counter& c, const Key& k) {
    const std::uint64_t prod0 = std::uint64_t{0xD2511F53u} * c[0];
    const std::uint64_t prod1 = std::uint64_t{0xCD9E8D57u} * c[2];
    return {static_cast<std::uint32_t>(prod1 >> 32) ^ c[1] ^ k[0],
            static_cast<std::uint32_t>(prod1),
            static_cast<std::uint32_t>(prod0 >> 32) ^ c[3] ^ k[1],
            static_cast<std::uint32_t>(prod0)};
  }
};

// Stream identifiers keep draws made for different purposes statistically
// independent even under one seed.
namespace stream_ids {
inline constexpr std::uint32_t kSingles1 = 1;
inline constexpr std::uint32_t kSingles2 = 2;
inline constexpr std::uint32_t kJoint = 3;
inline constexpr std::uint32_t kChTerm0 = 8;  // six consecutive ids, one per CH term
inline constexpr std::uint32_t kValidate = 20;
inline constexpr std::uint32_t kUAudit = 21;
inline constexpr std::uint32_t kFactorability = 22;
}  // namespace stream_ids

// One uniform random stream, identified by (seed, stream, index).
// Key = seed; counter = (index lo, index hi, stream, block#).
class TrialStream {
 public:
  TrialStream(std::uint64_t seed, std::uint32_t stream, std::uint64_t index)
      : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
        base_{static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
              stream, 0} {}

  std::uint32_t next_u32() {
    if (pos_ == 4) refill();
    return buffer_[pos_++];
  }

  std::uint64_t next_u64() {
    const std::uint64_t lo = next_u32();
    const std::uint64_t hi = next_u32();
    return lo | (hi << 32);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

 private:
  void refill() {
    buffer_ = Philox4x32::block(base_, key_);
    ++base_[3];
    pos_ = 0;
  }

  Philox4x32::Key key_;
  Philox4x32::Counter base_;
  Philox4x32::Counter buffer_{};
  int pos_ = 4;
};

}  // namespace bell

#pragma once

#include <cstdint>

#include "braids/word.hpp"

namespace braids {

// splitmix64: tiny deterministic generator, stable across platforms.
class Rng {
public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [lo, hi] inclusive
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(next() % static_cast<uint64_t>(hi - lo + 1));
  }

  bool coin() { return next() & 1; }

  BraidWord word(int strands, int letters) {
    std::vector<int> ls;
    ls.reserve(static_cast<size_t>(letters));
    for (int i = 0; i < letters; ++i) {
      int idx = static_cast<int>(range(1, strands - 1));
      ls.push_back(coin() ? idx : -idx);
    }
    return BraidWord(strands, std::move(ls));
  }

private:
  uint64_t state_;
};

}  // namespace braids

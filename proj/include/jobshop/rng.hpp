#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace jobshop {

// Deterministic random stream. mt19937_64 has a standardized sequence, and
// the uniform mappings below are written out so that identical seeds give
// identical draws on every platform (std::uniform_*_distribution makes no
// such promise).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // [0, 1), 53-bit resolution.
  double uniform_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform over {lo, ..., hi}, inclusive; unbiased via masked rejection.
  int uniform_int(int lo, int hi) {
    const std::uint64_t top = static_cast<std::uint64_t>(hi - lo);
    std::uint64_t mask = top;
    mask |= mask >> 1;
    mask |= mask >> 2;
    mask |= mask >> 4;
    mask |= mask >> 8;
    mask |= mask >> 16;
    mask |= mask >> 32;
    std::uint64_t draw;
    do {
      draw = next_u64() & mask;
    } while (draw > top);
    return static_cast<int>(lo + static_cast<int>(draw));
  }

  // Fisher-Yates; draw order is part of the reproducibility contract.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
      std::swap(v[static_cast<std::size_t>(i)],
                v[static_cast<std::size_t>(uniform_int(0, i))]);
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace jobshop

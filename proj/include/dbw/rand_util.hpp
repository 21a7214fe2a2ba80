#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace dbw {

// std::uniform_int_distribution and std::shuffle are implementation-defined;
// these keep seeded runs reproducible across standard libraries.

inline std::uint64_t rng_below(std::mt19937_64& rng, std::uint64_t n) {
  if (n <= 1) return 0;
  std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

inline double rng_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

template <typename T>
void rng_shuffle(std::mt19937_64& rng, std::vector<T>& v) {
  for (std::size_t i = v.size(); i > 1; --i)
    std::swap(v[i - 1], v[rng_below(rng, i)]);
}

}  // namespace dbw

#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>

#include "satlink/exact_linalg.hpp"

namespace satlink::test {

inline std::uint64_t seed() {
  if (const char* s = std::getenv("HEDDEN_SEED"); s && *s) return std::strtoull(s, nullptr, 0);
  return 20240229;
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long lo, long hi) {
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  return m;
}

inline IntMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
  IntMatrix m = random_matrix(rng, n, n, lo, hi);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) m(i, j) = m(j, i);
  return m;
}

}  // namespace satlink::test

#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "homlong/matrix.hpp"

namespace testing {

std::uint64_t seed();

inline std::filesystem::path data_dir() { return HOMLONG_DATA_DIR; }
inline std::string data(const std::string& name) { return (data_dir() / name).string(); }

using Rng = std::mt19937_64;

// Small rationals p/q with |p| <= 5 and q in 1..3.
inline homlong::Scalar random_scalar(Rng& rng, bool nonzero = false) {
  std::uniform_int_distribution<long> num(-5, 5), den(1, 3);
  for (;;) {
    long p = num(rng);
    if (nonzero && p == 0) continue;
    return homlong::Scalar(p, den(rng));
  }
}

inline homlong::Matrix random_matrix(Rng& rng, std::size_t r, std::size_t c) {
  homlong::Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_scalar(rng);
  return m;
}

inline homlong::Matrix random_invertible(Rng& rng, std::size_t n) {
  for (;;) {
    homlong::Matrix m = random_matrix(rng, n, n);
    if (!homlong::determinant(m).is_zero()) return m;
  }
}

}  // namespace testing

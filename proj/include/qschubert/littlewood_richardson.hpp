#pragma once

// Littlewood-Richardson coefficients by direct tableau enumeration. Shares no
// code with the Pieri/Giambelli multiplication and serves as its cross-check.

#include <cstdint>
#include <vector>

#include "qschubert/partition.hpp"

namespace qschubert {

/// c^nu_{lambda, mu}: the number of semistandard fillings of nu / lambda with
/// content mu whose reverse reading word (rows top to bottom, each row right to
/// left) is a lattice word.
inline std::uint64_t lr_coefficient_oracle(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (size(nu) != size(lambda) + size(mu)) return 0;
  if (lambda.length() > nu.length()) return 0;
  for (std::size_t i = 0; i < lambda.length(); ++i)
    if (lambda[i] > nu[i]) return 0;

  struct Cell {
    std::size_t row;
    int col;
  };
  std::vector<Cell> cells;
  for (std::size_t r = 0; r < nu.length(); ++r)
    for (int c = nu[r] - 1; c >= lambda[r]; --c) cells.push_back({r, c});

  std::vector<std::vector<int>> filling(nu.length());
  for (std::size_t r = 0; r < nu.length(); ++r) filling[r].assign(static_cast<std::size_t>(nu[r]), 0);
  const std::size_t letters = mu.length();
  std::vector<int> used(letters + 1, 0);

  std::uint64_t count = 0;
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == cells.size()) {
      ++count;
      return;
    }
    const auto [r, c] = cells[idx];
    const auto col = static_cast<std::size_t>(c);
    int upper = static_cast<int>(letters);
    if (c + 1 < nu[r]) upper = std::min(upper, filling[r][col + 1]);
    int lower = 1;
    if (r > 0 && c >= lambda[r - 1]) lower = filling[r - 1][col] + 1;
    for (int v = lower; v <= upper; ++v) {
      const auto letter = static_cast<std::size_t>(v);
      if (used[letter] >= mu[letter - 1]) continue;
      if (letter > 1 && used[letter - 1] <= used[letter]) continue;
      ++used[letter];
      filling[r][col] = v;
      self(self, idx + 1);
      filling[r][col] = 0;
      --used[letter];
    }
  };
  rec(rec, 0);
  return count;
}

}  // namespace qschubert

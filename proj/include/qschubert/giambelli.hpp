#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "qschubert/partition.hpp"

namespace qschubert {

namespace detail {

// Rows row..r-1 of the Jacobi-Trudi matrix can still be matched to the columns
// missing from `used`. Row j accepts column c iff 0 <= shape_j + c - j <= width;
// both interval ends increase with j, so greedy matching decides it.
inline bool completable(const Partition& shape, std::size_t row, std::size_t r, std::uint64_t used, int width) {
  std::size_t c = 0;
  for (std::size_t j = row; j < r; ++j) {
    const long lo = static_cast<long>(j) - shape[j];
    const long hi = lo + width;
    while (c < r && ((used >> c & 1U) || static_cast<long>(c) < lo)) ++c;
    if (c == r || static_cast<long>(c) > hi) return false;
    ++c;
  }
  return true;
}

}  // namespace detail

/// seed * sigma_shape, with sigma_shape expanded as the Giambelli (Jacobi-Trudi)
/// determinant det(sigma_{shape_i + j - i}) over special classes. Special classes
/// sigma_p with p < 0 or p > width vanish and sigma_0 = 1; every other entry is
/// applied through times_special(terms, p).
///
/// The determinant is expanded row by row, summing over partial permutations
/// that share the same set of used columns, so the work is bounded by the
/// number of reachable column subsets rather than r!.
template <class Terms, class TimesSpecial>
Terms giambelli_expand(const Partition& shape, int width, const Terms& seed, TimesSpecial&& times_special) {
  const std::size_t r = shape.length();
  if (r == 0) return seed;
  if (r >= 64) throw std::length_error("Giambelli expansion supports at most 63 rows");

  std::unordered_map<std::uint64_t, Terms> layer;
  layer.emplace(0, seed);
  for (std::size_t i = 0; i < r; ++i) {
    std::unordered_map<std::uint64_t, Terms> next;
    for (const auto& [used, terms] : layer) {
      for (std::size_t c = 0; c < r; ++c) {
        if (used >> c & 1U) continue;
        const int p = shape[i] + static_cast<int>(c) - static_cast<int>(i);
        if (p < 0 || p > width) continue;
        const std::uint64_t after = used | (std::uint64_t{1} << c);
        if (!detail::completable(shape, i + 1, r, after, width)) continue;
        const int sign = (std::popcount(used >> c >> 1) & 1) ? -1 : 1;
        auto& slot = next[after];
        if (p == 0)
          slot.add_scaled(terms, sign);
        else
          slot.add_scaled(times_special(terms, p), sign);
      }
    }
    layer = std::move(next);
  }
  const std::uint64_t full = (r == 63) ? ~std::uint64_t{0} >> 1 : (std::uint64_t{1} << r) - 1;
  auto it = layer.find(full);
  return it == layer.end() ? Terms{} : std::move(it->second);
}

/// Which factor of sigma_a * sigma_b goes through the Giambelli expansion, and
/// whether the product is taken in Gr(k, N) itself or in Gr(N - k, N) on
/// transposed indices (the two rings are isomorphic via sigma_mu -> sigma_mu').
enum class ExpansionRoute {
  automatic,
  expand_second,
  expand_first,
  transposed_expand_second,
  transposed_expand_first,
};

/// The expansion cost grows with the number of determinant rows, so pick the
/// factor and orientation with the fewest rows.
inline ExpansionRoute cheapest_route(const Partition& a, const Partition& b) {
  const std::size_t costs[] = {b.length(), a.length(), static_cast<std::size_t>(b.first()),
                               static_cast<std::size_t>(a.first())};
  const ExpansionRoute routes[] = {ExpansionRoute::expand_second, ExpansionRoute::expand_first,
                                   ExpansionRoute::transposed_expand_second, ExpansionRoute::transposed_expand_first};
  std::size_t best = 0;
  for (std::size_t i = 1; i < 4; ++i)
    if (costs[i] < costs[best]) best = i;
  return routes[best];
}

}  // namespace qschubert

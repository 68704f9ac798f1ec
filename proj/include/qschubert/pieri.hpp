#pragma once

// Shape enumeration behind the classical and quantum Pieri rules.

#include <algorithm>
#include <vector>

#include "qschubert/partition.hpp"

namespace qschubert {

/// Calls f(mu) for every mu in the rows x width box such that mu / lambda is a
/// horizontal strip of p boxes (no two added boxes in one column).
template <class F>
void for_each_horizontal_strip(const Partition& lambda, int p, int rows, int width, F&& f) {
  if (p < 0 || !fits_in_box(lambda, GrassmannianContext(rows, rows + width))) return;
  const std::size_t len = std::min<std::size_t>(static_cast<std::size_t>(rows), lambda.length() + 1);
  if (p == 0) {
    f(lambda);
    return;
  }

  // room[i]: boxes row i can take; suffix[i]: boxes rows i.. can take together.
  Partition::storage_type room(len), suffix(len + 1, 0);
  for (std::size_t i = 0; i < len; ++i) room[i] = (i == 0 ? width : lambda[i - 1]) - lambda[i];
  for (std::size_t i = len; i-- > 0;) suffix[i] = suffix[i + 1] + room[i];
  if (suffix[0] < p) return;

  Partition::storage_type mu(len);
  for (std::size_t i = 0; i < len; ++i) mu[i] = lambda[i];

  auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
    if (remaining == 0) {
      f(Partition::from_sorted(mu));
      return;
    }
    const int most = std::min(remaining, room[i]);
    const int least = std::max(0, remaining - suffix[i + 1]);
    for (int add = least; add <= most; ++add) {
      mu[i] = lambda[i] + add;
      self(self, i + 1, remaining - add);
    }
    mu[i] = lambda[i];
  };
  rec(rec, 0, p);
}

/// q-terms of the quantum Pieri rule in QH*(Gr(rows, rows + width)): calls
/// f(nu) for every nu with
///   lambda_i - 1 >= nu_i >= lambda_{i+1} - 1   (1 <= i <= rows, lambda_{rows+1} = 0)
/// and |nu| = |lambda| + p - (rows + width). Nothing is produced unless
/// lambda has exactly `rows` nonzero parts.
///
/// The interlacing is row-wise: one box leaves every row. Read literally as
/// "at least one box from each column", the rule would also admit shapes such
/// as nu = (2) in sigma_(2,2,1,1,1,1,1) * sigma_2 on Gr(7,9), which breaks the
/// identity sigma_width^(rows + width) = q^width.
template <class F>
void for_each_quantum_strip(const Partition& lambda, int p, int rows, int width, F&& f) {
  if (lambda.length() != static_cast<std::size_t>(rows)) return;
  const long target = size(lambda) + p - (rows + width);
  if (target < 0) return;
  const std::size_t k = static_cast<std::size_t>(rows);

  Partition::storage_type lo(k), hi(k), lo_suffix(k + 1, 0), hi_suffix(k + 1, 0);
  for (std::size_t i = 0; i < k; ++i) {
    hi[i] = lambda[i] - 1;
    lo[i] = std::max(lambda[i + 1] - 1, 0);
  }
  for (std::size_t i = k; i-- > 0;) {
    lo_suffix[i] = lo_suffix[i + 1] + lo[i];
    hi_suffix[i] = hi_suffix[i + 1] + hi[i];
  }
  if (target < lo_suffix[0] || target > hi_suffix[0]) return;

  Partition::storage_type nu(k);
  auto rec = [&](auto&& self, std::size_t i, long remaining) -> void {
    if (i == k) {
      if (remaining == 0) f(Partition::from_sorted(nu));
      return;
    }
    const long least = std::max<long>(lo[i], remaining - hi_suffix[i + 1]);
    const long most = std::min<long>(hi[i], remaining - lo_suffix[i + 1]);
    for (long v = least; v <= most; ++v) {
      nu[i] = static_cast<int>(v);
      self(self, i + 1, remaining - v);
    }
  };
  rec(rec, 0, target);
}

}  // namespace qschubert

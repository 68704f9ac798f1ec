#pragma once

// Partitions, Young diagrams, Grassmannian boxes and sl_n dominant weights.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <boost/container_hash/hash.hpp>

namespace qschubert {

/// Weakly decreasing sequence of nonnegative integers, stored without
/// trailing zeros so that (2,1) and (2,1,0,0) are the same value.
class Partition {
 public:
  using storage_type = boost::container::small_vector<int, 8>;
  using const_iterator = storage_type::const_iterator;

  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::span<const int>(parts.begin(), parts.size())) {}

  explicit Partition(std::span<const int> parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] < 0) throw std::invalid_argument("partition has a negative part");
      if (i > 0 && parts[i] > parts[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    parts_.assign(parts.begin(), parts.end());
    strip();
  }

  explicit Partition(const std::vector<int>& parts) : Partition(std::span<const int>(parts)) {}

  // Caller guarantees the sequence is weakly decreasing and nonnegative.
  static Partition from_sorted(storage_type parts) {
    Partition p;
    p.parts_ = std::move(parts);
    p.strip();
    return p;
  }

  /// Number of nonzero parts.
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }

  /// i-th part (0-based); zero past the end.
  int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }
  int first() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

  const_iterator begin() const noexcept { return parts_.begin(); }
  const_iterator end() const noexcept { return parts_.end(); }
  const storage_type& parts() const noexcept { return parts_; }

  friend bool operator==(const Partition& a, const Partition& b) noexcept {
    return std::equal(a.parts_.begin(), a.parts_.end(), b.parts_.begin(), b.parts_.end());
  }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept {
    return std::lexicographical_compare_three_way(a.parts_.begin(), a.parts_.end(), b.parts_.begin(),
                                                  b.parts_.end());
  }

 private:
  void strip() {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  }

  storage_type parts_;
};

inline std::size_t hash_value(const Partition& p) noexcept { return boost::hash_range(p.begin(), p.end()); }

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept { return hash_value(p); }
};

inline long size(const Partition& p) noexcept { return std::accumulate(p.begin(), p.end(), 0L); }

inline Partition conjugate(const Partition& p) {
  Partition::storage_type cols(static_cast<std::size_t>(p.first()), 0);
  for (int part : p)
    for (int j = 0; j < part; ++j) ++cols[static_cast<std::size_t>(j)];
  return Partition::from_sorted(std::move(cols));
}

/// (rows x width) rectangle.
inline Partition rectangle(int rows, int width) {
  if (rows < 0 || width < 0) throw std::invalid_argument("rectangle dimensions must be nonnegative");
  return Partition::from_sorted(Partition::storage_type(static_cast<std::size_t>(rows), width));
}

/// Gr(k, N): k-planes in an N-dimensional space. Schubert classes live in the
/// k x (N - k) box.
class GrassmannianContext {
 public:
  GrassmannianContext(int k, int n) : k_(k), n_(n) {
    if (k <= 0 || k >= n) throw std::invalid_argument("Grassmannian Gr(k, N) requires 0 < k < N");
  }

  int rows() const noexcept { return k_; }
  int ambient() const noexcept { return n_; }
  int width() const noexcept { return n_ - k_; }

  /// Gr(N - k, N); the isomorphism to it transposes every Schubert index.
  GrassmannianContext dual() const { return GrassmannianContext(n_ - k_, n_); }

  friend bool operator==(const GrassmannianContext&, const GrassmannianContext&) = default;

 private:
  int k_;
  int n_;
};

inline std::string to_string(const GrassmannianContext& ctx) {
  return "Gr(" + std::to_string(ctx.rows()) + "," + std::to_string(ctx.ambient()) + ")";
}

inline bool fits_in_box(const Partition& p, const GrassmannianContext& ctx) noexcept {
  return p.length() <= static_cast<std::size_t>(ctx.rows()) && p.first() <= ctx.width();
}

/// Class of a point: the full k x (N - k) rectangle.
inline Partition point_class(const GrassmannianContext& ctx) { return rectangle(ctx.rows(), ctx.width()); }

/// Poincare dual index: the box complement of p rotated by 180 degrees.
inline Partition complement(const Partition& p, const GrassmannianContext& ctx) {
  if (!fits_in_box(p, ctx)) throw std::invalid_argument("partition does not fit the Grassmannian box");
  Partition::storage_type parts(static_cast<std::size_t>(ctx.rows()));
  for (int i = 0; i < ctx.rows(); ++i)
    parts[static_cast<std::size_t>(i)] = ctx.width() - p[static_cast<std::size_t>(ctx.rows() - 1 - i)];
  return Partition::from_sorted(std::move(parts));
}

/// Dominant integral weight of sl_n written in the fundamental basis:
/// coeffs[i - 1] is the multiplicity of omega_i, i = 1..n-1.
class SlnWeight {
 public:
  SlnWeight(int n, std::vector<int> coeffs) : n_(n), coeffs_(std::move(coeffs)) {
    if (n < 2) throw std::invalid_argument("sl_n weights need n >= 2");
    if (coeffs_.size() != static_cast<std::size_t>(n - 1))
      throw std::invalid_argument("an sl_" + std::to_string(n) + " weight has " + std::to_string(n - 1) +
                                  " fundamental coefficients");
    for (int c : coeffs_)
      if (c < 0) throw std::invalid_argument("fundamental coefficients must be nonnegative");
  }

  static SlnWeight zero(int n) { return SlnWeight(n, std::vector<int>(static_cast<std::size_t>(std::max(n - 1, 0)), 0)); }

  /// omega_i; omega_0 and omega_n are the zero weight.
  static SlnWeight fundamental(int n, int i, int multiplicity = 1) {
    if (i < 0 || i > n) throw std::invalid_argument("fundamental weight index out of range");
    if (multiplicity < 0) throw std::invalid_argument("fundamental coefficients must be nonnegative");
    SlnWeight w = zero(n);
    if (i >= 1 && i <= n - 1) w.coeffs_[static_cast<std::size_t>(i - 1)] = multiplicity;
    return w;
  }

  int n() const noexcept { return n_; }
  const std::vector<int>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of omega_i; zero for i outside 1..n-1.
  int coeff(int i) const noexcept {
    return (i >= 1 && i <= n_ - 1) ? coeffs_[static_cast<std::size_t>(i - 1)] : 0;
  }
  int level() const noexcept { return std::accumulate(coeffs_.begin(), coeffs_.end(), 0); }

  friend bool operator==(const SlnWeight&, const SlnWeight&) = default;

 private:
  int n_;
  std::vector<int> coeffs_;
};

/// lambda^(j) = sum_{t >= j} c_t.
inline Partition weight_to_partition(const SlnWeight& w) {
  Partition::storage_type parts(w.coeffs().size());
  int running = 0;
  for (std::size_t j = w.coeffs().size(); j-- > 0;) {
    running += w.coeffs()[j];
    parts[j] = running;
  }
  return Partition::from_sorted(std::move(parts));
}

/// Subtracts full columns of height n; the result has at most n-1 nonzero parts.
inline Partition normalize_sln(const Partition& p, int n) {
  if (n < 2) throw std::invalid_argument("sl_n requires n >= 2");
  if (p.length() > static_cast<std::size_t>(n))
    throw std::invalid_argument("an sl_" + std::to_string(n) + " weight has at most " + std::to_string(n) + " rows");
  const int shift = p[static_cast<std::size_t>(n - 1)];
  if (shift == 0) return p;
  Partition::storage_type parts(p.begin(), p.end());
  for (int& part : parts) part -= shift;
  return Partition::from_sorted(std::move(parts));
}

/// Inverse of weight_to_partition. Partitions with n rows are normalized first.
inline SlnWeight partition_to_weight(const Partition& p, int n) {
  const Partition q = normalize_sln(p, n);
  std::vector<int> coeffs(static_cast<std::size_t>(n - 1), 0);
  for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(n); ++i) coeffs[i] = q[i] - q[i + 1];
  return SlnWeight(n, std::move(coeffs));
}

/// Calls f(SlnWeight) for every dominant weight of sl_n with level <= level,
/// i.e. every partition in the (n-1) x level box. Order: lexicographic in
/// the coefficient vector (c_1, ..., c_{n-1}).
template <class F>
void for_each_weight(int n, int level, F&& f) {
  if (n < 2) throw std::invalid_argument("sl_n requires n >= 2");
  if (level < 0) throw std::invalid_argument("level must be nonnegative");
  std::vector<int> coeffs(static_cast<std::size_t>(n - 1), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int remaining) {
    if (i == coeffs.size()) {
      f(SlnWeight(n, coeffs));
      return;
    }
    for (int c = 0; c <= remaining; ++c) {
      coeffs[i] = c;
      rec(i + 1, remaining - c);
    }
    coeffs[i] = 0;
  };
  rec(0, level);
}

inline std::vector<SlnWeight> enumerate_weights(int n, int level) {
  std::vector<SlnWeight> out;
  for_each_weight(n, level, [&](SlnWeight w) { out.push_back(std::move(w)); });
  return out;
}

}  // namespace qschubert

template <>
struct std::hash<qschubert::Partition> : qschubert::PartitionHash {};

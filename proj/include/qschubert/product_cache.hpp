#pragma once

#include <atomic>
#include <cstddef>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include <boost/container_hash/hash.hpp>

#include "qschubert/partition.hpp"

namespace qschubert {

/// Key of a memoized product sigma_a * sigma_b of two basis classes.
struct ProductKey {
  int rows;
  int ambient;
  Partition a;
  Partition b;
  bool quantum;

  friend bool operator==(const ProductKey&, const ProductKey&) = default;
};

struct ProductKeyHash {
  std::size_t operator()(const ProductKey& k) const noexcept {
    std::size_t seed = hash_value(k.a);
    boost::hash_combine(seed, hash_value(k.b));
    boost::hash_combine(seed, k.rows);
    boost::hash_combine(seed, k.ambient);
    boost::hash_combine(seed, k.quantum);
    return seed;
  }
};

/// Thread-safe memo table for basis-class products. Entries are immutable once
/// published; when the table grows past its capacity it is flushed wholesale.
template <class Terms>
class ProductCache {
 public:
  explicit ProductCache(std::size_t capacity = std::size_t{1} << 16) : capacity_(capacity) {}

  template <class Compute>
  std::shared_ptr<const Terms> get_or_compute(const ProductKey& key, Compute&& compute) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = table_.find(key); it != table_.end()) {
        hits_.fetch_add(1, std::memory_order_relaxed);
        return it->second;
      }
    }
    misses_.fetch_add(1, std::memory_order_relaxed);
    auto value = std::make_shared<const Terms>(compute());
    std::unique_lock lock(mutex_);
    if (table_.size() >= capacity_) table_.clear();
    // Another thread may have won the race; both values are equal.
    return table_.try_emplace(key, std::move(value)).first->second;
  }

  void clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
  }

  void set_capacity(std::size_t capacity) {
    std::unique_lock lock(mutex_);
    capacity_ = capacity == 0 ? 1 : capacity;
    if (table_.size() >= capacity_) table_.clear();
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }
  std::size_t hits() const noexcept { return hits_.load(std::memory_order_relaxed); }
  std::size_t misses() const noexcept { return misses_.load(std::memory_order_relaxed); }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<ProductKey, std::shared_ptr<const Terms>, ProductKeyHash> table_;
  std::size_t capacity_;
  std::atomic<std::size_t> hits_{0};
  std::atomic<std::size_t> misses_{0};
};

}  // namespace qschubert

#pragma once

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qschubert {

/// Exact integer coefficients.
using BigInt = boost::multiprecision::cpp_int;

/// A structure constant that must be nonnegative came out negative.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Sparse integer combination of keys. Zero coefficients are never stored.
template <class Key, class Hash = std::hash<Key>>
class LinearCombination {
 public:
  using map_type = std::unordered_map<Key, BigInt, Hash>;
  using const_iterator = typename map_type::const_iterator;

  LinearCombination() = default;

  static LinearCombination single(Key key, BigInt coeff = 1) {
    LinearCombination out;
    out.add(std::move(key), coeff);
    return out;
  }

  void add(const Key& key, const BigInt& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void add(Key&& key, const BigInt& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(key), coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void add_scaled(const LinearCombination& other, const BigInt& scale) {
    if (scale.is_zero()) return;
    if (terms_.empty() && scale == 1) {
      terms_ = other.terms_;
      return;
    }
    for (const auto& [key, coeff] : other.terms_) add(key, coeff * scale);
  }

  void add_scaled(const LinearCombination& other, int sign) { add_scaled(other, BigInt(sign)); }

  const BigInt& coefficient(const Key& key) const {
    static const BigInt zero;
    const auto it = terms_.find(key);
    return it == terms_.end() ? zero : it->second;
  }

  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }
  const_iterator begin() const noexcept { return terms_.begin(); }
  const_iterator end() const noexcept { return terms_.end(); }
  void reserve(std::size_t n) { terms_.reserve(n); }

  bool has_negative() const {
    return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.sign() < 0; });
  }

  std::vector<std::pair<Key, BigInt>> sorted() const {
    std::vector<std::pair<Key, BigInt>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  }

  friend bool operator==(const LinearCombination& a, const LinearCombination& b) { return a.terms_ == b.terms_; }

 private:
  map_type terms_;
};

}  // namespace qschubert

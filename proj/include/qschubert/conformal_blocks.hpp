#pragma once

// Ranks of sl_n conformal-blocks bundles V(sl_n, weights, level) on M_{0,m}
// through Witten's dictionary, and checks built on top of them.

#include <algorithm>
#include <atomic>
#include <exception>
#include <optional>
#include <mutex>
#include <span>
#include <string_view>
#include <type_traits>
#include <thread>
#include <vector>

#include "qschubert/classical.hpp"
#include "qschubert/partition.hpp"
#include "qschubert/quantum.hpp"

namespace qschubert {

enum class DictionaryCase { classical, quantum, zero_by_congruence };

inline std::string_view to_string(DictionaryCase c) {
  switch (c) {
    case DictionaryCase::classical:
      return "classical";
    case DictionaryCase::quantum:
      return "quantum";
    case DictionaryCase::zero_by_congruence:
      return "zero-by-congruence";
  }
  return "?";
}

struct RankQuery {
  int n = 2;
  int level = 1;
  std::vector<SlnWeight> weights;

  /// `count` copies of w; defaults to n marked points.
  static RankQuery symmetric(const SlnWeight& w, int level, int count = -1) {
    const int points = count < 0 ? w.n() : count;
    return RankQuery{w.n(), level, std::vector<SlnWeight>(static_cast<std::size_t>(points), w)};
  }
};

struct RankResult {
  BigInt rank;
  /// Set when an early exit stopped the computation: the rank is at least `rank`.
  bool lower_bound = false;
  DictionaryCase dictionary_case = DictionaryCase::classical;
  /// s = sum|lambda_i| / n - level; empty for the congruence case.
  std::optional<int> s;
  std::optional<GrassmannianContext> context_used;

  bool is_one() const { return !lower_bound && rank == 1; }
};

struct RankOptions {
  /// Stop as soon as the rank is known to exceed 1.
  bool early_exit = false;
};

namespace detail {

inline std::vector<Partition> validated_partitions(const RankQuery& q) {
  if (q.n < 2) throw std::invalid_argument("sl_n requires n >= 2");
  if (q.level < 1) throw std::invalid_argument("level must be positive");
  if (q.weights.empty()) throw std::invalid_argument("a rank query needs at least one weight");
  std::vector<Partition> parts;
  parts.reserve(q.weights.size());
  for (const auto& w : q.weights) {
    if (w.n() != q.n) throw std::invalid_argument("weight belongs to a different sl_n");
    if (w.level() > q.level)
      throw std::invalid_argument("weight of level " + std::to_string(w.level()) + " exceeds level " +
                                  std::to_string(q.level));
    parts.push_back(normalize_sln(weight_to_partition(w), q.n));
  }
  return parts;
}

inline bool all_equal(const std::vector<Partition>& parts) {
  return std::adjacent_find(parts.begin(), parts.end(), std::not_equal_to<>()) == parts.end();
}

inline CohomologyElement ring_mul(const CohomologyElement& a, const CohomologyElement& b) { return giambelli_mul(a, b); }
inline QuantumElement ring_mul(const QuantumElement& a, const QuantumElement& b) { return qmul(a, b); }

inline int q_degree_of(const Partition&) { return 0; }
inline int q_degree_of(const QuantumKey& k) { return k.q_degree; }
inline const Partition& shape_of(const Partition& p) { return p; }
inline const Partition& shape_of(const QuantumKey& k) { return k.shape; }

inline BigInt lookup(const CohomologyElement& x, int q_degree, const Partition& shape) {
  return q_degree == 0 ? coefficient_of(x, shape) : BigInt(0);
}
inline BigInt lookup(const QuantumElement& x, int q_degree, const Partition& shape) {
  return qcoefficient_of(x, q_degree, shape);
}

template <class Element>
Element product_of(const GrassmannianContext& ctx, std::span<const Partition> parts) {
  Element x = Element::unit(ctx);
  for (const auto& p : parts) x = ring_mul(x, Element::schubert_class(ctx, p));
  return x;
}

// Coefficient of q^s [pt] in prod sigma_{parts} * sigma_width^s in the ring of
// Element over ctx (s = 0 for the classical ring).
//
// full route: multiply everything out and read the coefficient.
// paired route: split the product as A * B. The coefficient of q^s [pt] in
// q^(d + e) sigma_alpha * sigma_beta is 1 when beta is the box complement of
// alpha and d + e = s, and 0 otherwise (a 3-point invariant with the unit
// class vanishes in positive degree), so the target coefficient is
// sum_alpha A[d, alpha] * B[s - d, complement(alpha)]: a sum of nonnegative
// terms that can be abandoned once it exceeds 1.
template <class Element>
RankResult dictionary_coefficient(const GrassmannianContext& ctx, const std::vector<Partition>& parts, int s,
                                  bool early_exit) {
  constexpr bool quantum = std::is_same_v<Element, QuantumElement>;
  RankResult result;
  result.dictionary_case = quantum ? DictionaryCase::quantum : DictionaryCase::classical;
  result.context_used = ctx;
  for (const auto& p : parts)
    if (!fits_in_box(p, ctx)) return result;

  auto with_specials = [&](Element x) {
    if constexpr (quantum)
      for (int i = 0; i < s; ++i) x = qpieri_mul(x, ctx.width());
    return x;
  };

  if (!early_exit) {
    result.rank = lookup(with_specials(product_of<Element>(ctx, parts)), s, point_class(ctx));
    return result;
  }

  const std::size_t m = parts.size();
  const std::size_t half = m / 2;
  Element a(ctx), b(ctx);
  if (all_equal(parts)) {
    const Element h = product_of<Element>(ctx, std::span(parts).first(half));
    a = (m % 2) ? ring_mul(h, Element::schubert_class(ctx, parts.front())) : h;
    b = h;
  } else {
    a = product_of<Element>(ctx, std::span(parts).first(m - half));
    b = product_of<Element>(ctx, std::span(parts).subspan(m - half));
  }
  b = with_specials(std::move(b));

  const auto left = a.terms().sorted();
  BigInt total = 0;
  for (std::size_t i = 0; i < left.size(); ++i) {
    const auto& [key, coeff] = left[i];
    const int d = q_degree_of(key);
    if (d > s) continue;
    total += coeff * lookup(b, s - d, complement(shape_of(key), ctx));
    if (total > 1 && i + 1 < left.size()) {
      result.lower_bound = true;
      break;
    }
  }
  result.rank = total;
  return result;
}

}  // namespace detail

/// rk V(sl_n, weights, level) by Witten's dictionary. With T = sum |lambda_i|:
///  - T not divisible by n: rank 0;
///  - k = T / n, s = k - level <= 0: coefficient of the point class in
///    prod sigma_{lambda_i} in H*(Gr(n, n + k));
///  - s > 0: coefficient of q^s [pt] in prod sigma_{lambda_i} * sigma_level^s
///    in QH*(Gr(n, n + level)).
inline RankResult rank(const RankQuery& q, RankOptions options = {}) {
  const std::vector<Partition> parts = detail::validated_partitions(q);
  long total = 0;
  for (const auto& p : parts) total += size(p);

  RankResult result;
  if (total % q.n != 0) {
    result.dictionary_case = DictionaryCase::zero_by_congruence;
    return result;
  }
  const int k = static_cast<int>(total / q.n);
  const int s = k - q.level;
  if (k == 0) {
    // Every weight is zero; Gr(n, n) is a point.
    result.rank = 1;
    result.s = s;
    return result;
  }
  if (s <= 0) {
    result = detail::dictionary_coefficient<CohomologyElement>(GrassmannianContext(q.n, q.n + k), parts, 0,
                                                               options.early_exit);
  } else {
    result = detail::dictionary_coefficient<QuantumElement>(GrassmannianContext(q.n, q.n + q.level), parts, s,
                                                            options.early_exit);
  }
  result.s = s;
  return result;
}

/// The quantum pipeline forced onto queries with s <= 0: the coefficient of
/// q^0 [pt] in QH*(Gr(n, n + k)), i.e. the dictionary read at level k.
/// Agrees with rank() everywhere.
inline BigInt rank_via_quantum_route(const RankQuery& q) {
  const std::vector<Partition> parts = detail::validated_partitions(q);
  long total = 0;
  for (const auto& p : parts) total += size(p);
  if (total % q.n != 0) return 0;
  const int k = static_cast<int>(total / q.n);
  if (k == 0) return 1;
  const int level = std::min(k, q.level);
  return detail::dictionary_coefficient<QuantumElement>(GrassmannianContext(q.n, q.n + level), parts, k - level,
                                                        false)
      .rank;
}

inline RankResult symmetric_rank(const SlnWeight& w, int level, RankOptions options = {}) {
  return rank(RankQuery::symmetric(w, level), options);
}

/// Witness (i, m) of w = (level - m) omega_i + m omega_{i+1}.
struct LambdaWitness {
  int i;
  int m;
  friend bool operator==(const LambdaWitness&, const LambdaWitness&) = default;
};

/// Membership in {(level - m) omega_i + m omega_{i+1} : 0 <= m <= level, 0 <= i <= n - 1},
/// with omega_0 = omega_n = 0. Returns the witness with the smallest i, then m.
inline std::optional<LambdaWitness> in_lambda(const SlnWeight& w, int level) {
  if (w.level() > level) throw std::invalid_argument("weight level exceeds the bundle level");
  const int n = w.n();
  for (int i = 0; i <= n - 1; ++i) {
    for (int m = 0; m <= level; ++m) {
      bool match = true;
      for (int j = 1; j <= n - 1 && match; ++j) {
        const int expected = (j == i ? level - m : 0) + (j == i + 1 ? m : 0);
        match = w.coeff(j) == expected;
      }
      if (match) return LambdaWitness{i, m};
    }
  }
  return std::nullopt;
}

struct WeightRecord {
  SlnWeight weight;
  Partition partition;
  RankResult result;
  std::optional<LambdaWitness> lambda;

  /// rank == 1 exactly when the weight lies in Lambda.
  bool consistent() const { return result.is_one() == lambda.has_value(); }
};

struct TheoremReport {
  int n = 0;
  int level = 0;
  std::vector<WeightRecord> records;

  bool pass() const {
    return std::all_of(records.begin(), records.end(), [](const WeightRecord& r) { return r.consistent(); });
  }
};

struct VerifyOptions {
  bool early_exit = false;
  int jobs = 1;
};

/// Runs every weight of sl_n at level <= `level` through rank((lambda)^n) and
/// compares rank == 1 against Lambda membership. Records keep enumeration order
/// regardless of `jobs`.
inline TheoremReport verify_theorem(int n, int level, VerifyOptions options = {}) {
  const std::vector<SlnWeight> weights = enumerate_weights(n, level);
  TheoremReport report{n, level, {}};
  std::vector<std::optional<WeightRecord>> slots(weights.size());

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      for (std::size_t i = next++; i < weights.size(); i = next++) {
        const SlnWeight& w = weights[i];
        slots[i] = WeightRecord{w, weight_to_partition(w), symmetric_rank(w, level, {options.early_exit}),
                                in_lambda(w, level)};
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = weights.size();
    }
  };

  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  report.records.reserve(weights.size());
  for (auto& slot : slots) report.records.push_back(std::move(*slot));
  return report;
}

struct RankComparison {
  BigInt lhs;
  BigInt rhs;
  bool holds = false;
  explicit operator bool() const noexcept { return holds; }
};

/// For lambda = (level^i, mu) with mu_1 < level, compares rk V(lambda^n) with
/// rk V(mu^n), both at `level`.
inline RankComparison check_factorization(const Partition& lambda, int n, int level) {
  if (level < 1) throw std::invalid_argument("level must be positive");
  if (lambda.length() > static_cast<std::size_t>(n - 1))
    throw std::invalid_argument("an sl_n weight partition has at most n-1 rows");
  if (lambda.first() != level) throw std::invalid_argument("the first row must have length equal to the level");
  std::size_t lead = 0;
  while (lambda[lead] == level) ++lead;
  const Partition::storage_type tail(lambda.begin() + static_cast<std::ptrdiff_t>(lead), lambda.end());
  const Partition mu = Partition::from_sorted(tail);

  RankComparison out;
  out.lhs = symmetric_rank(partition_to_weight(lambda, n), level).rank;
  out.rhs = symmetric_rank(partition_to_weight(mu, n), level).rank;
  out.holds = out.lhs == out.rhs;
  return out;
}

/// rk V(mu^n, level) <= rk V(mu^n, level + c).
inline RankComparison check_monotonicity(const Partition& mu, int n, int level, int c) {
  if (c <= 0) throw std::invalid_argument("the level increment must be positive");
  const SlnWeight w = partition_to_weight(mu, n);
  if (w.level() > level) throw std::invalid_argument("weight level exceeds the bundle level");
  RankComparison out;
  out.lhs = symmetric_rank(w, level).rank;
  out.rhs = symmetric_rank(w, level + c).rank;
  out.holds = out.lhs <= out.rhs;
  return out;
}

/// Ranks behind the splitting of ((level - m) omega_i + m omega_{i+1})^n into
/// level-(level - m) and level-m pieces. A level-0 piece is the trivial bundle
/// and counts as rank 1.
struct DecompositionWitness {
  BigInt combined;
  BigInt first;
  BigInt second;
  bool holds() const { return combined == 1 && first == 1 && second == 1; }
};

inline DecompositionWitness decomposition_witness(int n, int level, int m, int i) {
  if (level < 1) throw std::invalid_argument("level must be positive");
  if (m < 0 || m > level) throw std::invalid_argument("m must lie in [0, level]");
  if (i < 1 || i > n - 1) throw std::invalid_argument("i must lie in [1, n-1]");

  const SlnWeight low = SlnWeight::fundamental(n, i, level - m);
  const SlnWeight high = SlnWeight::fundamental(n, i + 1, m);
  std::vector<int> mixed = low.coeffs();
  for (std::size_t j = 0; j < mixed.size(); ++j) mixed[j] += high.coeffs()[j];

  DecompositionWitness out;
  out.combined = symmetric_rank(SlnWeight(n, std::move(mixed)), level).rank;
  out.first = level - m == 0 ? BigInt(1) : symmetric_rank(low, level - m).rank;
  out.second = m == 0 ? BigInt(1) : symmetric_rank(high, m).rank;
  return out;
}

}  // namespace qschubert

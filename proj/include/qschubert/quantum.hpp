#pragma once

// The small quantum cohomology ring QH*(Gr(k, N)) = H*(Gr(k, N)) (x) Z[q],
// deg q = N.

#include <compare>
#include <stdexcept>
#include <string>

#include "qschubert/classical.hpp"

namespace qschubert {

/// Basis monomial q^degree * sigma_shape.
struct QuantumKey {
  int q_degree = 0;
  Partition shape;

  friend bool operator==(const QuantumKey&, const QuantumKey&) = default;
  friend std::strong_ordering operator<=>(const QuantumKey& a, const QuantumKey& b) noexcept {
    if (auto c = a.q_degree <=> b.q_degree; c != 0) return c;
    return a.shape <=> b.shape;
  }
};

struct QuantumKeyHash {
  std::size_t operator()(const QuantumKey& k) const noexcept {
    std::size_t seed = hash_value(k.shape);
    boost::hash_combine(seed, k.q_degree);
    return seed;
  }
};

using QuantumTerms = LinearCombination<QuantumKey, QuantumKeyHash>;

class QuantumElement {
 public:
  /// The zero element.
  explicit QuantumElement(const GrassmannianContext& ctx) : ctx_(ctx) {}

  QuantumElement(const GrassmannianContext& ctx, QuantumTerms terms) : ctx_(ctx), terms_(std::move(terms)) {
    for (const auto& [key, coeff] : terms_) {
      if (key.q_degree < 0) throw std::invalid_argument("negative power of q");
      if (!fits_in_box(key.shape, ctx_))
        throw std::invalid_argument("Schubert index outside the " + to_string(ctx_) + " box");
    }
  }

  static QuantumElement schubert_class(const GrassmannianContext& ctx, const Partition& shape, int q_degree = 0,
                                       const BigInt& coeff = 1) {
    return QuantumElement(ctx, QuantumTerms::single(QuantumKey{q_degree, shape}, coeff));
  }
  static QuantumElement unit(const GrassmannianContext& ctx) { return schubert_class(ctx, Partition{}); }
  static QuantumElement from_classical(const CohomologyElement& x) {
    QuantumTerms terms;
    for (const auto& [shape, coeff] : x.terms()) terms.add(QuantumKey{0, shape}, coeff);
    return QuantumElement(x.context(), std::move(terms));
  }

  const GrassmannianContext& context() const noexcept { return ctx_; }
  const QuantumTerms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  friend QuantumElement operator+(const QuantumElement& a, const QuantumElement& b) {
    if (!(a.ctx_ == b.ctx_)) throw std::invalid_argument("adding classes of different Grassmannians");
    QuantumTerms sum = a.terms_;
    sum.add_scaled(b.terms_, 1);
    return QuantumElement(a.ctx_, std::move(sum));
  }

  friend bool operator==(const QuantumElement& a, const QuantumElement& b) {
    return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
  }

 private:
  GrassmannianContext ctx_;
  QuantumTerms terms_;
};

/// Coefficient of q^q_degree * sigma_shape.
inline const BigInt& qcoefficient_of(const QuantumElement& x, int q_degree, const Partition& shape) {
  return x.terms().coefficient(QuantumKey{q_degree, shape});
}

/// Specialization q = 0.
inline CohomologyElement classical_limit(const QuantumElement& x) {
  ClassicalTerms out;
  for (const auto& [key, coeff] : x.terms())
    if (key.q_degree == 0) out.add(key.shape, coeff);
  return CohomologyElement(x.context(), std::move(out));
}

namespace detail {

inline QuantumTerms quantum_pieri_terms(const QuantumTerms& x, const GrassmannianContext& ctx, int p) {
  QuantumTerms out;
  for (const auto& [key, coeff] : x) {
    for_each_horizontal_strip(key.shape, p, ctx.rows(), ctx.width(),
                              [&](Partition mu) { out.add(QuantumKey{key.q_degree, std::move(mu)}, coeff); });
    for_each_quantum_strip(key.shape, p, ctx.rows(), ctx.width(),
                           [&](Partition nu) { out.add(QuantumKey{key.q_degree + 1, std::move(nu)}, coeff); });
  }
  return out;
}

inline QuantumTerms transpose(const QuantumTerms& x) {
  QuantumTerms out;
  out.reserve(x.size());
  for (const auto& [key, coeff] : x) out.add(QuantumKey{key.q_degree, conjugate(key.shape)}, coeff);
  return out;
}

inline QuantumTerms quantum_giambelli(const GrassmannianContext& ctx, const Partition& seed,
                                      const Partition& expanded) {
  return giambelli_expand(expanded, ctx.width(), QuantumTerms::single(QuantumKey{0, seed}),
                          [&](const QuantumTerms& t, int p) { return quantum_pieri_terms(t, ctx, p); });
}

}  // namespace detail

/// sigma_a * sigma_b in QH*, along the given route, bypassing the memo table.
inline QuantumTerms quantum_product_via(const GrassmannianContext& ctx, const Partition& a, const Partition& b,
                                        ExpansionRoute route = ExpansionRoute::automatic) {
  if (!fits_in_box(a, ctx) || !fits_in_box(b, ctx))
    throw std::invalid_argument("Schubert index outside the " + to_string(ctx) + " box");
  if (route == ExpansionRoute::automatic) route = cheapest_route(a, b);
  QuantumTerms out;
  switch (route) {
    case ExpansionRoute::expand_second:
      out = detail::quantum_giambelli(ctx, a, b);
      break;
    case ExpansionRoute::expand_first:
      out = detail::quantum_giambelli(ctx, b, a);
      break;
    case ExpansionRoute::transposed_expand_second:
      out = detail::transpose(detail::quantum_giambelli(ctx.dual(), conjugate(a), conjugate(b)));
      break;
    case ExpansionRoute::transposed_expand_first:
      out = detail::transpose(detail::quantum_giambelli(ctx.dual(), conjugate(b), conjugate(a)));
      break;
    case ExpansionRoute::automatic:
      break;
  }
  if (out.has_negative())
    throw InconsistencyError("negative quantum Littlewood-Richardson coefficient in " + to_string(ctx) + " product");
  return out;
}

inline ProductCache<QuantumTerms>& quantum_product_cache() {
  static ProductCache<QuantumTerms> cache;
  return cache;
}

/// Memoized sigma_a * sigma_b in QH*.
inline std::shared_ptr<const QuantumTerms> quantum_class_product(const GrassmannianContext& ctx, const Partition& a,
                                                                 const Partition& b) {
  const bool swap = b < a;
  ProductKey key{ctx.rows(), ctx.ambient(), swap ? b : a, swap ? a : b, true};
  return quantum_product_cache().get_or_compute(key, [&] { return quantum_product_via(ctx, key.a, key.b); });
}

/// x * sigma_p by the quantum Pieri rule.
inline QuantumElement qpieri_mul(const QuantumElement& x, int p) {
  if (p < 0 || p > x.context().width())
    throw std::invalid_argument("special class sigma_" + std::to_string(p) + " does not exist in " +
                                to_string(x.context()));
  return QuantumElement(x.context(), detail::quantum_pieri_terms(x.terms(), x.context(), p));
}

/// Quantum product; q-degrees add.
inline QuantumElement qmul(const QuantumElement& x, const QuantumElement& y) {
  if (!(x.context() == y.context())) throw std::invalid_argument("multiplying classes of different Grassmannians");
  const auto& ctx = x.context();
  QuantumTerms out;
  for (const auto& [ka, ca] : x.terms()) {
    for (const auto& [kb, cb] : y.terms()) {
      const BigInt scale = ca * cb;
      const int shift = ka.q_degree + kb.q_degree;
      for (const auto& [key, coeff] : *quantum_class_product(ctx, ka.shape, kb.shape))
        out.add(QuantumKey{key.q_degree + shift, key.shape}, coeff * scale);
    }
  }
  return QuantumElement(ctx, std::move(out));
}

inline QuantumElement qpower(const QuantumElement& x, int e) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  QuantumElement out = QuantumElement::unit(x.context());
  for (int i = 0; i < e; ++i) out = qmul(out, x);
  return out;
}

}  // namespace qschubert

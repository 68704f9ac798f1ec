#pragma once

// The cohomology ring H*(Gr(k, N)) in the Schubert basis.

#include <stdexcept>
#include <string>

#include "qschubert/giambelli.hpp"
#include "qschubert/linear_combination.hpp"
#include "qschubert/partition.hpp"
#include "qschubert/pieri.hpp"
#include "qschubert/product_cache.hpp"

namespace qschubert {

using ClassicalTerms = LinearCombination<Partition, PartitionHash>;

/// Integer combination of Schubert classes of one Grassmannian.
class CohomologyElement {
 public:
  /// The zero element.
  explicit CohomologyElement(const GrassmannianContext& ctx) : ctx_(ctx) {}

  CohomologyElement(const GrassmannianContext& ctx, ClassicalTerms terms) : ctx_(ctx), terms_(std::move(terms)) {
    for (const auto& [shape, coeff] : terms_)
      if (!fits_in_box(shape, ctx_)) throw std::invalid_argument("Schubert index outside the " + to_string(ctx_) + " box");
  }

  static CohomologyElement schubert_class(const GrassmannianContext& ctx, const Partition& shape,
                                          const BigInt& coeff = 1) {
    return CohomologyElement(ctx, ClassicalTerms::single(shape, coeff));
  }
  static CohomologyElement unit(const GrassmannianContext& ctx) { return schubert_class(ctx, Partition{}); }

  const GrassmannianContext& context() const noexcept { return ctx_; }
  const ClassicalTerms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  friend CohomologyElement operator+(const CohomologyElement& a, const CohomologyElement& b) {
    if (!(a.ctx_ == b.ctx_)) throw std::invalid_argument("adding classes of different Grassmannians");
    ClassicalTerms sum = a.terms_;
    sum.add_scaled(b.terms_, 1);
    return CohomologyElement(a.ctx_, std::move(sum));
  }

  friend bool operator==(const CohomologyElement& a, const CohomologyElement& b) {
    return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
  }

 private:
  GrassmannianContext ctx_;
  ClassicalTerms terms_;
};

inline const BigInt& coefficient_of(const CohomologyElement& x, const Partition& shape) {
  return x.terms().coefficient(shape);
}

namespace detail {

inline ClassicalTerms classical_pieri_terms(const ClassicalTerms& x, const GrassmannianContext& ctx, int p) {
  ClassicalTerms out;
  for (const auto& [shape, coeff] : x)
    for_each_horizontal_strip(shape, p, ctx.rows(), ctx.width(), [&](Partition mu) { out.add(std::move(mu), coeff); });
  return out;
}

inline ClassicalTerms transpose(const ClassicalTerms& x) {
  ClassicalTerms out;
  out.reserve(x.size());
  for (const auto& [shape, coeff] : x) out.add(conjugate(shape), coeff);
  return out;
}

inline ClassicalTerms classical_giambelli(const GrassmannianContext& ctx, const Partition& seed,
                                          const Partition& expanded) {
  return giambelli_expand(expanded, ctx.width(), ClassicalTerms::single(seed),
                          [&](const ClassicalTerms& t, int p) { return classical_pieri_terms(t, ctx, p); });
}

}  // namespace detail

/// sigma_a * sigma_b computed along the given route, bypassing the memo table.
inline ClassicalTerms classical_product_via(const GrassmannianContext& ctx, const Partition& a, const Partition& b,
                                            ExpansionRoute route = ExpansionRoute::automatic) {
  if (!fits_in_box(a, ctx) || !fits_in_box(b, ctx))
    throw std::invalid_argument("Schubert index outside the " + to_string(ctx) + " box");
  if (route == ExpansionRoute::automatic) route = cheapest_route(a, b);
  ClassicalTerms out;
  switch (route) {
    case ExpansionRoute::expand_second:
      out = detail::classical_giambelli(ctx, a, b);
      break;
    case ExpansionRoute::expand_first:
      out = detail::classical_giambelli(ctx, b, a);
      break;
    case ExpansionRoute::transposed_expand_second:
      out = detail::transpose(detail::classical_giambelli(ctx.dual(), conjugate(a), conjugate(b)));
      break;
    case ExpansionRoute::transposed_expand_first:
      out = detail::transpose(detail::classical_giambelli(ctx.dual(), conjugate(b), conjugate(a)));
      break;
    case ExpansionRoute::automatic:
      break;
  }
  if (out.has_negative())
    throw InconsistencyError("negative Littlewood-Richardson coefficient in " + to_string(ctx) + " product");
  return out;
}

inline ProductCache<ClassicalTerms>& classical_product_cache() {
  static ProductCache<ClassicalTerms> cache;
  return cache;
}

/// Memoized sigma_a * sigma_b.
inline std::shared_ptr<const ClassicalTerms> classical_class_product(const GrassmannianContext& ctx,
                                                                     const Partition& a, const Partition& b) {
  const bool swap = b < a;
  ProductKey key{ctx.rows(), ctx.ambient(), swap ? b : a, swap ? a : b, false};
  return classical_product_cache().get_or_compute(key, [&] { return classical_product_via(ctx, key.a, key.b); });
}

/// x * sigma_p, p boxes added as horizontal strips; shapes leaving the box vanish.
inline CohomologyElement pieri_mul(const CohomologyElement& x, int p) {
  if (p < 0 || p > x.context().width())
    throw std::invalid_argument("special class sigma_" + std::to_string(p) + " does not exist in " +
                                to_string(x.context()));
  return CohomologyElement(x.context(), detail::classical_pieri_terms(x.terms(), x.context(), p));
}

/// Cup product. Basis products expand one factor as a Giambelli determinant in
/// special classes and apply the Pieri rule; results are memoized.
inline CohomologyElement giambelli_mul(const CohomologyElement& x, const CohomologyElement& y) {
  if (!(x.context() == y.context())) throw std::invalid_argument("multiplying classes of different Grassmannians");
  const auto& ctx = x.context();
  ClassicalTerms out;
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) out.add_scaled(*classical_class_product(ctx, a, b), ca * cb);
  return CohomologyElement(ctx, std::move(out));
}

inline CohomologyElement power(const CohomologyElement& x, int e) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  CohomologyElement out = CohomologyElement::unit(x.context());
  for (int i = 0; i < e; ++i) out = giambelli_mul(out, x);
  return out;
}

}  // namespace qschubert

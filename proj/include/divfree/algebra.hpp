#pragma once

#include <compare>
#include <map>
#include <vector>

#include "divfree/lattice.hpp"

namespace divfree {

/// Exponent vector of the t variables: length l1+l2, entries >= 0.
struct MultiIndex {
  std::vector<int> entries;

  int degree() const {
    int s = 0;
    for (int e : entries) s += e;
    return s;
  }
  bool is_zero() const { return degree() == 0; }
  int at(int p) const {  // 1-based; zero beyond the t range
    return (p >= 1 && p <= static_cast<int>(entries.size())) ? entries[p - 1] : 0;
  }
  MultiIndex plus(int p, int delta = 1) const;  // bumps entry p (1-based)
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
};

/// Basis monomial x^alpha t^i.
struct Monomial {
  GroupElement alpha;
  MultiIndex idx;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Sparse rational combination of monomials; canonical (no zero coefficients).
class AlgebraElement {
 public:
  using Terms = std::map<Monomial, Rational>;

  explicit AlgebraElement(ContextPtr ctx) : ctx_(std::move(ctx)) {}
  AlgebraElement(ContextPtr ctx, const Monomial& m, Rational c = Rational(1));

  static AlgebraElement one(const ContextPtr& ctx);

  const ContextPtr& ctx() const { return ctx_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(const Monomial& m, const Rational& c);

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) {
    return a += b;
  }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) {
    return a -= b;
  }
  AlgebraElement operator-() const;
  AlgebraElement scaled(const Rational& c) const;
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return same_context(a.ctx_, b.ctx_) && a.terms_ == b.terms_;
  }

 private:
  ContextPtr ctx_;
  Terms terms_;
};

/// d_p(x^a t^i) = a_p x^a t^i + i_p x^a t^{i - 1_[p]}, the decrement dropped
/// when it leaves the admissible range.  p is 1-based.
AlgebraElement partial(int p, const AlgebraElement& a);

/// The two-term expansion of d_p on a single monomial.
std::vector<std::pair<Monomial, Rational>> partial_monomial(
    const GroupDescriptor& g, int p, const Monomial& m);

}  // namespace divfree

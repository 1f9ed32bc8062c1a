#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "divfree/algebra.hpp"

namespace divfree {

/// One coefficient slot of a first-order operator: monomial times d_dir.
struct WittKey {
  Monomial mono;
  int dir = 1;  // 1-based direction index

  friend auto operator<=>(const WittKey&, const WittKey&) = default;
};

/// Sparse rational combination sum u_p d_p with algebra coefficients.
class WittElement {
 public:
  using Terms = std::map<WittKey, Rational>;

  explicit WittElement(ContextPtr ctx) : ctx_(std::move(ctx)) {}

  /// The constant-coefficient operator d_p.
  static WittElement direction(const ContextPtr& ctx, int p);

  const ContextPtr& ctx() const { return ctx_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& m, int dir, const Rational& c);

  WittElement& operator+=(const WittElement& o);
  WittElement& operator-=(const WittElement& o);
  friend WittElement operator+(WittElement a, const WittElement& b) { return a += b; }
  friend WittElement operator-(WittElement a, const WittElement& b) { return a -= b; }
  WittElement operator-() const;
  WittElement scaled(const Rational& c) const;

  friend bool operator==(const WittElement& a, const WittElement& b) {
    return same_context(a.ctx_, b.ctx_) && a.terms_ == b.terms_;
  }

 private:
  ContextPtr ctx_;
  Terms terms_;
};

/// Left multiplication by an algebra element (operators form an A-module).
WittElement operator*(const AlgebraElement& a, const WittElement& w);

/// First-order operator action: sum_p u_p d_p(a).
AlgebraElement apply(const WittElement& w, const AlgebraElement& a);

/// [u, v] = sum_{p,q} (u_p d_p(v_q) - v_p d_p(u_q)) d_q.
WittElement bracket(const WittElement& u, const WittElement& v);

/// div(sum u_p d_p) = sum d_p(u_p).
AlgebraElement divergence(const WittElement& w);

/// D_{p,q}(u) = x^rho (d_p(x^{-rho} u) d_q - d_q(x^{-rho} u) d_p).
/// p == q yields the zero operator.
WittElement d_op(int p, int q, const AlgebraElement& u, const GroupElement& rho);

/// Closed form of D_{p,q}(x^a t^i) for rho = 0:
///   x^a t^i (a_p d_q - a_q d_p) + i_p x^a t^{i-1_[p]} d_q - i_q x^a t^{i-1_[q]} d_p.
/// Kept independent of d_op as a cross-checking route.
WittElement d_op_expanded(int p, int q, const Monomial& m, const ContextPtr& ctx);

/// Finite truncation over which spans, orbits, and identities are computed.
struct Window {
  int gamma_radius = 1;       // box |coord_k| <= radius on group coordinates
  int idx_degree = 2;         // bound on |i|
  int sample_count = 100;     // randomized checks
  std::uint64_t seed = 0;

  Window doubled() const {
    return Window{2 * gamma_radius, 2 * idx_degree, sample_count, seed};
  }
};

/// All coordinate vectors of length m with |c_k| <= radius, sorted.
std::vector<GroupElement> enumerate_group_box(int m, int radius);

/// All multi-indices of length n with degree <= maxdeg, sorted.
std::vector<MultiIndex> enumerate_multi_indices(int n, int maxdeg);

/// All window monomials x^a t^i.
std::vector<Monomial> enumerate_monomials(const ContextPtr& ctx, const Window& w);

struct SpanningOp {
  int p = 1, q = 2;  // p < q
  Monomial source;
  WittElement op;
};

using SpanningFamily = std::vector<SpanningOp>;

/// All nonzero D_{p,q}(x^a t^i) with p < q over the window.
SpanningFamily spanning_family(const ContextPtr& ctx, const Window& w,
                               const GroupElement& rho);

/// Window lies inside the key set used for span projections.
bool in_window(const Monomial& m, const Window& w);

/// Restriction of an operator to window-supported slots.
WittElement project_to_window(const WittElement& e, const Window& w);

}  // namespace divfree

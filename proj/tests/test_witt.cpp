#include <doctest.h>

#include "helpers.hpp"

using namespace divfree;
using namespace divfree::testing;

namespace {

WittElement op(const ContextPtr& ctx, const std::string& text) {
  return parse_witt(text, env_for(ctx));
}

AlgebraElement alg(const ContextPtr& ctx, const std::string& text) {
  return parse_algebra(text, env_for(ctx));
}

}  // namespace

TEST_CASE("bracket of a coordinate derivation with a group monomial operator") {
  ContextPtr ctx = standard_context();
  // [d1, x^{(1,0,0)} d2] = x^{(1,0,0)} d2.
  CHECK(bracket(op(ctx, "d1"), op(ctx, "x{1,0,0}*d2")) == op(ctx, "x{1,0,0}*d2"));
  // Coordinate derivations commute.
  CHECK(bracket(op(ctx, "d1"), op(ctx, "d2")).is_zero());
}

TEST_CASE("bracket is bilinear, antisymmetric, and satisfies Jacobi") {
  ContextPtr ctx = mixed_context();
  WittElement a = op(ctx, "x{1,0,0}*t[0,1,0]*d2 - 1/2*d4");
  WittElement b = op(ctx, "t[2,0,0]*d1 + x{0,0,-1}*d3");
  WittElement c = op(ctx, "x{0,1,0}*d2 - 3*t[0,0,1]*d4");
  CHECK(bracket(a, b) + bracket(b, a) == WittElement(ctx));
  CHECK(bracket(a.scaled(Rational(2, 3)), b) == bracket(a, b).scaled(Rational(2, 3)));
  CHECK(bracket(a + b, c) == bracket(a, c) + bracket(b, c));
  WittElement jac =
      bracket(bracket(a, b), c) + bracket(bracket(b, c), a) + bracket(bracket(c, a), b);
  CHECK(jac.is_zero());
}

TEST_CASE("apply realizes operators as derivations of the algebra") {
  ContextPtr ctx = standard_context();
  CHECK(apply(op(ctx, "d2"), alg(ctx, "x{1,0,0}*t[0,1,0]")) == alg(ctx, "x{1,0,0}"));
  AlgebraElement u = alg(ctx, "x{1,2,0}*t[0,3,0]");
  AlgebraElement v = alg(ctx, "2*t[1,0,0] - x{0,0,1}");
  WittElement w = op(ctx, "x{0,1,0}*d1 + t[0,0,1]*d3");
  CHECK(apply(w, u * v) == apply(w, u) * v + u * apply(w, v));
  // Bracket is the commutator of the derivation action.
  WittElement w2 = op(ctx, "x{1,0,0}*t[1,0,0]*d2");
  CHECK(apply(bracket(w, w2), u) ==
        apply(w, apply(w2, u)) - apply(w2, apply(w, u)));
}

TEST_CASE("d_op matches hand expansions") {
  ContextPtr ctx = standard_context();
  // D(1,2; x^{(1,0,0)} t^{(1,0,0)}) = x t^{(1,0,0)} d2 + x d2.
  CHECK(d_op(1, 2, alg(ctx, "x{1,0,0}*t[1,0,0]"), ctx->zero()) ==
        op(ctx, "x{1,0,0}*t[1,0,0]*d2 + x{1,0,0}*d2"));
  // D(1,3; x^{(0,0,1)}) = -x^{(0,0,1)} d1.
  CHECK(d_op(1, 3, alg(ctx, "x{0,0,1}"), ctx->zero()) == op(ctx, "-x{0,0,1}*d1"));
  // D(1,2; t^{(1,1,0)}) = t^{(0,1,0)} d2 - t^{(1,0,0)} d1.
  CHECK(d_op(1, 2, alg(ctx, "t[1,1,0]"), ctx->zero()) ==
        op(ctx, "t[0,1,0]*d2 - t[1,0,0]*d1"));
}

TEST_CASE("d_op is antisymmetric in its indices and vanishes on the diagonal") {
  ContextPtr ctx = mixed_context();
  AlgebraElement u = alg(ctx, "x{1,-1,0}*t[0,1,1]");
  for (int p = 1; p <= 4; ++p) {
    CHECK(d_op(p, p, u, ctx->zero()).is_zero());
    for (int q = 1; q <= 4; ++q)
      CHECK(d_op(p, q, u, ctx->zero()) + d_op(q, p, u, ctx->zero()) ==
            WittElement(ctx));
  }
}

TEST_CASE("d_op agrees with the closed-form expansion") {
  ContextPtr ctx = mixed_context();
  Window w;  // radius 1, degree 2
  for (const auto& m : enumerate_monomials(ctx, w))
    for (int p = 1; p <= 4; ++p)
      for (int q = 1; q <= 4; ++q)
        CHECK(d_op(p, q, AlgebraElement(ctx, m), ctx->zero()) ==
              d_op_expanded(p, q, m, ctx));
}

TEST_CASE("twisted d_op still produces Lie-closed operators") {
  ContextPtr ctx = standard_context();
  GroupElement rho = g3(1, 0, -1);
  WittElement a = d_op(1, 2, alg(ctx, "x{0,1,0}*t[1,0,0]"), rho);
  WittElement b = d_op(2, 3, alg(ctx, "x{-1,0,1}"), rho);
  CHECK(!a.is_zero());
  // The twist changes divergence but not antisymmetry of the construction.
  CHECK(a + d_op(2, 1, alg(ctx, "x{0,1,0}*t[1,0,0]"), rho) == WittElement(ctx));
  CHECK(bracket(a, b) + bracket(b, a) == WittElement(ctx));
}

TEST_CASE("divergence of untwisted operators vanishes") {
  ContextPtr ctx = standard_context();
  CHECK(divergence(d_op(1, 2, alg(ctx, "x{1,1,0}*t[0,2,0]"), ctx->zero()))
            .is_zero());
  // A non-divergence-free operator for contrast.
  CHECK(divergence(op(ctx, "t[1,0,0]*d1")) == AlgebraElement::one(ctx));
}

TEST_CASE("bracket recurrence frozen sample") {
  ContextPtr ctx = standard_context();
  // [D(1,2; t^{(1,1,0)}), D(1,2; t^{(2,0,0)})] = -2 D(1,2; t^{(2,0,0)}).
  WittElement lhs = bracket(d_op(1, 2, alg(ctx, "t[1,1,0]"), ctx->zero()),
                            d_op(1, 2, alg(ctx, "t[2,0,0]"), ctx->zero()));
  CHECK(lhs == d_op(1, 2, alg(ctx, "t[2,0,0]"), ctx->zero()).scaled(Rational(-2)));
  CHECK(print(lhs) == "-4*t[1,0,0]*d2");
}

TEST_CASE("window enumeration sizes") {
  ContextPtr ctx = standard_context();
  CHECK(enumerate_group_box(3, 1).size() == 27);
  CHECK(enumerate_group_box(3, 0).size() == 1);
  CHECK(enumerate_multi_indices(3, 2).size() == 10);
  CHECK(enumerate_multi_indices(3, 0).size() == 1);
  Window w;
  CHECK(enumerate_monomials(ctx, w).size() == 270);
  for (const auto& s : spanning_family(ctx, w, ctx->zero())) {
    CHECK(s.p < s.q);
    CHECK(!s.op.is_zero());
    CHECK(in_window(s.source, w));
  }
}

TEST_CASE("window projection keeps only window slots") {
  ContextPtr ctx = standard_context();
  Window w;
  w.gamma_radius = 0;
  WittElement e = op(ctx, "x{1,0,0}*d1 + t[1,1,0]*d2");
  WittElement p = project_to_window(e, w);
  CHECK(p == op(ctx, "t[1,1,0]*d2"));
  w.idx_degree = 1;
  CHECK(project_to_window(e, w).is_zero());
}

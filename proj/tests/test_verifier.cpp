#include <doctest.h>

#include "helpers.hpp"
#include "divfree/verifier.hpp"

using namespace divfree;
using namespace divfree::testing;

namespace {

Window small_window() {
  Window w;
  w.gamma_radius = 1;
  w.idx_degree = 1;
  w.sample_count = 25;
  w.seed = 0;
  return w;
}

}  // namespace

TEST_CASE("lie axiom check passes and is deterministic") {
  ContextPtr ctx = standard_context();
  Report r1 = check_lie_axioms(ctx, small_window());
  Report r2 = check_lie_axioms(ctx, small_window());
  CHECK(r1.pass);
  CHECK(r1.tested == r2.tested);
  CHECK(r1.counterexample.empty());
}

TEST_CASE("corrupted bracket is caught with a counterexample") {
  ContextPtr ctx = standard_context();
  // Leak the left operand into the result: antisymmetry breaks.
  Report r = check_lie_axioms_with(
      ctx, small_window(), [](const WittElement& a, const WittElement& b) {
        return bracket(a, b) + a;
      });
  CHECK(!r.pass);
  CHECK(!r.counterexample.empty());
}

TEST_CASE("divergence check passes with untwisted operators") {
  Report r = check_divergence_free(standard_context(), small_window());
  CHECK(r.pass);
  CHECK(r.tested > 0);
}

TEST_CASE("operator expansion oracle agrees on both contexts") {
  for (const ContextPtr& ctx : {standard_context(), mixed_context()}) {
    Report r = check_operator_expansion(ctx, small_window());
    CHECK(r.pass);
  }
}

TEST_CASE("bracket recurrence holds on sampled tuples") {
  Report r = check_recurrence(mixed_context(), small_window());
  CHECK(r.pass);
}

TEST_CASE("generator closure reaches all window operators") {
  ContextPtr ctx = standard_context();
  Window w = small_window();
  CHECK(check_generators(ctx, w, GeneratorVariant::prop21).pass);
  CHECK(check_generators(ctx, w, GeneratorVariant::cor22).pass);
}

TEST_CASE("removing the group-translation generators breaks closure") {
  ContextPtr ctx = standard_context();
  Window w = small_window();
  // Keep only the t-part generators: targets with nonzero group part are
  // unreachable, and the failure is a report, not an exception.
  std::vector<WittElement> gens;
  MultiIndex zero_idx{{0, 0, 0}};
  for (const auto& j : enumerate_multi_indices(3, 2)) {
    AlgebraElement u(ctx, Monomial{ctx->zero(), j});
    for (int p = 1; p <= 3; ++p)
      for (int q = p + 1; q <= 3; ++q)
        if (WittElement op = d_op(p, q, u, ctx->zero()); !op.is_zero())
          gens.push_back(op);
  }
  std::vector<WittElement> targets;
  for (const auto& s : spanning_family(ctx, w, ctx->zero()))
    if (!s.source.alpha.is_zero()) targets.push_back(s.op);
  Report r = generator_closure(ctx, w, gens, targets, "mutation");
  CHECK(!r.pass);
  REQUIRE(!r.counterexample.empty());
  CHECK(r.counterexample.front() == "window too small to close");
}

TEST_CASE("module checks pass for every kind") {
  Window w = small_window();
  ContextPtr ctx = standard_context();
  ContextPtr gctx = graded_context();
  Weight half = weight({Rational(1, 2), Rational(0), Rational(0)});
  Weight one = weight({Rational(1), Rational(0), Rational(0)});
  CHECK(check_module(ModuleDescriptor(ModuleKind::a_mu, half, ctx), w).pass);
  CHECK(check_module(ModuleDescriptor(ModuleKind::a_mu, one, ctx), w).pass);
  CHECK(check_module(
            ModuleDescriptor(ModuleKind::a_mu_quotient,
                             weight({Rational(0), Rational(0), Rational(0)}), ctx),
            w)
            .pass);
  CHECK(check_module(ModuleDescriptor(ModuleKind::graded_m, half, gctx), w).pass);
  CHECK(check_module(ModuleDescriptor(ModuleKind::graded_a, one, gctx), w).pass);
  CHECK(check_module(ModuleDescriptor(ModuleKind::graded_b, one, gctx), w).pass);
}

TEST_CASE("cyclicity evidence distinguishes integral from generic mu") {
  ContextPtr ctx = standard_context();
  Window w = small_window();
  Weight half = weight({Rational(1, 2), Rational(0), Rational(0)});
  Weight one = weight({Rational(1), Rational(0), Rational(0)});
  CHECK(check_irreducibility_evidence(
            ModuleDescriptor(ModuleKind::a_mu, half, ctx), w)
            .pass);
  // For mu in the group the coset vector generates only itself, and the
  // quotient is cyclic everywhere.
  CHECK(check_irreducibility_evidence(
            ModuleDescriptor(ModuleKind::a_mu, one, ctx), w)
            .pass);
  CHECK(check_irreducibility_evidence(
            ModuleDescriptor(ModuleKind::a_mu_quotient, one, ctx), w)
            .pass);
}

TEST_CASE("weight multiplicities") {
  ContextPtr ctx = standard_context();
  Window w = small_window();
  w.idx_degree = 2;
  Weight half = weight({Rational(1, 2), Rational(0), Rational(0)});
  CHECK(check_weight_multiplicities(
            ModuleDescriptor(ModuleKind::a_mu, half, ctx), w)
            .pass);
  // On the quotient at mu = 0 the zero weight space has dimension l1+l2 = 3.
  CHECK(check_weight_multiplicities(
            ModuleDescriptor(ModuleKind::a_mu_quotient,
                             weight({Rational(0), Rational(0), Rational(0)}), ctx),
            w)
            .pass);
}

TEST_CASE("shift intertwiner") {
  ContextPtr ctx = standard_context();
  Weight half = weight({Rational(1, 2), Rational(0), Rational(0)});
  CHECK(check_shift_iso(ctx, half, g3(1, 0, 0), small_window()).pass);
  // gamma = 0 is the identity map.
  CHECK(check_shift_iso(ctx, half, g3(0, 0, 0), small_window()).pass);
}

TEST_CASE("eigen_split on a diagonal operator") {
  auto q = [](long n, long d = 1) { return Rational(n, d); };
  Matrix T{{q(1), q(0), q(0)}, {q(0), q(2), q(0)}, {q(0), q(0), q(2)}};
  Matrix subspace{{q(1), q(0), q(0)}, {q(0), q(1), q(1)}};
  Report r = eigen_split(T, subspace, {q(3), q(5), q(5)});
  CHECK(r.pass);

  // A component outside the subspace is detected: w = e1 + e2 has
  // eigencomponents e1 (inside) and e2 (outside span{e1, e2+e3}).
  Report bad = eigen_split(T, subspace, {q(1), q(1), q(1)});
  CHECK(bad.pass);  // (1,1,1) = e1 + (e2+e3), both inside
  Matrix narrow{{q(1), q(1), q(0)}};
  Report outside = eigen_split(T, narrow, {q(1), q(1), q(0)});
  CHECK(!outside.pass);  // subspace is not T-stable
}

TEST_CASE("eigen_split reports non-rational and non-semisimple spectra") {
  auto q = [](long n, long d = 1) { return Rational(n, d); };
  // Rotation: eigenvalues +-i.
  Matrix rot{{q(0), q(-1)}, {q(1), q(0)}};
  Matrix full{{q(1), q(0)}, {q(0), q(1)}};
  Report r = eigen_split(rot, full, {q(1), q(0)});
  CHECK(!r.pass);
  REQUIRE(!r.counterexample.empty());
  // Jordan block: repeated eigenvalue, not semisimple on the cyclic subspace.
  Matrix jordan{{q(1), q(1)}, {q(0), q(1)}};
  Report j = eigen_split(jordan, full, {q(0), q(1)});
  CHECK(!j.pass);
}

TEST_CASE("grading operator has integer spectrum on the window span") {
  // t^{1_[p]} d_p - t^{1_[q]} d_q acts on the span of v_{0,j} with
  // eigenvalues j_p - j_q after the weight part cancels (mu = 0, beta = 0).
  ContextPtr ctx = standard_context();
  ModuleDescriptor desc(ModuleKind::a_mu,
                        weight({Rational(0), Rational(0), Rational(0)}), ctx);
  auto idxs = enumerate_multi_indices(3, 2);
  std::map<MultiIndex, int> pos;
  int n = 0;
  for (const auto& j : idxs) pos.emplace(j, n++);
  WittElement op(ctx);
  op.add_term(Monomial{ctx->zero(), idx({1, 0, 0})}, 1, Rational(1));
  op.add_term(Monomial{ctx->zero(), idx({0, 1, 0})}, 2, Rational(-1));
  Matrix T(n, std::vector<Rational>(n, Rational(0)));
  for (const auto& j : idxs) {
    ModuleElement img = act(op, ModuleElement(desc, BasisKey{ctx->zero(), j}));
    for (const auto& [k, c] : img.terms()) {
      auto it = pos.find(k.j);
      if (it != pos.end()) T[it->second][pos.at(j)] = c;
    }
  }
  Matrix full(n, std::vector<Rational>(n, Rational(0)));
  for (int k = 0; k < n; ++k) full[k][k] = 1;
  std::vector<Rational> w(n, Rational(0));
  w[pos.at(idx({1, 0, 0}))] = 1;  // eigenvalue 1
  w[pos.at(idx({0, 1, 0}))] = 2;  // eigenvalue -1
  w[pos.at(idx({1, 1, 0}))] = 3;  // eigenvalue 0
  Report r = eigen_split(T, full, w);
  CHECK(r.pass);
}

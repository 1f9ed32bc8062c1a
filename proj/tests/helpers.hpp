#pragma once

#include "divfree/config.hpp"
#include "divfree/io.hpp"

namespace divfree::testing {

// l1=0, l2=3, l3=0 over the standard lattice Z^3.
inline ContextPtr standard_context() {
  Signature sig{0, 3, 0};
  std::vector<std::vector<Rational>> gens{
      {Rational(1), Rational(0), Rational(0)},
      {Rational(0), Rational(1), Rational(0)},
      {Rational(0), Rational(0), Rational(1)}};
  return std::make_shared<const GroupDescriptor>(sig, gens);
}

// l1=1, l2=2, l3=1 with non-integer independent generators.
inline ContextPtr mixed_context() {
  Signature sig{1, 2, 1};
  std::vector<std::vector<Rational>> gens{
      {Rational(1, 2), Rational(0), Rational(0)},
      {Rational(1, 3), Rational(1), Rational(0)},
      {Rational(0), Rational(-1, 2), Rational(1)}};
  return std::make_shared<const GroupDescriptor>(sig, gens);
}

// l1=0, l2=0, l3=3: no t variables, the setting of the graded module kinds.
inline ContextPtr graded_context() {
  Signature sig{0, 0, 3};
  std::vector<std::vector<Rational>> gens{
      {Rational(1), Rational(0), Rational(0)},
      {Rational(0), Rational(1), Rational(0)},
      {Rational(0), Rational(0), Rational(1)}};
  return std::make_shared<const GroupDescriptor>(sig, gens);
}

inline Weight weight(std::vector<Rational> e) { return Weight{std::move(e)}; }

inline GroupElement g3(std::int64_t a, std::int64_t b, std::int64_t c) {
  return GroupElement{{a, b, c}};
}

inline MultiIndex idx(std::vector<int> e) { return MultiIndex{std::move(e)}; }

inline ParseEnv env_for(const ContextPtr& ctx, Weight mu) {
  return ParseEnv{ctx, ctx->zero(),
                  ModuleDescriptor(ModuleKind::a_mu, std::move(mu), ctx)};
}

inline ParseEnv env_for(const ContextPtr& ctx) {
  return env_for(ctx, Weight{std::vector<Rational>(ctx->sig().l(), Rational(0))});
}

}  // namespace divfree::testing

#pragma once

#include <compare>
#include <map>
#include <optional>
#include <vector>

#include "divfree/witt.hpp"

namespace divfree {

enum class ModuleKind { a_mu, a_mu_quotient, graded_m, graded_a, graded_b };

const char* kind_name(ModuleKind k);

/// Which module a vector lives in: the kind, its weight parameter (mu for the
/// first three kinds, eta for the graded a/b kinds), and the group context.
class ModuleDescriptor {
 public:
  ModuleDescriptor(ModuleKind kind, Weight param, ContextPtr ctx);

  ModuleKind kind() const { return kind_; }
  const Weight& param() const { return param_; }
  const ContextPtr& ctx() const { return ctx_; }
  bool graded() const {
    return kind_ == ModuleKind::graded_m || kind_ == ModuleKind::graded_a ||
           kind_ == ModuleKind::graded_b;
  }
  /// Coordinates of -mu; present only for the quotient kind.
  const std::optional<GroupElement>& zero_coset() const { return zero_coset_; }

  friend bool operator==(const ModuleDescriptor& a, const ModuleDescriptor& b) {
    return a.kind_ == b.kind_ && a.param_ == b.param_ &&
           same_context(a.ctx_, b.ctx_);
  }

 private:
  ModuleKind kind_;
  Weight param_;
  ContextPtr ctx_;
  std::optional<GroupElement> zero_coset_;
};

/// Basis vector label v_{beta, j}; j is all-zero for graded kinds.
struct BasisKey {
  GroupElement beta;
  MultiIndex j;

  friend auto operator<=>(const BasisKey&, const BasisKey&) = default;
};

/// Sparse rational combination of basis vectors of one module.
class ModuleElement {
 public:
  using Terms = std::map<BasisKey, Rational>;

  explicit ModuleElement(ModuleDescriptor desc) : desc_(std::move(desc)) {}
  ModuleElement(ModuleDescriptor desc, const BasisKey& k, Rational c = Rational(1));

  const ModuleDescriptor& descriptor() const { return desc_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const BasisKey& k, const Rational& c);

  ModuleElement& operator+=(const ModuleElement& o);
  ModuleElement& operator-=(const ModuleElement& o);
  friend ModuleElement operator+(ModuleElement a, const ModuleElement& b) {
    return a += b;
  }
  friend ModuleElement operator-(ModuleElement a, const ModuleElement& b) {
    return a -= b;
  }
  ModuleElement scaled(const Rational& c) const;

  friend bool operator==(const ModuleElement& a, const ModuleElement& b) {
    return a.desc_ == b.desc_ && a.terms_ == b.terms_;
  }

 private:
  ModuleDescriptor desc_;
  Terms terms_;
};

/// (x^alpha t^i d_p).v_{beta,j} =
///   (beta_p + mu_p) v_{beta+alpha, i+j} + j_p v_{beta+alpha, i+j-1_[p]},
/// the decrement dropped when out of range.  Result lives in A_mu.
ModuleElement act_monomial_op(const ModuleDescriptor& desc,
                              const GroupElement& alpha, const MultiIndex& i,
                              int p, const GroupElement& beta,
                              const MultiIndex& j);

/// Bilinear extension of the kind's action rule.  The quotient kind projects
/// out the zero coset; graded kinds check d in ker(alpha) per term.
ModuleElement act(const WittElement& w, const ModuleElement& v);

/// The literal four-term closed formula for D_{p,q}(x^alpha t^i).v_{beta,j};
/// an independent route used for cross-checking act.
ModuleElement thm_formula(const ModuleDescriptor& desc, int p, int q,
                          const GroupElement& alpha, const MultiIndex& i,
                          const GroupElement& beta, const MultiIndex& j);

/// Generalized weight carried by one basis vector of the module.
Weight term_weight(const ModuleDescriptor& desc, const BasisKey& k);

/// Splits v into components of equal generalized weight; components sum to v.
std::map<Weight, ModuleElement> weight_decompose(const ModuleElement& v);

/// Smallest n such that (d_r - w_r)^{n+1} kills v for every coordinate
/// derivation d_r; absent when v mixes generalized weights.
std::optional<int> filtration_degree(const ModuleElement& v, const Weight& w);

/// Total order on multi-indices: degree first, then the highest differing
/// position decides.
std::strong_ordering order_compare(const MultiIndex& i, const MultiIndex& j);

/// Relabels v_{beta,j} -> v_{beta-gamma,j}, mapping A_mu to A_{mu+gamma}.
ModuleElement shift_map(const ModuleElement& v, const GroupElement& gamma);

}  // namespace divfree

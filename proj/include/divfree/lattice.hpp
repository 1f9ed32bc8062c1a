#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "divfree/rational.hpp"

namespace divfree {

/// (l1, l2, l3) with l = l1 + l2 + l3 >= 1.
struct Signature {
  int l1 = 0;
  int l2 = 0;
  int l3 = 0;

  int l() const { return l1 + l2 + l3; }
  int nvars() const { return l1 + l2; }  // number of t variables
  int gdim() const { return l2 + l3; }   // ambient dimension of the group

  // Hypothesis of the classification theorem: l1+l2 >= 3 and l2+l3 >= 3.
  bool theorem_hypothesis() const { return l1 + l2 >= 3 && l2 + l3 >= 3; }

  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Element of the group, as integer coefficients over the fixed generators.
struct GroupElement {
  std::vector<std::int64_t> coords;

  bool is_zero() const {
    for (auto c : coords)
      if (c != 0) return false;
    return true;
  }
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

GroupElement group_add(const GroupElement& a, const GroupElement& b);
GroupElement group_neg(const GroupElement& a);

/// Length-l rational vector with the first l1 entries zero by convention.
struct Weight {
  std::vector<Rational> entries;

  bool is_zero() const {
    for (const auto& e : entries)
      if (e != 0) return false;
    return true;
  }
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

Weight weight_add(const Weight& a, const Weight& b);
Weight weight_neg(const Weight& a);

/// An element sum a_p d_p of the span of the coordinate derivations.
struct Derivation {
  std::vector<Rational> coeffs;

  friend bool operator==(const Derivation&, const Derivation&) = default;
};

/// The group together with the signature: the fixed generator matrix and
/// everything needed to move between coordinate and ambient descriptions.
/// Generators must be linearly independent over the rationals and span the
/// ambient space, so the generator matrix is square and invertible.
class GroupDescriptor {
 public:
  GroupDescriptor(Signature sig, std::vector<std::vector<Rational>> generators);

  const Signature& sig() const { return sig_; }
  int rank() const { return static_cast<int>(generators_.size()); }
  const std::vector<std::vector<Rational>>& generators() const { return generators_; }

  /// sum_k coords_k * generator_k, embedded in length l with leading zeros.
  Weight ambient(const GroupElement& g) const;

  /// Single ambient coordinate (1-based p); zero for p <= l1.
  Rational ambient_coord(const GroupElement& g, int p) const;

  /// Exact decision: coordinates of mu over the generators if mu lies in the
  /// group, absent otherwise.
  std::optional<GroupElement> membership(const Weight& mu) const;

  GroupElement zero() const { return GroupElement{std::vector<std::int64_t>(rank(), 0)}; }

  friend bool operator==(const GroupDescriptor& a, const GroupDescriptor& b) {
    return a.sig_ == b.sig_ && a.generators_ == b.generators_;
  }

 private:
  Signature sig_;
  std::vector<std::vector<Rational>> generators_;  // m x gdim, m == gdim
  std::vector<std::vector<Rational>> inverse_;     // gdim x gdim
};

using ContextPtr = std::shared_ptr<const GroupDescriptor>;

inline bool same_context(const ContextPtr& a, const ContextPtr& b) {
  return a == b || (a && b && *a == *b);
}

inline void require_same_context(const ContextPtr& a, const ContextPtr& b) {
  if (!same_context(a, b)) throw std::invalid_argument("group descriptor mismatch");
}

/// <d, b> = sum_{p=l1+1}^{l} a_p b_p; the first l1 coordinates never
/// contribute.
Rational pairing(const Derivation& d, const Weight& b, const Signature& sig);

/// Exact basis of { d : pairing(d, b) = 0 }.  Dimension l when b = 0,
/// otherwise l-1; always contains the first l1 coordinate directions.
std::vector<Derivation> kernel_basis(const Weight& b, const Signature& sig);

}  // namespace divfree

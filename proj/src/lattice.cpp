#include "divfree/lattice.hpp"

#include "divfree/linalg.hpp"

namespace divfree {

GroupElement group_add(const GroupElement& a, const GroupElement& b) {
  if (a.coords.size() != b.coords.size())
    throw std::invalid_argument("group element dimension mismatch");
  GroupElement r = a;
  for (std::size_t k = 0; k < r.coords.size(); ++k) r.coords[k] += b.coords[k];
  return r;
}

GroupElement group_neg(const GroupElement& a) {
  GroupElement r = a;
  for (auto& c : r.coords) c = -c;
  return r;
}

Weight weight_add(const Weight& a, const Weight& b) {
  if (a.entries.size() != b.entries.size())
    throw std::invalid_argument("weight dimension mismatch");
  Weight r = a;
  for (std::size_t k = 0; k < r.entries.size(); ++k) r.entries[k] += b.entries[k];
  return r;
}

Weight weight_neg(const Weight& a) {
  Weight r = a;
  for (auto& e : r.entries) e = -e;
  return r;
}

GroupDescriptor::GroupDescriptor(Signature sig,
                                 std::vector<std::vector<Rational>> generators)
    : sig_(sig), generators_(std::move(generators)) {
  if (sig_.l1 < 0 || sig_.l2 < 0 || sig_.l3 < 0 || sig_.l() < 1)
    throw std::invalid_argument("signature requires l >= 1");
  const int n = sig_.gdim();
  if (n == 0) {
    if (!generators_.empty())
      throw std::invalid_argument("generators must be empty when l2+l3 = 0");
    return;
  }
  for (const auto& g : generators_)
    if (static_cast<int>(g.size()) != n)
      throw std::invalid_argument("generator length mismatch");
  // Independence over the rationals forces m <= gdim; spanning forces m >= gdim.
  if (static_cast<int>(generators_.size()) != n ||
      ::divfree::rank(generators_) != n)
    throw std::invalid_argument(
        "generators must be independent and span the ambient space");
  inverse_ = inverse(generators_);
}

Weight GroupDescriptor::ambient(const GroupElement& g) const {
  if (static_cast<int>(g.coords.size()) != rank())
    throw std::invalid_argument("coordinate dimension mismatch");
  Weight w{std::vector<Rational>(sig_.l(), Rational(0))};
  for (int k = 0; k < rank(); ++k) {
    if (g.coords[k] == 0) continue;
    Rational c(static_cast<long>(g.coords[k]));
    for (int j = 0; j < sig_.gdim(); ++j)
      w.entries[sig_.l1 + j] += c * generators_[k][j];
  }
  return w;
}

Rational GroupDescriptor::ambient_coord(const GroupElement& g, int p) const {
  if (p < 1 || p > sig_.l()) throw std::out_of_range("ambient coordinate index");
  if (p <= sig_.l1) return Rational(0);
  const int j = p - 1 - sig_.l1;
  Rational acc(0);
  for (int k = 0; k < rank(); ++k) {
    if (g.coords[k] == 0) continue;
    acc += Rational(static_cast<long>(g.coords[k])) * generators_[k][j];
  }
  return acc;
}

std::optional<GroupElement> GroupDescriptor::membership(const Weight& mu) const {
  if (static_cast<int>(mu.entries.size()) != sig_.l())
    throw std::invalid_argument("weight dimension mismatch");
  for (int p = 0; p < sig_.l1; ++p)
    if (mu.entries[p] != 0) return std::nullopt;
  GroupElement g{std::vector<std::int64_t>(rank(), 0)};
  // coords = tail(mu) * inverse of the generator matrix.
  for (int k = 0; k < rank(); ++k) {
    Rational c(0);
    for (int j = 0; j < sig_.gdim(); ++j)
      c += mu.entries[sig_.l1 + j] * inverse_[j][k];
    if (c.get_den() != 1) return std::nullopt;
    if (!c.get_num().fits_slong_p())
      throw std::overflow_error("group coordinate out of range");
    g.coords[k] = c.get_num().get_si();
  }
  return g;
}

Rational pairing(const Derivation& d, const Weight& b, const Signature& sig) {
  if (static_cast<int>(d.coeffs.size()) != sig.l() ||
      static_cast<int>(b.entries.size()) != sig.l())
    throw std::invalid_argument("pairing dimension mismatch");
  Rational acc(0);
  for (int p = sig.l1; p < sig.l(); ++p) acc += d.coeffs[p] * b.entries[p];
  return acc;
}

std::vector<Derivation> kernel_basis(const Weight& b, const Signature& sig) {
  const int l = sig.l();
  std::vector<Derivation> basis;
  // The first l1 directions never pair against anything.
  for (int p = 0; p < sig.l1; ++p) {
    Derivation d{std::vector<Rational>(l, Rational(0))};
    d.coeffs[p] = 1;
    basis.push_back(std::move(d));
  }
  // Nullspace of the single linear form restricted to coordinates > l1.
  Matrix row(1, std::vector<Rational>(sig.gdim()));
  for (int j = 0; j < sig.gdim(); ++j) row[0][j] = b.entries[sig.l1 + j];
  for (const auto& v : nullspace(row)) {
    Derivation d{std::vector<Rational>(l, Rational(0))};
    for (int j = 0; j < sig.gdim(); ++j) d.coeffs[sig.l1 + j] = v[j];
    basis.push_back(std::move(d));
  }
  return basis;
}

}  // namespace divfree

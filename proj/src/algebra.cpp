#include "divfree/algebra.hpp"

namespace divfree {

MultiIndex MultiIndex::plus(int p, int delta) const {
  if (p < 1 || p > static_cast<int>(entries.size()))
    throw std::out_of_range("multi-index position");
  MultiIndex r = *this;
  r.entries[p - 1] += delta;
  if (r.entries[p - 1] < 0) throw std::invalid_argument("negative exponent");
  return r;
}

AlgebraElement::AlgebraElement(ContextPtr ctx, const Monomial& m, Rational c)
    : ctx_(std::move(ctx)) {
  add_term(m, c);
}

AlgebraElement AlgebraElement::one(const ContextPtr& ctx) {
  Monomial m{ctx->zero(), MultiIndex{std::vector<int>(ctx->sig().nvars(), 0)}};
  return AlgebraElement(ctx, m);
}

void AlgebraElement::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  if (static_cast<int>(m.alpha.coords.size()) != ctx_->rank() ||
      static_cast<int>(m.idx.entries.size()) != ctx_->sig().nvars())
    throw std::invalid_argument("monomial shape mismatch");
  for (int e : m.idx.entries)
    if (e < 0) throw std::invalid_argument("negative exponent");
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  require_same_context(ctx_, o.ctx_);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  require_same_context(ctx_, o.ctx_);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

AlgebraElement AlgebraElement::operator-() const { return scaled(Rational(-1)); }

AlgebraElement AlgebraElement::scaled(const Rational& c) const {
  AlgebraElement r(ctx_);
  if (c == 0) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, c * v);
  return r;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_context(a.ctx_, b.ctx_);
  AlgebraElement r(a.ctx_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m{group_add(ma.alpha, mb.alpha),
                 MultiIndex{ma.idx.entries}};
      for (std::size_t k = 0; k < m.idx.entries.size(); ++k)
        m.idx.entries[k] += mb.idx.entries[k];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

std::vector<std::pair<Monomial, Rational>> partial_monomial(
    const GroupDescriptor& g, int p, const Monomial& m) {
  if (p < 1 || p > g.sig().l()) throw std::out_of_range("derivation index");
  std::vector<std::pair<Monomial, Rational>> out;
  Rational ap = g.ambient_coord(m.alpha, p);
  if (ap != 0) out.emplace_back(m, ap);
  int ip = m.idx.at(p);
  if (ip > 0) out.emplace_back(Monomial{m.alpha, m.idx.plus(p, -1)},
                               Rational(ip));
  return out;
}

AlgebraElement partial(int p, const AlgebraElement& a) {
  AlgebraElement r(a.ctx());
  for (const auto& [m, c] : a.terms())
    for (const auto& [dm, dc] : partial_monomial(*a.ctx(), p, m))
      r.add_term(dm, c * dc);
  return r;
}

}  // namespace divfree

#include "divfree/witt.hpp"

namespace divfree {

WittElement WittElement::direction(const ContextPtr& ctx, int p) {
  WittElement w(ctx);
  Monomial one{ctx->zero(), MultiIndex{std::vector<int>(ctx->sig().nvars(), 0)}};
  w.add_term(one, p, Rational(1));
  return w;
}

void WittElement::add_term(const Monomial& m, int dir, const Rational& c) {
  if (c == 0) return;
  if (dir < 1 || dir > ctx_->sig().l()) throw std::out_of_range("direction index");
  auto [it, inserted] = terms_.try_emplace(WittKey{m, dir}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

WittElement& WittElement::operator+=(const WittElement& o) {
  require_same_context(ctx_, o.ctx_);
  for (const auto& [k, c] : o.terms_) add_term(k.mono, k.dir, c);
  return *this;
}

WittElement& WittElement::operator-=(const WittElement& o) {
  require_same_context(ctx_, o.ctx_);
  for (const auto& [k, c] : o.terms_) add_term(k.mono, k.dir, -c);
  return *this;
}

WittElement WittElement::operator-() const { return scaled(Rational(-1)); }

WittElement WittElement::scaled(const Rational& c) const {
  WittElement r(ctx_);
  if (c == 0) return r;
  for (const auto& [k, v] : terms_) r.terms_.emplace(k, c * v);
  return r;
}

WittElement operator*(const AlgebraElement& a, const WittElement& w) {
  require_same_context(a.ctx(), w.ctx());
  WittElement r(w.ctx());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [k, cw] : w.terms()) {
      Monomial m{group_add(ma.alpha, k.mono.alpha), MultiIndex{ma.idx.entries}};
      for (std::size_t j = 0; j < m.idx.entries.size(); ++j)
        m.idx.entries[j] += k.mono.idx.entries[j];
      r.add_term(m, k.dir, ca * cw);
    }
  }
  return r;
}

AlgebraElement apply(const WittElement& w, const AlgebraElement& a) {
  require_same_context(w.ctx(), a.ctx());
  AlgebraElement r(a.ctx());
  const GroupDescriptor& g = *a.ctx();
  for (const auto& [k, cw] : w.terms()) {
    for (const auto& [m, ca] : a.terms()) {
      for (const auto& [dm, dc] : partial_monomial(g, k.dir, m)) {
        Monomial prod{group_add(k.mono.alpha, dm.alpha),
                      MultiIndex{k.mono.idx.entries}};
        for (std::size_t j = 0; j < prod.idx.entries.size(); ++j)
          prod.idx.entries[j] += dm.idx.entries[j];
        r.add_term(prod, cw * ca * dc);
      }
    }
  }
  return r;
}

namespace {

// Accumulates sign * u_p d_p(v_q) d_q over all term pairs.
void accumulate_half_bracket(const WittElement& u, const WittElement& v, int sign,
                             WittElement& out) {
  const GroupDescriptor& g = *out.ctx();
  for (const auto& [ku, cu] : u.terms()) {
    for (const auto& [kv, cv] : v.terms()) {
      for (const auto& [dm, dc] : partial_monomial(g, ku.dir, kv.mono)) {
        Monomial prod{group_add(ku.mono.alpha, dm.alpha),
                      MultiIndex{ku.mono.idx.entries}};
        for (std::size_t j = 0; j < prod.idx.entries.size(); ++j)
          prod.idx.entries[j] += dm.idx.entries[j];
        out.add_term(prod, kv.dir, sign * cu * cv * dc);
      }
    }
  }
}

}  // namespace

WittElement bracket(const WittElement& u, const WittElement& v) {
  require_same_context(u.ctx(), v.ctx());
  WittElement r(u.ctx());
  accumulate_half_bracket(u, v, +1, r);
  accumulate_half_bracket(v, u, -1, r);
  return r;
}

AlgebraElement divergence(const WittElement& w) {
  AlgebraElement r(w.ctx());
  const GroupDescriptor& g = *w.ctx();
  for (const auto& [k, c] : w.terms())
    for (const auto& [dm, dc] : partial_monomial(g, k.dir, k.mono))
      r.add_term(dm, c * dc);
  return r;
}

WittElement d_op(int p, int q, const AlgebraElement& u, const GroupElement& rho) {
  const ContextPtr& ctx = u.ctx();
  const int l = ctx->sig().l();
  if (p < 1 || p > l || q < 1 || q > l) throw std::out_of_range("d_op index");
  WittElement r(ctx);
  if (p == q) return r;  // antisymmetric in p, q
  MultiIndex zero_idx{std::vector<int>(ctx->sig().nvars(), 0)};
  AlgebraElement x_neg_rho(ctx, Monomial{group_neg(rho), zero_idx});
  AlgebraElement x_rho(ctx, Monomial{rho, zero_idx});
  AlgebraElement shifted = x_neg_rho * u;
  AlgebraElement dp = x_rho * partial(p, shifted);
  AlgebraElement dq = x_rho * partial(q, shifted);
  for (const auto& [m, c] : dp.terms()) r.add_term(m, q, c);
  for (const auto& [m, c] : dq.terms()) r.add_term(m, p, -c);
  return r;
}

WittElement d_op_expanded(int p, int q, const Monomial& m, const ContextPtr& ctx) {
  const int l = ctx->sig().l();
  if (p < 1 || p > l || q < 1 || q > l) throw std::out_of_range("d_op index");
  WittElement r(ctx);
  if (p == q) return r;
  Rational ap = ctx->ambient_coord(m.alpha, p);
  Rational aq = ctx->ambient_coord(m.alpha, q);
  r.add_term(m, q, ap);
  r.add_term(m, p, -aq);
  if (int ip = m.idx.at(p); ip > 0)
    r.add_term(Monomial{m.alpha, m.idx.plus(p, -1)}, q, Rational(ip));
  if (int iq = m.idx.at(q); iq > 0)
    r.add_term(Monomial{m.alpha, m.idx.plus(q, -1)}, p, Rational(-iq));
  return r;
}

std::vector<GroupElement> enumerate_group_box(int m, int radius) {
  std::vector<GroupElement> out;
  GroupElement cur{std::vector<std::int64_t>(m, -radius)};
  if (m == 0) return {GroupElement{{}}};
  for (;;) {
    out.push_back(cur);
    int k = m - 1;
    while (k >= 0 && cur.coords[k] == radius) cur.coords[k--] = -radius;
    if (k < 0) break;
    ++cur.coords[k];
  }
  return out;
}

std::vector<MultiIndex> enumerate_multi_indices(int n, int maxdeg) {
  std::vector<MultiIndex> out;
  MultiIndex cur{std::vector<int>(n, 0)};
  if (n == 0) return {cur};
  for (;;) {
    out.push_back(cur);
    int k = n - 1;
    while (k >= 0) {
      ++cur.entries[k];
      if (cur.degree() <= maxdeg) break;
      cur.entries[k--] = 0;
    }
    if (k < 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Monomial> enumerate_monomials(const ContextPtr& ctx, const Window& w) {
  std::vector<Monomial> out;
  for (const auto& a : enumerate_group_box(ctx->rank(), w.gamma_radius))
    for (const auto& i : enumerate_multi_indices(ctx->sig().nvars(), w.idx_degree))
      out.push_back(Monomial{a, i});
  return out;
}

SpanningFamily spanning_family(const ContextPtr& ctx, const Window& w,
                               const GroupElement& rho) {
  if (w.gamma_radius < 0 || w.idx_degree < 0)
    throw std::invalid_argument("empty window");
  SpanningFamily fam;
  const int l = ctx->sig().l();
  for (const auto& m : enumerate_monomials(ctx, w)) {
    AlgebraElement u(ctx, m);
    for (int p = 1; p <= l; ++p) {
      for (int q = p + 1; q <= l; ++q) {
        WittElement op = d_op(p, q, u, rho);
        if (!op.is_zero()) fam.push_back(SpanningOp{p, q, m, std::move(op)});
      }
    }
  }
  return fam;
}

bool in_window(const Monomial& m, const Window& w) {
  for (auto c : m.alpha.coords)
    if (c > w.gamma_radius || c < -w.gamma_radius) return false;
  return m.idx.degree() <= w.idx_degree;
}

WittElement project_to_window(const WittElement& e, const Window& w) {
  WittElement r(e.ctx());
  for (const auto& [k, c] : e.terms())
    if (in_window(k.mono, w)) r.add_term(k.mono, k.dir, c);
  return r;
}

}  // namespace divfree

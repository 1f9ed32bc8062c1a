#include "divfree/modules.hpp"

#include <sstream>

namespace divfree {

const char* kind_name(ModuleKind k) {
  switch (k) {
    case ModuleKind::a_mu: return "a_mu";
    case ModuleKind::a_mu_quotient: return "a_mu_quotient";
    case ModuleKind::graded_m: return "graded_m";
    case ModuleKind::graded_a: return "graded_a";
    case ModuleKind::graded_b: return "graded_b";
  }
  return "?";
}

ModuleDescriptor::ModuleDescriptor(ModuleKind kind, Weight param, ContextPtr ctx)
    : kind_(kind), param_(std::move(param)), ctx_(std::move(ctx)) {
  const Signature& sig = ctx_->sig();
  if (static_cast<int>(param_.entries.size()) != sig.l())
    throw std::invalid_argument("module parameter length mismatch");
  for (int p = 0; p < sig.l1; ++p)
    if (param_.entries[p] != 0)
      throw std::invalid_argument("module parameter violates weight convention");
  if (graded() && (sig.l1 != 0 || sig.l2 != 0))
    throw std::invalid_argument("graded modules require l1 = l2 = 0");
  if ((kind_ == ModuleKind::graded_a || kind_ == ModuleKind::graded_b) &&
      param_.is_zero())
    throw std::invalid_argument("eta must be nonzero");
  if (kind_ == ModuleKind::a_mu_quotient) {
    auto coords = ctx_->membership(param_);
    if (!coords)
      throw std::invalid_argument("quotient requires mu in the group");
    zero_coset_ = group_neg(*coords);
  }
}

ModuleElement::ModuleElement(ModuleDescriptor desc, const BasisKey& k, Rational c)
    : desc_(std::move(desc)) {
  add_term(k, c);
}

void ModuleElement::add_term(const BasisKey& k, const Rational& c) {
  if (c == 0) return;
  if (static_cast<int>(k.beta.coords.size()) != desc_.ctx()->rank() ||
      static_cast<int>(k.j.entries.size()) != desc_.ctx()->sig().nvars())
    throw std::invalid_argument("basis key shape mismatch");
  // The zero coset is identically zero in the quotient.
  if (desc_.kind() == ModuleKind::a_mu_quotient && k.j.is_zero() &&
      k.beta == *desc_.zero_coset())
    return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& o) {
  if (!(desc_ == o.desc_)) throw std::invalid_argument("module descriptor mismatch");
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

ModuleElement& ModuleElement::operator-=(const ModuleElement& o) {
  if (!(desc_ == o.desc_)) throw std::invalid_argument("module descriptor mismatch");
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

ModuleElement ModuleElement::scaled(const Rational& c) const {
  ModuleElement r(desc_);
  if (c == 0) return r;
  for (const auto& [k, v] : terms_) r.terms_.emplace(k, c * v);
  return r;
}

namespace {

// (beta + mu)_p as an exact rational (zero for p <= l1 by convention).
Rational shifted_coord(const ModuleDescriptor& desc, const GroupElement& beta,
                       int p) {
  return desc.ctx()->ambient_coord(beta, p) + desc.param().entries[p - 1];
}

void require_a_kind(const ModuleDescriptor& desc) {
  if (desc.graded())
    throw std::invalid_argument("operation requires an A_mu-kind module");
}

}  // namespace

ModuleElement act_monomial_op(const ModuleDescriptor& desc,
                              const GroupElement& alpha, const MultiIndex& i,
                              int p, const GroupElement& beta,
                              const MultiIndex& j) {
  require_a_kind(desc);
  const int l = desc.ctx()->sig().l();
  if (p < 1 || p > l) throw std::out_of_range("direction index");
  ModuleElement r(desc);
  GroupElement ab = group_add(beta, alpha);
  MultiIndex ij = i;
  for (std::size_t k = 0; k < ij.entries.size(); ++k)
    ij.entries[k] += j.entries[k];
  r.add_term(BasisKey{ab, ij}, shifted_coord(desc, beta, p));
  if (int jp = j.at(p); jp > 0)
    r.add_term(BasisKey{ab, ij.plus(p, -1)}, Rational(jp));
  return r;
}

namespace {

ModuleElement act_graded(const WittElement& w, const ModuleElement& v) {
  const ModuleDescriptor& desc = v.descriptor();
  const ContextPtr& ctx = desc.ctx();
  const Signature& sig = ctx->sig();
  ModuleElement r(desc);
  // Collect the derivation part per group element alpha.
  std::map<GroupElement, Derivation> parts;
  for (const auto& [k, c] : w.terms()) {
    auto [it, inserted] = parts.try_emplace(
        k.mono.alpha, Derivation{std::vector<Rational>(sig.l(), Rational(0))});
    it->second.coeffs[k.dir - 1] += c;
  }
  for (const auto& [alpha, d] : parts) {
    Weight aw = ctx->ambient(alpha);
    if (pairing(d, aw, sig) != 0) {
      std::ostringstream os;
      os << "graded action requires the derivation part in ker(alpha); "
            "offending term at alpha = (";
      for (std::size_t k = 0; k < alpha.coords.size(); ++k)
        os << (k ? "," : "") << alpha.coords[k];
      os << ")";
      throw std::invalid_argument(os.str());
    }
    for (const auto& [key, cv] : v.terms()) {
      GroupElement target = group_add(alpha, key.beta);
      Rational coeff(0);
      switch (desc.kind()) {
        case ModuleKind::graded_m:
          coeff = pairing(d, weight_add(ctx->ambient(key.beta), desc.param()), sig);
          break;
        case ModuleKind::graded_a:
          if (key.beta.is_zero())
            coeff = pairing(d, desc.param(), sig);
          else
            coeff = pairing(d, ctx->ambient(key.beta), sig);
          break;
        case ModuleKind::graded_b:
          if (key.beta == group_neg(alpha))
            coeff = pairing(d, desc.param(), sig);
          else
            coeff = pairing(d, ctx->ambient(key.beta), sig);
          break;
        default:
          break;
      }
      r.add_term(BasisKey{target, key.j}, cv * coeff);
    }
  }
  return r;
}

}  // namespace

ModuleElement act(const WittElement& w, const ModuleElement& v) {
  require_same_context(w.ctx(), v.descriptor().ctx());
  if (v.descriptor().graded()) return act_graded(w, v);
  ModuleElement r(v.descriptor());
  for (const auto& [wk, cw] : w.terms()) {
    for (const auto& [vk, cv] : v.terms()) {
      ModuleElement part = act_monomial_op(v.descriptor(), wk.mono.alpha,
                                           wk.mono.idx, wk.dir, vk.beta, vk.j);
      for (const auto& [k, c] : part.terms()) r.add_term(k, cw * cv * c);
    }
  }
  return r;
}

ModuleElement thm_formula(const ModuleDescriptor& desc, int p, int q,
                          const GroupElement& alpha, const MultiIndex& i,
                          const GroupElement& beta, const MultiIndex& j) {
  require_a_kind(desc);
  if (p == q) throw std::invalid_argument("thm_formula requires p != q");
  const ContextPtr& ctx = desc.ctx();
  Rational ap = ctx->ambient_coord(alpha, p);
  Rational aq = ctx->ambient_coord(alpha, q);
  Rational bp = shifted_coord(desc, beta, p);
  Rational bq = shifted_coord(desc, beta, q);
  int ip = i.at(p), iq = i.at(q), jp = j.at(p), jq = j.at(q);
  GroupElement ab = group_add(beta, alpha);
  MultiIndex ij = i;
  for (std::size_t k = 0; k < ij.entries.size(); ++k)
    ij.entries[k] += j.entries[k];
  ModuleElement r(desc);
  r.add_term(BasisKey{ab, ij}, ap * bq - aq * bp);
  if (ij.at(q) > 0)
    r.add_term(BasisKey{ab, ij.plus(q, -1)}, Rational(jq) * ap - Rational(iq) * bp);
  if (ij.at(p) > 0)
    r.add_term(BasisKey{ab, ij.plus(p, -1)}, Rational(ip) * bq - Rational(jp) * aq);
  if (ij.at(p) > 0 && ij.at(q) > 0 && (p != q)) {
    MultiIndex both = ij.plus(p, -1);
    if (both.at(q) > 0)
      r.add_term(BasisKey{ab, both.plus(q, -1)},
                 Rational(ip) * Rational(jq) - Rational(iq) * Rational(jp));
  }
  return r;
}

Weight term_weight(const ModuleDescriptor& desc, const BasisKey& k) {
  const ContextPtr& ctx = desc.ctx();
  switch (desc.kind()) {
    case ModuleKind::a_mu:
    case ModuleKind::a_mu_quotient:
    case ModuleKind::graded_m:
      return weight_add(ctx->ambient(k.beta), desc.param());
    case ModuleKind::graded_a:
    case ModuleKind::graded_b:
      return k.beta.is_zero() ? desc.param() : ctx->ambient(k.beta);
  }
  throw std::logic_error("unreachable");
}

std::map<Weight, ModuleElement> weight_decompose(const ModuleElement& v) {
  std::map<Weight, ModuleElement> out;
  for (const auto& [k, c] : v.terms()) {
    Weight w = term_weight(v.descriptor(), k);
    auto [it, inserted] = out.try_emplace(w, ModuleElement(v.descriptor()));
    it->second.add_term(k, c);
  }
  return out;
}

std::optional<int> filtration_degree(const ModuleElement& v, const Weight& w) {
  if (v.is_zero()) return 0;
  const ContextPtr& ctx = v.descriptor().ctx();
  int cap = 1;
  for (const auto& [k, c] : v.terms()) cap = std::max(cap, 1 + k.j.degree());
  int n = 0;
  for (int r = 1; r <= ctx->sig().l(); ++r) {
    WittElement dr = WittElement::direction(ctx, r);
    ModuleElement cur = v;
    int steps = 0;
    while (!cur.is_zero()) {
      if (steps > cap) return std::nullopt;
      cur = act(dr, cur) - cur.scaled(w.entries[r - 1]);
      ++steps;
    }
    n = std::max(n, steps - 1);
  }
  return n;
}

std::strong_ordering order_compare(const MultiIndex& i, const MultiIndex& j) {
  if (i.entries.size() != j.entries.size())
    throw std::invalid_argument("multi-index length mismatch");
  if (auto c = i.degree() <=> j.degree(); c != 0) return c;
  for (int p = static_cast<int>(i.entries.size()) - 1; p >= 0; --p)
    if (auto c = i.entries[p] <=> j.entries[p]; c != 0) return c;
  return std::strong_ordering::equal;
}

ModuleElement shift_map(const ModuleElement& v, const GroupElement& gamma) {
  if (v.descriptor().kind() != ModuleKind::a_mu)
    throw std::invalid_argument("shift_map requires kind a_mu");
  const ContextPtr& ctx = v.descriptor().ctx();
  ModuleDescriptor target(ModuleKind::a_mu,
                          weight_add(v.descriptor().param(), ctx->ambient(gamma)),
                          ctx);
  ModuleElement r(target);
  for (const auto& [k, c] : v.terms())
    r.add_term(BasisKey{group_add(k.beta, group_neg(gamma)), k.j}, c);
  return r;
}

}  // namespace divfree

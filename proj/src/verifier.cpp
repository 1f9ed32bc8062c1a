#include "divfree/verifier.hpp"

#include <chrono>
#include <deque>
#include <sstream>

#include "divfree/io.hpp"

namespace divfree {

namespace {

class Timer {
 public:
  explicit Timer(Report& r) : r_(r), start_(std::chrono::steady_clock::now()) {}
  ~Timer() {
    r_.millis = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start_)
                    .count();
  }

 private:
  Report& r_;
  std::chrono::steady_clock::time_point start_;
};

using WittVec = std::map<WittKey, Rational>;
using ModVec = std::map<BasisKey, Rational>;

WittVec to_vec(const WittElement& e) { return {e.terms().begin(), e.terms().end()}; }
ModVec to_vec(const ModuleElement& e) { return {e.terms().begin(), e.terms().end()}; }

WittElement random_combination(const SpanningFamily& fam, SampleRng& rng,
                               const ContextPtr& ctx, int terms = 3) {
  WittElement r(ctx);
  for (int k = 0; k < terms; ++k)
    r += fam[rng.index(fam.size())].op.scaled(rng.coefficient());
  return r;
}

std::string describe_monomial(const Monomial& m, const ContextPtr& ctx) {
  return print(AlgebraElement(ctx, m));
}

std::string describe_key(const BasisKey& k, const ModuleDescriptor& desc) {
  return print(ModuleElement(desc, k));
}

std::vector<BasisKey> window_basis_keys(const ModuleDescriptor& desc,
                                        const Window& w) {
  std::vector<BasisKey> keys;
  const ContextPtr& ctx = desc.ctx();
  for (const auto& b : enumerate_group_box(ctx->rank(), w.gamma_radius)) {
    for (const auto& j :
         enumerate_multi_indices(ctx->sig().nvars(), w.idx_degree)) {
      BasisKey k{b, j};
      if (desc.kind() == ModuleKind::a_mu_quotient && j.is_zero() &&
          b == *desc.zero_coset())
        continue;
      keys.push_back(std::move(k));
    }
  }
  return keys;
}

bool in_window_key(const BasisKey& k, const Window& w) {
  for (auto c : k.beta.coords)
    if (c > w.gamma_radius || c < -w.gamma_radius) return false;
  return k.j.degree() <= w.idx_degree;
}

ModuleElement project_key_window(const ModuleElement& v, const Window& w) {
  ModuleElement r(v.descriptor());
  for (const auto& [k, c] : v.terms())
    if (in_window_key(k, w)) r.add_term(k, c);
  return r;
}

}  // namespace

Rational SampleRng::coefficient() {
  std::uniform_int_distribution<int> num(1, 6), den(1, 3);
  int n = num(eng_);
  if (n > 3) n = 3 - n;  // {-3,-2,-1,1,2,3}
  Rational r(n, den(eng_));
  r.canonicalize();
  return r;
}

std::size_t SampleRng::index(std::size_t n) {
  std::uniform_int_distribution<std::size_t> d(0, n - 1);
  return d(eng_);
}

Report check_lie_axioms(const ContextPtr& ctx, const Window& w) {
  return check_lie_axioms_with(
      ctx, w, [](const WittElement& a, const WittElement& b) { return bracket(a, b); });
}

Report check_lie_axioms_with(const ContextPtr& ctx, const Window& w,
                             const BracketFn& br) {
  Report rep{.check = "lie_axioms"};
  Timer t(rep);
  SampleRng rng(w.seed);
  SpanningFamily fam = spanning_family(ctx, w, ctx->zero());
  for (int s = 0; s < w.sample_count; ++s) {
    WittElement a = random_combination(fam, rng, ctx);
    WittElement b = random_combination(fam, rng, ctx);
    WittElement c = random_combination(fam, rng, ctx);
    ++rep.tested;
    if (!(br(a, b) + br(b, a)).is_zero()) {
      rep.pass = false;
      rep.counterexample = {"antisymmetry", "a = " + print(a), "b = " + print(b),
                            "[a,b]+[b,a] = " + print(br(a, b) + br(b, a))};
      return rep;
    }
    WittElement jac = br(br(a, b), c) + br(br(b, c), a) + br(br(c, a), b);
    if (!jac.is_zero()) {
      rep.pass = false;
      rep.counterexample = {"jacobi", "a = " + print(a), "b = " + print(b),
                            "c = " + print(c), "sum = " + print(jac)};
      return rep;
    }
  }
  return rep;
}

Report check_divergence_free(const ContextPtr& ctx, const Window& w) {
  Report rep{.check = "divergence_free"};
  Timer t(rep);
  GroupElement rho = ctx->zero();
  SpanningFamily fam = spanning_family(ctx, w, rho);
  for (const auto& s : fam) {
    ++rep.tested;
    AlgebraElement d = divergence(s.op);
    if (!d.is_zero()) {
      rep.pass = false;
      rep.counterexample = {"operator = " + print(s.op), "div = " + print(d)};
      return rep;
    }
  }
  SampleRng rng(w.seed);
  for (int s = 0; s < w.sample_count; ++s) {
    WittElement a = random_combination(fam, rng, ctx);
    ++rep.tested;
    if (!divergence(a).is_zero()) {
      rep.pass = false;
      rep.counterexample = {"combination = " + print(a),
                            "div = " + print(divergence(a))};
      return rep;
    }
  }
  // Subalgebra evidence: brackets of window operators land in the exact span
  // of the doubled-window family.
  Window dw = w.doubled();
  SpanBasis<WittKey> span;
  for (const auto& s : spanning_family(ctx, dw, rho)) span.insert(to_vec(s.op));
  rep.notes.push_back("doubled-window span dimension " +
                      std::to_string(span.dimension()));
  for (int s = 0; s < w.sample_count; ++s) {
    const SpanningOp& a = fam[rng.index(fam.size())];
    const SpanningOp& b = fam[rng.index(fam.size())];
    ++rep.tested;
    if (!span.contains(to_vec(bracket(a.op, b.op)))) {
      rep.pass = false;
      rep.counterexample = {"a = " + print(a.op), "b = " + print(b.op),
                            "[a,b] = " + print(bracket(a.op, b.op)),
                            "not in doubled-window span"};
      return rep;
    }
  }
  return rep;
}

Report check_operator_expansion(const ContextPtr& ctx, const Window& w) {
  Report rep{.check = "operator_expansion"};
  Timer t(rep);
  GroupElement rho = ctx->zero();
  const int l = ctx->sig().l();
  for (const auto& m : enumerate_monomials(ctx, w)) {
    AlgebraElement u(ctx, m);
    for (int p = 1; p <= l; ++p) {
      for (int q = p + 1; q <= l; ++q) {
        ++rep.tested;
        WittElement lhs = d_op(p, q, u, rho);
        WittElement rhs = d_op_expanded(p, q, m, ctx);
        if (!(lhs == rhs)) {
          rep.pass = false;
          rep.counterexample = {"u = " + describe_monomial(m, ctx),
                                "p = " + std::to_string(p),
                                "q = " + std::to_string(q),
                                "definition = " + print(lhs),
                                "expansion = " + print(rhs)};
          return rep;
        }
      }
    }
  }
  return rep;
}

Report check_recurrence(const ContextPtr& ctx, const Window& w) {
  Report rep{.check = "bracket_recurrence"};
  Timer t(rep);
  const Signature& sig = ctx->sig();
  const int l = sig.l();
  const int nv = sig.nvars();
  if (nv == 0 || l < 2) {
    rep.notes.push_back("vacuous: no t variables");
    return rep;
  }
  SampleRng rng(w.seed);
  auto alphas = enumerate_group_box(ctx->rank(), w.gamma_radius);
  auto idxs = enumerate_multi_indices(nv, w.idx_degree);
  MultiIndex zero_idx{std::vector<int>(nv, 0)};
  for (int s = 0; s < w.sample_count; ++s) {
    int p = 1 + static_cast<int>(rng.index(l));
    int q = 1 + static_cast<int>(rng.index(l));
    if (p == q) continue;
    int r = 1 + static_cast<int>(rng.index(nv));
    int sidx = 1 + static_cast<int>(rng.index(l));
    if (sidx == r) continue;
    const GroupElement& alpha = alphas[rng.index(alphas.size())];
    const MultiIndex& i = idxs[rng.index(idxs.size())];
    ++rep.tested;

    Monomial m{alpha, i};
    AlgebraElement u(ctx, m);
    AlgebraElement t2r(ctx, Monomial{ctx->zero(), zero_idx.plus(r, 2)});
    WittElement lhs =
        bracket(d_op(p, q, u, ctx->zero()), d_op(r, sidx, t2r, ctx->zero()));

    WittElement rhs(ctx);
    if (p == r)
      rhs += d_op(sidx, q, u, ctx->zero());
    if (q == r)
      rhs -= d_op(sidx, p, u, ctx->zero());
    if (int is = i.at(sidx); is > 0) {
      MultiIndex shifted = i.plus(r, 1).plus(sidx, -1);
      rhs -= d_op(p, q, AlgebraElement(ctx, Monomial{alpha, shifted}), ctx->zero())
                 .scaled(Rational(is));
    }
    Rational as = ctx->ambient_coord(alpha, sidx);
    if (as != 0)
      rhs -= d_op(p, q, AlgebraElement(ctx, Monomial{alpha, i.plus(r, 1)}),
                  ctx->zero())
                 .scaled(as);
    rhs = rhs.scaled(Rational(2));
    if (!(lhs == rhs)) {
      rep.pass = false;
      rep.counterexample = {
          "u = " + describe_monomial(m, ctx),
          "p,q,r,s = " + std::to_string(p) + "," + std::to_string(q) + "," +
              std::to_string(r) + "," + std::to_string(sidx),
          "bracket = " + print(lhs), "recurrence = " + print(rhs)};
      return rep;
    }
  }
  return rep;
}

Report generator_closure(const ContextPtr& ctx, const Window& w,
                         const std::vector<WittElement>& generators,
                         const std::vector<WittElement>& targets,
                         const std::string& name) {
  Report rep{.check = name};
  Timer t(rep);
  rep.notes.push_back("brackets are projected to the window before spanning; "
                      "pass is window-scale evidence");
  SpanBasis<WittKey> span;
  std::deque<WittElement> queue;
  for (const auto& g : generators) {
    WittElement pg = project_to_window(g, w);
    if (!pg.is_zero() && span.insert(to_vec(pg))) queue.push_back(std::move(pg));
  }
  std::vector<WittVec> remaining;
  for (const auto& tgt : targets) remaining.push_back(to_vec(tgt));
  auto filter_remaining = [&] {
    std::erase_if(remaining, [&](const WittVec& v) { return span.contains(v); });
  };
  filter_remaining();
  long brackets_done = 0;
  while (!queue.empty() && !remaining.empty()) {
    WittElement b = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators) {
      WittElement c = project_to_window(bracket(g, b), w);
      ++brackets_done;
      if (!c.is_zero() && span.insert(to_vec(c))) {
        queue.push_back(std::move(c));
        if (span.dimension() % 16 == 0) filter_remaining();
      }
      if (remaining.empty()) break;
    }
    filter_remaining();
  }
  rep.tested = brackets_done + static_cast<long>(targets.size());
  rep.notes.push_back("span dimension " + std::to_string(span.dimension()) +
                      ", generators " + std::to_string(generators.size()) +
                      ", targets " + std::to_string(targets.size()));
  if (!remaining.empty()) {
    rep.pass = false;
    rep.counterexample = {"window too small to close",
                          std::to_string(remaining.size()) +
                              " target operators not reached"};
    // Replayable witness: the first unreached target.
    WittElement miss(ctx);
    for (const auto& [k, c] : remaining.front()) miss.add_term(k.mono, k.dir, c);
    rep.counterexample.push_back("first missing target = " + print(miss));
  }
  return rep;
}

std::vector<WittElement> generator_set(const ContextPtr& ctx, const Window& w,
                                       GeneratorVariant variant) {
  const Signature& sig = ctx->sig();
  const int l = sig.l();
  GroupElement rho = ctx->zero();
  MultiIndex zero_idx{std::vector<int>(sig.nvars(), 0)};

  std::vector<WittElement> gens;
  for (const auto& a : enumerate_group_box(ctx->rank(), w.gamma_radius)) {
    if (a.is_zero()) continue;
    if (variant == GeneratorVariant::prop21) {
      AlgebraElement u(ctx, Monomial{a, zero_idx});
      for (int p = 1; p <= l; ++p)
        for (int q = p + 1; q <= l; ++q)
          if (WittElement op = d_op(p, q, u, rho); !op.is_zero())
            gens.push_back(std::move(op));
    } else {
      for (const auto& i : enumerate_multi_indices(sig.nvars(), w.idx_degree)) {
        AlgebraElement u(ctx, Monomial{a, i});
        for (int p = 1; p <= l; ++p)
          for (int q = p + 1; q <= l; ++q)
            if (WittElement op = d_op(p, q, u, rho); !op.is_zero())
              gens.push_back(std::move(op));
      }
    }
  }
  if (variant == GeneratorVariant::prop21) {
    for (const auto& j : enumerate_multi_indices(sig.nvars(), 2)) {
      AlgebraElement u(ctx, Monomial{ctx->zero(), j});
      for (int p = 1; p <= l; ++p)
        for (int q = p + 1; q <= l; ++q)
          if (WittElement op = d_op(p, q, u, rho); !op.is_zero())
            gens.push_back(std::move(op));
    }
  }
  return gens;
}

Report check_generators(const ContextPtr& ctx, const Window& w,
                        GeneratorVariant variant) {
  GroupElement rho = ctx->zero();
  std::vector<WittElement> gens = generator_set(ctx, w, variant);
  std::vector<WittElement> targets;
  for (const auto& s : spanning_family(ctx, w, rho)) {
    if (s.source.alpha.is_zero() && variant == GeneratorVariant::cor22) continue;
    targets.push_back(s.op);
  }
  return generator_closure(ctx, w, gens, targets,
                           variant == GeneratorVariant::prop21
                               ? "generators_prop21"
                               : "generators_cor22");
}

namespace {

// One exact identity check over every (operator, basis key) window tuple.
struct IdentityCheck {
  std::string name;
  WittElement op;
  std::function<ModuleElement(const BasisKey&)> expected;
};

bool run_identities(const ModuleDescriptor& desc,
                    const std::vector<BasisKey>& keys,
                    const std::vector<IdentityCheck>& checks, Report& rep) {
  for (const auto& chk : checks) {
    for (const auto& key : keys) {
      ++rep.tested;
      ModuleElement v(desc, key);
      ModuleElement lhs = act(chk.op, v);
      ModuleElement rhs = chk.expected(key);
      if (!(lhs == rhs)) {
        rep.pass = false;
        rep.counterexample = {chk.name, "operator = " + print(chk.op),
                              "vector = " + describe_key(key, desc),
                              "act = " + print(lhs), "formula = " + print(rhs)};
        return false;
      }
    }
  }
  return true;
}

Rational shifted(const ModuleDescriptor& desc, const GroupElement& beta, int p) {
  return desc.ctx()->ambient_coord(beta, p) + desc.param().entries[p - 1];
}

}  // namespace

Report check_module(const ModuleDescriptor& desc, const Window& w) {
  Report rep{.check = std::string("module_") + kind_name(desc.kind())};
  Timer t(rep);
  const ContextPtr& ctx = desc.ctx();
  const Signature& sig = ctx->sig();
  const int l = sig.l();
  const int nv = sig.nvars();
  SpanningFamily fam = spanning_family(ctx, w, ctx->zero());
  std::vector<BasisKey> keys = window_basis_keys(desc, w);

  // Module axiom: [a,b].v = a.(b.v) - b.(a.v) on sampled window tuples.
  SampleRng rng(w.seed);
  for (int s = 0; s < w.sample_count; ++s) {
    const WittElement& a = fam[rng.index(fam.size())].op;
    const WittElement& b = fam[rng.index(fam.size())].op;
    const BasisKey& key = keys[rng.index(keys.size())];
    ModuleElement v(desc, key);
    ++rep.tested;
    ModuleElement lhs = act(bracket(a, b), v);
    ModuleElement rhs = act(a, act(b, v)) - act(b, act(a, v));
    if (!(lhs == rhs)) {
      rep.pass = false;
      rep.counterexample = {"module axiom", "a = " + print(a), "b = " + print(b),
                            "v = " + describe_key(key, desc),
                            "[a,b].v = " + print(lhs),
                            "a.(b.v) - b.(a.v) = " + print(rhs)};
      return rep;
    }
  }
  if (desc.graded()) return rep;

  // Closed-formula consistency on every window tuple.
  for (const auto& s : fam) {
    for (const auto& key : keys) {
      ++rep.tested;
      ModuleElement lhs = act(s.op, ModuleElement(desc, key));
      ModuleElement rhs = thm_formula(desc, s.p, s.q, s.source.alpha,
                                      s.source.idx, key.beta, key.j);
      if (!(lhs == rhs)) {
        rep.pass = false;
        rep.counterexample = {"closed action formula",
                              "operator = " + print(s.op),
                              "vector = " + describe_key(key, desc),
                              "act = " + print(lhs), "formula = " + print(rhs)};
        return rep;
      }
    }
  }

  MultiIndex zero_idx{std::vector<int>(nv, 0)};
  std::vector<IdentityCheck> checks;
  // Step operators t^{1_[p]} d_q.
  for (int p = 1; p <= nv; ++p) {
    for (int q = 1; q <= l; ++q) {
      if (q == p) continue;
      WittElement op(ctx);
      op.add_term(Monomial{ctx->zero(), zero_idx.plus(p, 1)}, q, Rational(1));
      checks.push_back(IdentityCheck{
          "step operator", op, [&desc, p, q](const BasisKey& k) {
            ModuleElement e(desc);
            e.add_term(BasisKey{k.beta, k.j.plus(p, 1)}, shifted(desc, k.beta, q));
            if (int iq = k.j.at(q); iq > 0)
              e.add_term(BasisKey{k.beta, k.j.plus(p, 1).plus(q, -1)},
                         Rational(iq));
            return e;
          }});
    }
  }
  // Grading operators t^{1_[p]} d_p - t^{1_[q]} d_q.
  for (int p = 1; p <= nv; ++p) {
    for (int q = 1; q <= nv; ++q) {
      if (q == p) continue;
      WittElement op(ctx);
      op.add_term(Monomial{ctx->zero(), zero_idx.plus(p, 1)}, p, Rational(1));
      op.add_term(Monomial{ctx->zero(), zero_idx.plus(q, 1)}, q, Rational(-1));
      checks.push_back(IdentityCheck{
          "grading operator", op, [&desc, p, q](const BasisKey& k) {
            ModuleElement e(desc);
            e.add_term(BasisKey{k.beta, k.j.plus(p, 1)}, shifted(desc, k.beta, p));
            e.add_term(BasisKey{k.beta, k.j.plus(q, 1)},
                       -shifted(desc, k.beta, q));
            e.add_term(k, Rational(k.j.at(p) - k.j.at(q)));
            return e;
          }});
    }
  }
  // Constant derivations d_r.
  for (int r = 1; r <= l; ++r) {
    checks.push_back(IdentityCheck{
        "constant derivation", WittElement::direction(ctx, r),
        [&desc, r](const BasisKey& k) {
          ModuleElement e(desc);
          e.add_term(k, shifted(desc, k.beta, r));
          if (int ir = k.j.at(r); ir > 0)
            e.add_term(BasisKey{k.beta, k.j.plus(r, -1)}, Rational(ir));
          return e;
        }});
  }
  // Group-translation operators D_{p,q}(x^a), a != 0.
  for (const auto& a : enumerate_group_box(ctx->rank(), w.gamma_radius)) {
    if (a.is_zero()) continue;
    AlgebraElement u(ctx, Monomial{a, zero_idx});
    for (int p = 1; p <= l; ++p) {
      for (int q = p + 1; q <= l; ++q) {
        WittElement op = d_op(p, q, u, ctx->zero());
        if (op.is_zero()) continue;
        checks.push_back(IdentityCheck{
            "translation operator", op, [&desc, a, p, q](const BasisKey& k) {
              const ContextPtr& c = desc.ctx();
              Rational ap = c->ambient_coord(a, p), aq = c->ambient_coord(a, q);
              GroupElement ba = group_add(k.beta, a);
              ModuleElement e(desc);
              e.add_term(BasisKey{ba, k.j},
                         ap * shifted(desc, k.beta, q) -
                             aq * shifted(desc, k.beta, p));
              if (int iq = k.j.at(q); iq > 0)
                e.add_term(BasisKey{ba, k.j.plus(q, -1)}, ap * Rational(iq));
              if (int ip = k.j.at(p); ip > 0)
                e.add_term(BasisKey{ba, k.j.plus(p, -1)}, -aq * Rational(ip));
              return e;
            }});
      }
    }
  }
  if (!run_identities(desc, keys, checks, rep)) return rep;

  // The zero-coset vector is annihilated by every spanning operator.
  if (desc.kind() == ModuleKind::a_mu) {
    if (auto mu_coords = ctx->membership(desc.param())) {
      BasisKey coset{group_neg(*mu_coords), zero_idx};
      for (const auto& s : fam) {
        ++rep.tested;
        ModuleElement image = act(s.op, ModuleElement(desc, coset));
        if (!image.is_zero()) {
          rep.pass = false;
          rep.counterexample = {"trivial submodule",
                                "operator = " + print(s.op),
                                "vector = " + describe_key(coset, desc),
                                "image = " + print(image)};
          return rep;
        }
      }
      rep.notes.push_back("mu lies in the group; trivial submodule verified");
    }
  }

  // Quotient action equals the A_mu action followed by projection.
  if (desc.kind() == ModuleKind::a_mu_quotient) {
    ModuleDescriptor full(ModuleKind::a_mu, desc.param(), ctx);
    for (int s = 0; s < w.sample_count; ++s) {
      const WittElement& a = fam[rng.index(fam.size())].op;
      const BasisKey& key = keys[rng.index(keys.size())];
      ++rep.tested;
      ModuleElement quot = act(a, ModuleElement(desc, key));
      ModuleElement projected(desc);
      ModuleElement full_image = act(a, ModuleElement(full, key));
      for (const auto& [k, c] : full_image.terms())
        projected.add_term(k, c);  // add_term drops the zero coset
      if (!(quot == projected)) {
        rep.pass = false;
        rep.counterexample = {"quotient consistency", "a = " + print(a),
                              "v = " + describe_key(key, desc),
                              "quotient act = " + print(quot),
                              "projected act = " + print(projected)};
        return rep;
      }
    }
  }
  return rep;
}

Report check_irreducibility_evidence(const ModuleDescriptor& desc,
                                     const Window& w) {
  Report rep{.check = std::string("irreducibility_") + kind_name(desc.kind())};
  Timer t(rep);
  rep.notes.push_back(
      "orbits are projected onto the doubled window before spanning; "
      "cyclicity is window-scale evidence, not a proof");
  if (desc.kind() != ModuleKind::a_mu && desc.kind() != ModuleKind::a_mu_quotient)
    throw std::invalid_argument("irreducibility evidence requires an A_mu kind");
  const ContextPtr& ctx = desc.ctx();
  SpanningFamily fam = spanning_family(ctx, w, ctx->zero());
  std::vector<BasisKey> keys = window_basis_keys(desc, w);
  Window dw = w.doubled();

  std::optional<BasisKey> coset;
  if (desc.kind() == ModuleKind::a_mu) {
    if (auto mu_coords = ctx->membership(desc.param()))
      coset = BasisKey{group_neg(*mu_coords),
                       MultiIndex{std::vector<int>(ctx->sig().nvars(), 0)}};
  }

  for (const auto& start : keys) {
    bool expect_fixed = coset && start == *coset;
    SpanBasis<BasisKey> span;
    std::deque<ModVec> queue;
    span.insert(ModVec{{start, Rational(1)}});
    queue.push_back(ModVec{{start, Rational(1)}});
    std::vector<BasisKey> remaining = keys;
    auto filter = [&] {
      std::erase_if(remaining, [&](const BasisKey& k) {
        return span.contains(ModVec{{k, Rational(1)}});
      });
    };
    filter();
    while (!queue.empty() && !(remaining.empty() && !expect_fixed)) {
      ModVec u = std::move(queue.front());
      queue.pop_front();
      ModuleElement uv(desc);
      for (const auto& [k, c] : u) uv.add_term(k, c);
      for (const auto& s : fam) {
        ModuleElement img = project_key_window(act(s.op, uv), dw);
        ++rep.tested;
        if (img.is_zero()) continue;
        ModVec vec = to_vec(img);
        if (span.insert(vec)) queue.push_back(std::move(vec));
        if (remaining.empty() && !expect_fixed) break;
      }
      filter();
    }
    if (expect_fixed) {
      if (span.dimension() != 1) {
        rep.pass = false;
        rep.counterexample = {
            "zero-coset vector generated more than itself",
            "start = " + describe_key(start, desc),
            "orbit dimension = " + std::to_string(span.dimension())};
        return rep;
      }
    } else if (!remaining.empty()) {
      rep.pass = false;
      rep.counterexample = {
          "orbit closure misses window vectors",
          "start = " + describe_key(start, desc),
          "first unreached = " + describe_key(remaining.front(), desc),
          "orbit dimension = " + std::to_string(span.dimension())};
      return rep;
    }
  }
  return rep;
}

Report check_weight_multiplicities(const ModuleDescriptor& desc, const Window& w) {
  Report rep{.check = std::string("weight_multiplicities_") +
                      kind_name(desc.kind())};
  Timer t(rep);
  if (desc.kind() != ModuleKind::a_mu && desc.kind() != ModuleKind::a_mu_quotient)
    throw std::invalid_argument("multiplicity check requires an A_mu kind");
  const ContextPtr& ctx = desc.ctx();
  const Signature& sig = ctx->sig();
  const int l = sig.l();

  for (const auto& beta : enumerate_group_box(ctx->rank(), w.gamma_radius)) {
    // Block of basis vectors with group part beta; the coordinate
    // derivations preserve it.
    std::vector<BasisKey> block;
    for (const auto& j : enumerate_multi_indices(sig.nvars(), w.idx_degree)) {
      BasisKey k{beta, j};
      if (desc.kind() == ModuleKind::a_mu_quotient && j.is_zero() &&
          beta == *desc.zero_coset())
        continue;
      block.push_back(std::move(k));
    }
    if (block.empty()) continue;
    Weight wt = weight_add(ctx->ambient(beta), desc.param());
    std::map<BasisKey, int> index;
    for (std::size_t k = 0; k < block.size(); ++k)
      index.emplace(block[k], static_cast<int>(k));
    const int n = static_cast<int>(block.size());
    Matrix m(static_cast<std::size_t>(l) * n, std::vector<Rational>(n, Rational(0)));
    for (int r = 1; r <= l; ++r) {
      WittElement dr = WittElement::direction(ctx, r);
      for (int k = 0; k < n; ++k) {
        ModuleElement img = act(dr, ModuleElement(desc, block[k])) -
                            ModuleElement(desc, block[k]).scaled(wt.entries[r - 1]);
        for (const auto& [key, c] : img.terms()) {
          auto it = index.find(key);
          if (it == index.end())
            throw std::logic_error("derivation left the weight block");
          m[(r - 1) * n + it->second][k] = c;
        }
      }
    }
    ++rep.tested;
    int dim = static_cast<int>(nullspace(m).size());
    int expected = 1;
    if (desc.kind() == ModuleKind::a_mu_quotient &&
        beta == *desc.zero_coset())
      expected = sig.l1 + sig.l2;
    if (dim != expected) {
      rep.pass = false;
      rep.counterexample = {"weight = " + print(wt),
                            "multiplicity = " + std::to_string(dim),
                            "expected = " + std::to_string(expected)};
      return rep;
    }
  }
  return rep;
}

Report check_shift_iso(const ContextPtr& ctx, const Weight& mu,
                       const GroupElement& gamma, const Window& w) {
  Report rep{.check = "shift_intertwiner"};
  Timer t(rep);
  ModuleDescriptor source(ModuleKind::a_mu, mu, ctx);
  SpanningFamily fam = spanning_family(ctx, w, ctx->zero());
  std::vector<BasisKey> keys = window_basis_keys(source, w);
  for (const auto& s : fam) {
    for (const auto& key : keys) {
      ++rep.tested;
      ModuleElement v(source, key);
      ModuleElement lhs = shift_map(act(s.op, v), gamma);
      ModuleElement rhs = act(s.op, shift_map(v, gamma));
      if (!(lhs == rhs)) {
        rep.pass = false;
        rep.counterexample = {"operator = " + print(s.op),
                              "v = " + describe_key(key, source),
                              "shift(op.v) = " + print(lhs),
                              "op.shift(v) = " + print(rhs)};
        return rep;
      }
    }
  }
  return rep;
}

namespace {

std::vector<Rational> mat_vec(const Matrix& m, const std::vector<Rational>& v) {
  std::vector<Rational> out(m.size(), Rational(0));
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < v.size(); ++c)
      if (m[r][c] != 0 && v[c] != 0) out[r] += m[r][c] * v[c];
  return out;
}

bool is_zero_vec(const std::vector<Rational>& v) {
  for (const auto& e : v)
    if (e != 0) return false;
  return true;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n < 0) n = -n;
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    if (d != n / d) out.push_back(n / d);
  }
  return out;
}

// Distinct rational roots of a rational-coefficient polynomial (low to high
// degree); absent when the polynomial does not split over the rationals with
// simple roots.
std::optional<std::vector<Rational>> rational_roots(std::vector<Rational> poly) {
  std::vector<Rational> roots;
  while (poly.size() > 1) {
    // Strip a zero root.
    if (poly.front() == 0) {
      roots.emplace_back(0);
      poly.erase(poly.begin());
      continue;
    }
    Integer denlcm(1);
    for (const auto& c : poly)
      mpz_lcm(denlcm.get_mpz_t(), denlcm.get_mpz_t(), c.get_den().get_mpz_t());
    Integer a0 = Integer(poly.front().get_num() * denlcm / poly.front().get_den());
    Integer an = Integer(poly.back().get_num() * denlcm / poly.back().get_den());
    if (!a0.fits_slong_p() || !an.fits_slong_p()) return std::nullopt;
    bool found = false;
    for (auto p : divisors(a0.get_si())) {
      for (auto q : divisors(an.get_si())) {
        for (int sign : {1, -1}) {
          Rational cand(sign * p, q);
          cand.canonicalize();
          Rational val(0);
          for (auto it = poly.rbegin(); it != poly.rend(); ++it)
            val = val * cand + *it;
          if (val != 0) continue;
          roots.push_back(cand);
          // Synthetic division by (x - cand).
          std::vector<Rational> quot(poly.size() - 1, Rational(0));
          Rational carry(0);
          for (std::size_t k = poly.size(); k-- > 1;) {
            carry = poly[k] + carry * cand;
            quot[k - 1] = carry;
          }
          poly = std::move(quot);
          found = true;
          break;
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) return std::nullopt;  // no rational root left
  }
  // The minimal polynomial of a vector must have simple roots for the
  // eigenvector splitting to apply.
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (roots[i] == roots[j]) return std::nullopt;
  return roots;
}

}  // namespace

Report eigen_split(const Matrix& T, const Matrix& subspace,
                   const std::vector<Rational>& w) {
  Report rep{.check = "eigen_split"};
  Timer t(rep);
  const std::size_t n = w.size();
  // Preconditions: the subspace is T-stable and contains w.
  for (const auto& row : subspace) {
    ++rep.tested;
    if (!solve_row(subspace, mat_vec(T, row))) {
      rep.pass = false;
      rep.counterexample = {"subspace is not stable under the operator"};
      return rep;
    }
  }
  if (!solve_row(subspace, w)) {
    rep.pass = false;
    rep.counterexample = {"input vector does not lie in the subspace"};
    return rep;
  }
  if (is_zero_vec(w)) return rep;

  // Minimal polynomial of T on w via the Krylov sequence.
  Matrix krylov{w};
  std::vector<Rational> cur = w;
  std::vector<Rational> minpoly;
  for (std::size_t step = 0; step <= n; ++step) {
    cur = mat_vec(T, cur);
    if (auto combo = solve_row(krylov, cur)) {
      // cur = sum combo_j krylov_j, so p(x) = x^m - sum combo_j x^j.
      minpoly = std::move(*combo);
      for (auto& c : minpoly) c = -c;
      minpoly.push_back(Rational(1));
      break;
    }
    krylov.push_back(cur);
  }
  if (minpoly.empty()) {
    rep.pass = false;
    rep.counterexample = {"no minimal polynomial found (internal)"};
    return rep;
  }
  auto roots = rational_roots(minpoly);
  if (!roots) {
    rep.pass = false;
    rep.counterexample = {
        "non-rational or repeated spectrum on the cyclic subspace"};
    return rep;
  }
  // Split w into eigencomponents and confirm each lies in the subspace.
  std::vector<Rational> total(n, Rational(0));
  for (std::size_t j = 0; j < roots->size(); ++j) {
    std::vector<Rational> u = w;
    for (std::size_t k = 0; k < roots->size(); ++k) {
      if (k == j) continue;
      std::vector<Rational> tu = mat_vec(T, u);
      Rational scale = (*roots)[j] - (*roots)[k];
      for (std::size_t c = 0; c < n; ++c) u[c] = (tu[c] - (*roots)[k] * u[c]) / scale;
    }
    ++rep.tested;
    // Eigenvector property, exact.
    std::vector<Rational> tu = mat_vec(T, u);
    for (std::size_t c = 0; c < n; ++c)
      if (tu[c] != (*roots)[j] * u[c]) {
        rep.pass = false;
        rep.counterexample = {"component is not an eigenvector (internal)"};
        return rep;
      }
    if (!solve_row(subspace, u)) {
      rep.pass = false;
      rep.counterexample = {"eigencomponent for eigenvalue " +
                            rational_to_string((*roots)[j]) +
                            " lies outside the subspace"};
      return rep;
    }
    for (std::size_t c = 0; c < n; ++c) total[c] += u[c];
  }
  for (std::size_t c = 0; c < n; ++c)
    if (total[c] != w[c]) {
      rep.pass = false;
      rep.counterexample = {"components do not sum back to the input (internal)"};
      return rep;
    }
  return rep;
}

}  // namespace divfree

#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "divfree/linalg.hpp"
#include "divfree/modules.hpp"

namespace divfree {

/// Result of one structural check.  A failing report carries a replayable
/// counterexample (printable expressions for the inputs and both sides).
struct Report {
  std::string check;
  bool pass = true;
  long tested = 0;
  std::vector<std::string> counterexample;
  std::vector<std::string> notes;  // dimensions, projection statements
  double millis = 0.0;
};

/// Seeded sampler for small exact rationals: numerators in {-3..3}\{0},
/// denominators in {1,2,3}.  Keeps bit growth bounded while exercising
/// cancellation.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : eng_(seed) {}

  Rational coefficient();
  std::size_t index(std::size_t n);  // uniform in [0, n)

 private:
  std::mt19937_64 eng_;
};

using BracketFn = std::function<WittElement(const WittElement&, const WittElement&)>;

/// Antisymmetry and the Jacobi identity on seeded random combinations of
/// window spanning operators, exact.  The bracket is injectable so mutation
/// tests can confirm failures are caught and reported.
Report check_lie_axioms(const ContextPtr& ctx, const Window& w);
Report check_lie_axioms_with(const ContextPtr& ctx, const Window& w,
                             const BracketFn& br);

/// div D_{p,q}(x^a t^i) = 0 on the whole window (rho = 0), on random
/// combinations, and bracket closure into the doubled-window span.
Report check_divergence_free(const ContextPtr& ctx, const Window& w);

/// The defining form of D_{p,q} agrees with its closed-form expansion on
/// every window monomial.
Report check_operator_expansion(const ContextPtr& ctx, const Window& w);

/// The bracket recurrence
/// [D_{p,q}(x^a t^i), D_{r,s}(t^{2_[r]})] = 2(d_{p,r} D_{s,q}(x^a t^i)
///   - d_{q,r} D_{s,p}(x^a t^i) - i_s D_{p,q}(x^a t^{i+1_[r]-1_[s]})
///   - a_s D_{p,q}(x^a t^{i+1_[r]})) on sampled tuples.
Report check_recurrence(const ContextPtr& ctx, const Window& w);

enum class GeneratorVariant { prop21, cor22 };

/// The variant's generator set over the window (rho = 0): every
/// D_{p,q}(x^a t^i) with a != 0 for cor22; prop21 restricts to i = 0 but
/// adds the t-only operators D_{p,q}(t^j), |j| <= 2.
std::vector<WittElement> generator_set(const ContextPtr& ctx, const Window& w,
                                       GeneratorVariant variant);

/// Bracket-closure span of the variant's generator set, projected to the
/// window, must contain every window D_{p,q}(x^a t^i) with a != 0 (and every
/// t-only operator for prop21).
Report check_generators(const ContextPtr& ctx, const Window& w,
                        GeneratorVariant variant);

/// Same computation over explicit generator and target lists; lets tests
/// remove a generator and watch the closure fail.
Report generator_closure(const ContextPtr& ctx, const Window& w,
                         const std::vector<WittElement>& generators,
                         const std::vector<WittElement>& targets,
                         const std::string& name);

/// Module axiom on sampled window tuples plus, for the A_mu kinds, the exact
/// per-tuple identity checks (closed action formula, step operators,
/// grading operator, constant derivations, group-translation operators).
Report check_module(const ModuleDescriptor& desc, const Window& w);

/// Orbit-closure cyclicity evidence.  Orbits are projected onto the doubled
/// window before spanning, so a pass is window-scale evidence, not a proof.
Report check_irreducibility_evidence(const ModuleDescriptor& desc, const Window& w);

/// dim of the weight space (joint kernel of d_r - w_r) for every weight
/// realized in the window.
Report check_weight_multiplicities(const ModuleDescriptor& desc, const Window& w);

/// shift_map intertwines the actions of A_mu and A_{mu+gamma} on all window
/// pairs.
Report check_shift_iso(const ContextPtr& ctx, const Weight& mu,
                       const GroupElement& gamma, const Window& w);

/// Eigenvector-splitting utility: w must be a sum of eigenvectors of T with
/// distinct rational eigenvalues; confirms each component lies in the
/// T-stable subspace spanned by the given rows.  Non-rational or repeated
/// spectrum on the cyclic subspace of w is reported, not resolved.
Report eigen_split(const Matrix& T, const Matrix& subspace,
                   const std::vector<Rational>& w);

}  // namespace divfree

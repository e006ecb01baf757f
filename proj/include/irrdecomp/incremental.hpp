#pragma once

// Incremental decomposition: start from the irreducible ideal of the pure
// powers and fold in one generator at a time. For a new generator alpha the
// current components split into those alpha is not strictly below (kept
// verbatim) and those it is strictly below; each of the latter, beta, spawns
// beta with coordinate u lowered to a_u exactly when d(beta, u) < a_u, where
// d(beta, u) = max over k != u of the least x_u-degree among generators that
// divide X^beta and agree with beta only in x_k.
//
// Everything internal uses the finite Artinian bounds; infinity only comes
// back in the final deartinianize step.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "irrdecomp/core.hpp"

namespace irrdecomp::incremental {

/// For each variable u, generator indices bucketed by their x_u-degree.
class DegreeIndex {
 public:
  explicit DegreeIndex(std::size_t n = 0) : buckets_(n) {}

  void add(std::size_t index, const ExpVector& m);

  /// Generators with deg_{x_u} = v; empty when none.
  const std::vector<std::size_t>& bucket(std::size_t u, Exponent v) const;

  std::size_t num_vars() const noexcept { return buckets_.size(); }
  const std::map<Exponent, std::vector<std::size_t>>& variable(std::size_t u) const {
    return buckets_.at(u);
  }

 private:
  std::vector<std::map<Exponent, std::vector<std::size_t>>> buckets_;
};

DegreeIndex build_degree_index(const GeneratorSet& g);

struct Partition {
  std::vector<ExpVector> t1;  ///< alpha not strictly below beta
  std::vector<ExpVector> t2;  ///< alpha strictly below beta
};

Partition partition_components(const std::vector<ExpVector>& components, const ExpVector& alpha,
                               OpCounter* ops = nullptr);

/// Variables u with deg_{x_u} m == b_u.
std::vector<std::size_t> match_profile(const ExpVector& m, const ExpVector& beta);

/// d(beta, u) for every u; nullopt where no k contributes (only when n == 1).
std::vector<std::optional<Exponent>> d_values(const ExpVector& beta,
                                              const std::vector<ExpVector>& m_beta,
                                              OpCounter* ops = nullptr);

/// One candidate beta^{(alpha,u)} considered during an update.
struct Candidate {
  ExpVector beta;
  std::size_t u = 0;  ///< 0-based variable
  std::optional<Exponent> d;
  ExpVector component;
  bool kept = false;
};

/// Everything one update step saw, for traces and property checks.
struct StepRecord {
  std::size_t step = 0;  ///< 1-based
  ExpVector alpha;
  std::vector<ExpVector> t1;
  std::vector<ExpVector> t2;
  std::vector<std::vector<ExpVector>> m_beta;  ///< parallel to t2
  std::vector<Candidate> candidates;
  std::vector<ExpVector> result;  ///< T after the step
};

/// Mutable state of one decomposition run. Single owner.
struct UpdateState {
  std::size_t n = 0;
  std::vector<ExpVector> components;  ///< current Irr, finite coordinates
  std::vector<ExpVector> gens;        ///< generators incorporated so far
  DegreeIndex index;
  OpCounter ops;
  std::size_t steps = 0;
};

/// State for the ideal generated by the pure powers of a: the single
/// component made of their degrees.
UpdateState initial_state(const ArtinianizedIdeal& a);

/// State for an arbitrary Artinian generator set whose current Irr is
/// already known; used to replay single updates.
UpdateState state_from(std::size_t n, std::vector<ExpVector> gens,
                       std::vector<ExpVector> components);

/// Generators dividing X^beta, found through the degree buckets b_u.
std::vector<ExpVector> find_M_beta(const ExpVector& beta, const UpdateState& state,
                                   OpCounter* ops = nullptr);

/// Folds alpha into state. alpha must be finite, of length n and not
/// divisible by an incorporated generator (UsageError otherwise). When
/// check_maxmerge is set, the full MaxMerge over every candidate is also
/// computed and compared (InternalError on disagreement).
void update_with_generator(UpdateState& state, const ExpVector& alpha,
                           StepRecord* record = nullptr, bool check_maxmerge = false);

enum class InsertionOrder {
  Lex,    ///< required for the non-decreasing |T| guarantee
  Input,  ///< order of the input file; voids that guarantee
};

struct Options {
  InsertionOrder order = InsertionOrder::Lex;
  bool check_maxmerge = false;
  std::function<void(const StepRecord&)> on_step;
};

struct Result {
  ComponentSet components;
  ArtinianizedIdeal ideal;
  std::vector<std::size_t> sizes;  ///< |T| initially and after each step
  std::uint64_t ops = 0;
  std::size_t peak = 0;
};

Result incremental_decompose(const GeneratorSet& g, const Options& options = {});

/// Just the components.
ComponentSet decompose(const GeneratorSet& g, OpCounter* ops = nullptr);

}  // namespace irrdecomp::incremental

#pragma once

// Brute-force verifier. Enumerates the staircase (exponents of monomials
// outside the ideal) inside a finite box and reads components off its
// maximal points. Independent of the trie and of both fast engines.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "irrdecomp/core.hpp"

namespace irrdecomp::oracle {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// Membership indicator over the box prod [0, bounds_i). Cells are stored
/// row-major with coordinate 0 varying fastest.
class StaircaseBox {
 public:
  /// Fills the box by a divisibility scan against gens. bounds must be
  /// finite and positive. Throws BudgetExceeded when the cell count
  /// exceeds budget.
  StaircaseBox(const std::vector<ExpVector>& gens, ExpVector bounds,
               std::uint64_t budget = kDefaultBudget);

  const ExpVector& bounds() const noexcept { return bounds_; }
  std::size_t num_vars() const noexcept { return bounds_.size(); }
  std::uint64_t cells() const noexcept { return in_ideal_.size(); }

  /// gamma in I. Points outside the box count as in the ideal, which is
  /// right whenever each x_i^{bounds_i} lies in I.
  bool in_ideal(const ExpVector& gamma) const;
  bool in_staircase(const ExpVector& gamma) const { return !in_ideal(gamma); }

  /// All staircase points, in box order.
  std::vector<ExpVector> staircase_points() const;

  /// Staircase points gamma with gamma + e_u in the ideal for every u.
  std::vector<ExpVector> maximal_points() const;

  ExpVector point(std::uint64_t cell) const;
  std::uint64_t cell(const ExpVector& gamma) const;

 private:
  ExpVector bounds_;
  std::vector<bool> in_ideal_;
};

/// Cell count of a box, saturating at UINT64_MAX.
std::uint64_t box_volume(const ExpVector& bounds);

StaircaseBox staircase(const ArtinianizedIdeal& a, std::uint64_t budget = kDefaultBudget);

/// Maximal staircase points plus one, with finite Artinian coordinates.
std::vector<ExpVector> raw_components(const StaircaseBox& box);

ComponentSet irr_oracle(const ArtinianizedIdeal& a, std::uint64_t budget = kDefaultBudget);

/// Convenience: normalize, artinianize, run the oracle. Unit ideal gives
/// the empty set.
ComponentSet decompose(const GeneratorSet& g, std::uint64_t budget = kDefaultBudget);

/// Both generator sets describe the same ideal. Compared on the box whose
/// side i is the larger of the two Artinian bounds.
bool ideals_equal_by_membership(const GeneratorSet& g1, const GeneratorSet& g2,
                                std::uint64_t budget = kDefaultBudget);

/// X^gamma in the intersection of the m^beta: gamma not strictly below any beta.
bool in_intersection(const std::vector<ExpVector>& comps, const ExpVector& gamma);

/// The intersection of the components equals the ideal of g, checked on
/// every point of a box large enough to contain the minimal generators of
/// both ideals.
bool components_generate(const ComponentSet& c, const GeneratorSet& g,
                         std::uint64_t budget = kDefaultBudget);

/// Calls fn(gamma) for every point of prod [0, bounds_i), coordinate 0
/// fastest.
template <typename Fn>
void for_each_point(const ExpVector& bounds, Fn&& fn) {
  const std::size_t n = bounds.size();
  ExpVector gamma(n, Exponent(0));
  for (auto b : bounds) {
    if (b == Exponent(0)) return;
  }
  while (true) {
    fn(static_cast<const ExpVector&>(gamma));
    std::size_t i = 0;
    while (i < n) {
      gamma[i] = Exponent(gamma[i].value() + 1);
      if (gamma[i] < bounds[i]) break;
      gamma[i] = Exponent(0);
      ++i;
    }
    if (i == n) return;
  }
}

}  // namespace irrdecomp::oracle

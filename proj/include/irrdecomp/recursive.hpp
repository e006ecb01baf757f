#pragma once

#include <vector>

#include "irrdecomp/core.hpp"
#include "irrdecomp/trie.hpp"

namespace irrdecomp::recursive {

/// The slicing of a trie on its top variable: degrees d_0 < ... < d_s and
/// the coefficient ideals Min(I_k), accumulated by MinMerge. When the
/// smallest top label is positive an empty slice at degree 0 is prepended
/// (I_0 is then the zero ideal).
struct SliceChain {
  std::vector<Exponent> degrees;
  std::vector<Trie> tries;
};

SliceChain slice_chain(const Trie& t, OpCounter* ops = nullptr);

/// Closed form for two variables: pair consecutive staircase corners.
/// Missing pure powers are taken as infinity.
ComponentSet decompose_bivariate(const GeneratorSet& g);

/// Irr(I) for the ideal whose minimal generators are the paths of t.
/// Labels may be infinite. An empty trie is the zero ideal and yields the
/// single all-infinity component; the unit ideal yields no components.
/// Throws InternalError if two slices contribute the same component.
ComponentSet irr_recursive(const Trie& t, OpCounter* ops = nullptr);

/// Entries of a not present in b, preserving the order of a.
ComponentSet set_difference_components(const ComponentSet& a, const ComponentSet& b,
                                       OpCounter* ops = nullptr);

/// U (x) d: append d as a new last coordinate. d must be at least 1.
ComponentSet adjoin_degree(const ComponentSet& v, Exponent d);

/// Full pipeline for a generator set: normalize, artinianize with finite
/// bounds, run irr_recursive, map bounds back to infinity.
ComponentSet decompose(const GeneratorSet& g, OpCounter* ops = nullptr);

}  // namespace irrdecomp::recursive

#include "irrdecomp/recursive.hpp"

#include <algorithm>
#include <array>

#include "irrdecomp/errors.hpp"

namespace irrdecomp::recursive {

namespace {

std::vector<std::pair<Exponent, Trie>> slices_from_zero(const Trie& t) {
  auto slices = t.slice_top();
  if (slices.empty() || slices.front().first != Exponent(0)) {
    slices.insert(slices.begin(), {Exponent(0), Trie(t.height() - 1)});
  }
  return slices;
}

Trie min_merge_pair(const Trie& a, const Trie& b, OpCounter* ops) {
  const std::array<Trie, 2> pair{a, b};
  return min_merge(pair, ops);
}

}  // namespace

SliceChain slice_chain(const Trie& t, OpCounter* ops) {
  SliceChain chain;
  for (auto& [d, sub] : slices_from_zero(t)) {
    chain.degrees.push_back(d);
    if (chain.tries.empty()) {
      chain.tries.push_back(std::move(sub));
    } else {
      chain.tries.push_back(min_merge_pair(chain.tries.back(), sub, ops));
    }
  }
  return chain;
}

ComponentSet set_difference_components(const ComponentSet& a, const ComponentSet& b,
                                       OpCounter* ops) {
  std::vector<ExpVector> sorted_b = b.comps;
  lex_sort(sorted_b);
  auto less = [ops](const ExpVector& x, const ExpVector& y) {
    tick(ops);
    return lex_cmp(x, y) < 0;
  };
  ComponentSet out;
  out.n = a.n;
  for (const auto& v : a.comps) {
    if (!std::binary_search(sorted_b.begin(), sorted_b.end(), v, less)) out.comps.push_back(v);
  }
  return out;
}

ComponentSet adjoin_degree(const ComponentSet& v, Exponent d) {
  if (d == Exponent(0)) throw UsageError("adjoin_degree: degree must be at least 1");
  ComponentSet out;
  out.n = v.n + 1;
  out.comps.reserve(v.comps.size());
  for (const auto& u : v.comps) {
    ExpVector w(u);
    w.push_back(d);
    out.comps.push_back(std::move(w));
  }
  return out;
}

ComponentSet irr_recursive(const Trie& t, OpCounter* ops) {
  const std::size_t h = t.height();
  if (h == 0) throw UsageError("irr_recursive: trie height must be at least 1");
  if (t.empty()) return ComponentSet(h, {ExpVector(h, kInf)});

  if (h == 1) {
    // Under the minimality precondition a height-1 trie has a single leaf.
    const Exponent d = t.root().children.back().label;
    tick(ops);
    if (d == Exponent(0)) return ComponentSet(1, {});
    return ComponentSet(1, {ExpVector{d}});
  }

  auto slices = slices_from_zero(t);
  std::vector<ExpVector> result;

  Trie prev_trie = std::move(slices.front().second);
  ComponentSet prev_irr = irr_recursive(prev_trie, ops);
  for (std::size_t k = 1; k < slices.size(); ++k) {
    const Exponent dk = slices[k].first;
    Trie cur_trie = min_merge_pair(prev_trie, slices[k].second, ops);
    prev_trie = Trie(h - 1);  // T_{k-1} is no longer needed
    ComponentSet cur_irr = irr_recursive(cur_trie, ops);
    ComponentSet fresh = adjoin_degree(set_difference_components(prev_irr, cur_irr, ops), dk);
    result.insert(result.end(), std::make_move_iterator(fresh.comps.begin()),
                  std::make_move_iterator(fresh.comps.end()));
    prev_trie = std::move(cur_trie);
    prev_irr = std::move(cur_irr);
  }

  // Each slice contributes vectors ending in its own d_k, so the union is
  // disjoint exactly when no slice repeats a vector internally.
  lex_sort(result);
  if (std::adjacent_find(result.begin(), result.end()) != result.end()) {
    throw InternalError("irr_recursive: slice contributions are not disjoint");
  }
  return ComponentSet(h, std::move(result));
}

ComponentSet decompose_bivariate(const GeneratorSet& g) {
  if (g.n != 2) throw UsageError("decompose_bivariate: expected 2 variables");
  auto corners = g.normalized().gens;
  const ExpVector one{Exponent(0), Exponent(0)};
  if (std::find(corners.begin(), corners.end(), one) != corners.end()) return ComponentSet(2, {});

  const bool has_x = std::any_of(corners.begin(), corners.end(),
                                 [](const ExpVector& v) { return v[1] == Exponent(0); });
  const bool has_y = std::any_of(corners.begin(), corners.end(),
                                 [](const ExpVector& v) { return v[0] == Exponent(0); });
  if (!has_x) corners.push_back({kInf, Exponent(0)});
  if (!has_y) corners.push_back({Exponent(0), kInf});

  // Antichain in two variables: x-degree decreasing means y-degree increasing.
  std::sort(corners.begin(), corners.end(),
            [](const ExpVector& a, const ExpVector& b) { return a[0] > b[0]; });
  ComponentSet out;
  out.n = 2;
  for (std::size_t i = 0; i + 1 < corners.size(); ++i) {
    out.comps.push_back({corners[i][0], corners[i + 1][1]});
  }
  out.sort();
  return out;
}

ComponentSet decompose(const GeneratorSet& g, OpCounter* ops) {
  const auto norm = g.normalized(ops);
  if (norm.is_unit()) return ComponentSet(g.n, {});
  const auto a = artinianize(norm);
  const auto trie = Trie::build(a.n(), a.artinian.gens);
  auto irr = irr_recursive(trie, ops);
  return deartinianize(irr, a);
}

}  // namespace irrdecomp::recursive

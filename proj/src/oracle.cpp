#include "irrdecomp/oracle.hpp"

#include <algorithm>
#include <limits>

#include "irrdecomp/errors.hpp"

namespace irrdecomp::oracle {

std::uint64_t box_volume(const ExpVector& bounds) {
  std::uint64_t v = 1;
  for (auto b : bounds) {
    if (b.is_inf()) return std::numeric_limits<std::uint64_t>::max();
    if (b.value() != 0 && v > std::numeric_limits<std::uint64_t>::max() / b.value()) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    v *= b.value();
  }
  return v;
}

StaircaseBox::StaircaseBox(const std::vector<ExpVector>& gens, ExpVector bounds,
                           std::uint64_t budget)
    : bounds_(std::move(bounds)) {
  for (auto b : bounds_) {
    if (b.is_inf() || b == Exponent(0)) throw UsageError("staircase: bounds must be finite and positive");
  }
  const std::uint64_t volume = box_volume(bounds_);
  if (volume > budget) {
    throw BudgetExceeded("staircase box of " + std::to_string(volume) + " cells exceeds budget " +
                         std::to_string(budget));
  }
  in_ideal_.assign(volume, false);
  std::uint64_t idx = 0;
  for_each_point(bounds_, [&](const ExpVector& gamma) {
    in_ideal_[idx++] = std::any_of(gens.begin(), gens.end(),
                                   [&](const ExpVector& m) { return leq(m, gamma); });
  });
}

std::uint64_t StaircaseBox::cell(const ExpVector& gamma) const {
  std::uint64_t idx = 0;
  for (std::size_t i = bounds_.size(); i-- > 0;) idx = idx * bounds_[i].value() + gamma[i].value();
  return idx;
}

ExpVector StaircaseBox::point(std::uint64_t cell) const {
  ExpVector gamma(bounds_.size());
  for (std::size_t i = 0; i < bounds_.size(); ++i) {
    gamma[i] = Exponent(cell % bounds_[i].value());
    cell /= bounds_[i].value();
  }
  return gamma;
}

bool StaircaseBox::in_ideal(const ExpVector& gamma) const {
  if (gamma.size() != bounds_.size()) throw UsageError("staircase: point has wrong length");
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    if (!(gamma[i] < bounds_[i])) return true;
  }
  return in_ideal_[cell(gamma)];
}

std::vector<ExpVector> StaircaseBox::staircase_points() const {
  std::vector<ExpVector> out;
  for (std::uint64_t c = 0; c < in_ideal_.size(); ++c) {
    if (!in_ideal_[c]) out.push_back(point(c));
  }
  return out;
}

std::vector<ExpVector> StaircaseBox::maximal_points() const {
  std::vector<ExpVector> out;
  for (std::uint64_t c = 0; c < in_ideal_.size(); ++c) {
    if (in_ideal_[c]) continue;
    ExpVector gamma = point(c);
    bool maximal = true;
    for (std::size_t u = 0; u < gamma.size() && maximal; ++u) {
      ExpVector up(gamma);
      up[u] = Exponent(up[u].value() + 1);
      maximal = in_ideal(up);
    }
    if (maximal) out.push_back(std::move(gamma));
  }
  return out;
}

StaircaseBox staircase(const ArtinianizedIdeal& a, std::uint64_t budget) {
  return StaircaseBox(a.artinian.gens, a.bounds, budget);
}

std::vector<ExpVector> raw_components(const StaircaseBox& box) {
  std::vector<ExpVector> out;
  for (auto& gamma : box.maximal_points()) out.push_back(increment(gamma));
  lex_sort(out);
  return out;
}

ComponentSet irr_oracle(const ArtinianizedIdeal& a, std::uint64_t budget) {
  const auto box = staircase(a, budget);
  return deartinianize(ComponentSet(a.n(), raw_components(box)), a);
}

ComponentSet decompose(const GeneratorSet& g, std::uint64_t budget) {
  const auto norm = g.normalized();
  if (norm.is_unit()) return ComponentSet(g.n, {});
  return irr_oracle(artinianize(norm), budget);
}

bool ideals_equal_by_membership(const GeneratorSet& g1, const GeneratorSet& g2,
                                std::uint64_t budget) {
  if (g1.n != g2.n) throw UsageError("ideals_equal_by_membership: variable counts differ");
  const auto a1 = artinianize(g1);
  const auto a2 = artinianize(g2);
  ExpVector bounds(g1.n);
  for (std::size_t i = 0; i < g1.n; ++i) bounds[i] = std::max(a1.bounds[i], a2.bounds[i]);
  if (box_volume(bounds) > budget) {
    throw BudgetExceeded("membership box exceeds budget " + std::to_string(budget));
  }
  bool equal = true;
  auto member = [](const std::vector<ExpVector>& gens, const ExpVector& gamma) {
    return std::any_of(gens.begin(), gens.end(), [&](const ExpVector& m) { return leq(m, gamma); });
  };
  for_each_point(bounds, [&](const ExpVector& gamma) {
    if (equal && member(g1.gens, gamma) != member(g2.gens, gamma)) equal = false;
  });
  return equal;
}

bool in_intersection(const std::vector<ExpVector>& comps, const ExpVector& gamma) {
  return std::none_of(comps.begin(), comps.end(),
                      [&](const ExpVector& b) { return strictly_below(gamma, b); });
}

bool components_generate(const ComponentSet& c, const GeneratorSet& g, std::uint64_t budget) {
  if (c.n != g.n) throw UsageError("components_generate: variable counts differ");
  const auto a = artinianize(g);
  ExpVector bounds = a.bounds;
  for (const auto& b : c.comps) {
    if (b.size() != g.n) throw UsageError("components_generate: component has wrong length");
    for (std::size_t i = 0; i < g.n; ++i) {
      if (b[i].is_finite()) bounds[i] = std::max(bounds[i], Exponent(b[i].value() + 1));
    }
  }
  if (box_volume(bounds) > budget) {
    throw BudgetExceeded("membership box exceeds budget " + std::to_string(budget));
  }
  bool ok = true;
  for_each_point(bounds, [&](const ExpVector& gamma) {
    if (!ok) return;
    const bool by_gens = std::any_of(g.gens.begin(), g.gens.end(),
                                     [&](const ExpVector& m) { return leq(m, gamma); });
    if (by_gens != in_intersection(c.comps, gamma)) ok = false;
  });
  return ok;
}

}  // namespace irrdecomp::oracle

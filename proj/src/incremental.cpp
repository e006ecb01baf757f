#include "irrdecomp/incremental.hpp"

#include <algorithm>
#include <set>

#include "irrdecomp/errors.hpp"

namespace irrdecomp::incremental {

namespace {

const std::vector<std::size_t> kEmptyBucket;

}  // namespace

void DegreeIndex::add(std::size_t index, const ExpVector& m) {
  if (m.size() != buckets_.size()) throw UsageError("degree index: length mismatch");
  for (std::size_t u = 0; u < m.size(); ++u) buckets_[u][m[u]].push_back(index);
}

const std::vector<std::size_t>& DegreeIndex::bucket(std::size_t u, Exponent v) const {
  const auto& var = buckets_.at(u);
  auto it = var.find(v);
  return it == var.end() ? kEmptyBucket : it->second;
}

DegreeIndex build_degree_index(const GeneratorSet& g) {
  DegreeIndex idx(g.gens.empty() ? 0 : g.n);
  for (std::size_t i = 0; i < g.gens.size(); ++i) idx.add(i, g.gens[i]);
  return idx;
}

Partition partition_components(const std::vector<ExpVector>& components, const ExpVector& alpha,
                               OpCounter* ops) {
  Partition p;
  for (const auto& beta : components) {
    tick(ops);
    (strictly_below(alpha, beta) ? p.t2 : p.t1).push_back(beta);
  }
  return p;
}

std::vector<std::size_t> match_profile(const ExpVector& m, const ExpVector& beta) {
  if (m.size() != beta.size()) throw UsageError("match_profile: length mismatch");
  std::vector<std::size_t> out;
  for (std::size_t u = 0; u < m.size(); ++u) {
    if (m[u] == beta[u]) out.push_back(u);
  }
  return out;
}

std::vector<std::optional<Exponent>> d_values(const ExpVector& beta,
                                              const std::vector<ExpVector>& m_beta,
                                              OpCounter* ops) {
  const std::size_t n = beta.size();
  // least[k][u] = d(beta, u, k)
  std::vector<std::vector<std::optional<Exponent>>> least(
      n, std::vector<std::optional<Exponent>>(n));
  bool any_only = false;
  for (const auto& m : m_beta) {
    tick(ops);
    const auto profile = match_profile(m, beta);
    if (profile.size() != 1) continue;
    any_only = true;
    const std::size_t k = profile.front();
    for (std::size_t u = 0; u < n; ++u) {
      if (u == k) continue;
      tick(ops);
      auto& slot = least[k][u];
      if (!slot || m[u] < *slot) slot = m[u];
    }
  }
  if (!any_only && !m_beta.empty()) {
    throw InternalError("d_values: no generator matches " + to_string(beta) + " in a single variable");
  }

  std::vector<std::optional<Exponent>> d(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t k = 0; k < n; ++k) {
      if (k == u || !least[k][u]) continue;
      tick(ops);
      if (!d[u] || *least[k][u] > *d[u]) d[u] = least[k][u];
    }
  }
  return d;
}

UpdateState initial_state(const ArtinianizedIdeal& a) {
  const std::size_t n = a.n();
  ExpVector top(n);
  std::vector<ExpVector> powers;
  for (const auto& m : a.artinian.gens) {
    const std::size_t i = pure_power_variable(m);
    if (i < n) {
      top[i] = m[i];
      powers.push_back(m);
    }
  }
  if (powers.size() != n) throw InternalError("initial_state: ideal is not Artinian");
  return state_from(n, std::move(powers), {std::move(top)});
}

UpdateState state_from(std::size_t n, std::vector<ExpVector> gens,
                       std::vector<ExpVector> components) {
  UpdateState s;
  s.n = n;
  s.index = DegreeIndex(n);
  for (const auto& m : gens) {
    if (m.size() != n) throw UsageError("state_from: generator length mismatch");
    s.index.add(s.gens.size(), m);
    s.gens.push_back(m);
  }
  s.components = std::move(components);
  return s;
}

std::vector<ExpVector> find_M_beta(const ExpVector& beta, const UpdateState& state,
                                   OpCounter* ops) {
  // Every generator dividing X^beta agrees with beta in some coordinate,
  // otherwise X^{beta - 1} would lie in the ideal. So the buckets at b_u
  // cover M_beta.
  std::vector<std::size_t> hits;
  for (std::size_t u = 0; u < state.n; ++u) {
    for (std::size_t i : state.index.bucket(u, beta[u])) {
      tick(ops);
      if (leq(state.gens[i], beta)) hits.push_back(i);
    }
  }
  std::sort(hits.begin(), hits.end());
  hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
  std::vector<ExpVector> out;
  out.reserve(hits.size());
  for (std::size_t i : hits) out.push_back(state.gens[i]);
  if (out.empty()) throw InternalError("find_M_beta: no generator divides " + to_string(beta));
  return out;
}

void update_with_generator(UpdateState& state, const ExpVector& alpha, StepRecord* record,
                           bool check_maxmerge) {
  if (alpha.size() != state.n) throw UsageError("update: alpha has wrong length");
  for (auto e : alpha) {
    if (e.is_inf()) throw UsageError("update: alpha must be finite");
  }
  for (const auto& m : state.gens) {
    if (leq(m, alpha)) {
      throw UsageError("update: " + to_string(alpha) + " is divisible by generator " +
                       to_string(m));
    }
  }

  OpCounter* ops = &state.ops;
  auto part = partition_components(state.components, alpha, ops);

  std::vector<ExpVector> next = part.t1;
  std::vector<ExpVector> all_candidates;
  std::vector<Candidate> candidates;
  std::vector<std::vector<ExpVector>> m_betas;
  for (const auto& beta : part.t2) {
    auto m_beta = find_M_beta(beta, state, ops);
    const auto d = d_values(beta, m_beta, ops);
    for (std::size_t u = 0; u < state.n; ++u) {
      tick(ops);
      Candidate c;
      c.beta = beta;
      c.u = u;
      c.d = d[u];
      c.component = replace_coord(beta, u, alpha[u]);
      c.kept = alpha[u] != Exponent(0) && (!d[u] || *d[u] < alpha[u]);
      if (c.kept) next.push_back(c.component);
      if (check_maxmerge && alpha[u] != Exponent(0)) all_candidates.push_back(c.component);
      if (record != nullptr) candidates.push_back(std::move(c));
    }
    if (record != nullptr) m_betas.push_back(std::move(m_beta));
  }

  if (check_maxmerge) {
    all_candidates.insert(all_candidates.end(), part.t1.begin(), part.t1.end());
    auto expected = maximalize(std::move(all_candidates));
    auto got = next;
    lex_sort(got);
    if (got != expected) {
      throw InternalError("update: d-criterion disagrees with MaxMerge at alpha " +
                          to_string(alpha));
    }
  }

  state.index.add(state.gens.size(), alpha);
  state.gens.push_back(alpha);
  state.components = std::move(next);
  ++state.steps;

  if (record != nullptr) {
    record->step = state.steps;
    record->alpha = alpha;
    record->t1 = std::move(part.t1);
    record->t2 = std::move(part.t2);
    record->m_beta = std::move(m_betas);
    record->candidates = std::move(candidates);
    record->result = state.components;
  }
}

namespace {

// Non-pure minimal generators in the requested insertion order.
std::vector<ExpVector> insertion_sequence(const GeneratorSet& input, const ArtinianizedIdeal& a,
                                          InsertionOrder order) {
  const std::size_t n = a.n();
  std::vector<ExpVector> seq;
  if (order == InsertionOrder::Lex) {
    for (const auto& m : a.artinian.gens) {
      if (pure_power_variable(m) == n) seq.push_back(m);
    }
    lex_sort(seq);
    return seq;
  }
  std::set<ExpVector, LexLess> minimal;
  for (const auto& m : a.artinian.gens) {
    if (pure_power_variable(m) == n) minimal.insert(m);
  }
  for (const auto& m : input.gens) {
    if (minimal.erase(m) != 0) seq.push_back(m);
  }
  return seq;
}

}  // namespace

Result incremental_decompose(const GeneratorSet& g, const Options& options) {
  Result r;
  r.components.n = g.n;
  const auto norm = g.normalized();
  if (norm.is_unit()) return r;

  r.ideal = artinianize(norm);
  auto state = initial_state(r.ideal);
  r.sizes.push_back(state.components.size());

  for (const auto& alpha : insertion_sequence(g, r.ideal, options.order)) {
    StepRecord rec;
    const bool want_record = static_cast<bool>(options.on_step);
    update_with_generator(state, alpha, want_record ? &rec : nullptr, options.check_maxmerge);
    r.sizes.push_back(state.components.size());
    if (want_record) options.on_step(rec);
  }

  r.ops = state.ops.ops;
  r.peak = *std::max_element(r.sizes.begin(), r.sizes.end());
  r.components = deartinianize(ComponentSet(g.n, std::move(state.components)), r.ideal);
  return r;
}

ComponentSet decompose(const GeneratorSet& g, OpCounter* ops) {
  auto r = incremental_decompose(g);
  tick(ops, r.ops);
  return std::move(r.components);
}

}  // namespace irrdecomp::incremental

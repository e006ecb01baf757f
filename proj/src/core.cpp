#include "irrdecomp/core.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "irrdecomp/errors.hpp"

namespace irrdecomp {

std::ostream& operator<<(std::ostream& os, Exponent e) {
  if (e.is_inf()) return os << "inf";
  return os << e.value();
}

std::string to_string(Exponent e) {
  return e.is_inf() ? std::string("inf") : std::to_string(e.value());
}

std::string to_string(const ExpVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != 0) s += ',';
    s += to_string(v[i]);
  }
  return s + ')';
}

namespace {

void require_same_length(const ExpVector& a, const ExpVector& b, const char* op) {
  if (a.size() != b.size()) {
    throw UsageError(std::string(op) + ": length mismatch " + to_string(a) + " vs " +
                     to_string(b));
  }
}

}  // namespace

bool leq(const ExpVector& a, const ExpVector& b) {
  require_same_length(a, b, "leq");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

bool strictly_below(const ExpVector& a, const ExpVector& b) {
  require_same_length(a, b, "strictly_below");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i] < b[i])) return false;
  }
  return true;
}

std::strong_ordering lex_cmp(const ExpVector& a, const ExpVector& b) {
  require_same_length(a, b, "lex_cmp");
  for (std::size_t i = a.size(); i-- > 0;) {
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

void lex_sort(std::vector<ExpVector>& vs) { std::sort(vs.begin(), vs.end(), LexLess{}); }

namespace {

void sort_unique(std::vector<ExpVector>& vs) {
  lex_sort(vs);
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

}  // namespace

// a <= b implies a <=_lex b, so in lex order a vector can only be dominated
// by something earlier; and anything dominating a dropped vector is itself
// dominated by a kept one. Comparing against the kept prefix is enough.
std::vector<ExpVector> minimalize(std::vector<ExpVector> vs, OpCounter* ops) {
  sort_unique(vs);
  std::vector<ExpVector> kept;
  kept.reserve(vs.size());
  for (auto& v : vs) {
    bool dominated = false;
    for (const auto& k : kept) {
      tick(ops);
      if (leq(k, v)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(std::move(v));
  }
  return kept;
}

std::vector<ExpVector> maximalize(std::vector<ExpVector> vs, OpCounter* ops) {
  sort_unique(vs);
  std::vector<ExpVector> kept;
  kept.reserve(vs.size());
  for (auto it = vs.rbegin(); it != vs.rend(); ++it) {
    bool dominated = false;
    for (const auto& k : kept) {
      tick(ops);
      if (leq(*it, k)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(std::move(*it));
  }
  std::reverse(kept.begin(), kept.end());
  return kept;
}

bool is_antichain(const std::vector<ExpVector>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = 0; j < vs.size(); ++j) {
      if (i != j && leq(vs[i], vs[j])) return false;
    }
  }
  return true;
}

ExpVector decrement(const ExpVector& b) {
  ExpVector out(b);
  for (auto& e : out) {
    if (e == Exponent(0)) throw UsageError("decrement: zero coordinate in " + to_string(b));
    if (e.is_finite()) e = Exponent(e.value() - 1);
  }
  return out;
}

ExpVector increment(const ExpVector& b) {
  ExpVector out(b);
  for (auto& e : out) {
    if (e.is_finite()) e = Exponent(e.value() + 1);
  }
  return out;
}

ExpVector replace_coord(const ExpVector& b, std::size_t j, Exponent value) {
  if (j >= b.size()) {
    throw UsageError("replace_coord: index " + std::to_string(j) + " out of range for " +
                     to_string(b));
  }
  ExpVector out(b);
  out[j] = value;
  return out;
}

ExpVector pure_power(std::size_t n, std::size_t i, Exponent d) {
  ExpVector v(n, Exponent(0));
  v.at(i) = d;
  return v;
}

std::size_t pure_power_variable(const ExpVector& v) {
  std::size_t found = v.size();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != Exponent(0)) {
      if (found != v.size()) return v.size();
      found = i;
    }
  }
  return found;
}

// --- GeneratorSet / ComponentSet -----------------------------------------

GeneratorSet::GeneratorSet(std::size_t nvars, std::vector<ExpVector> g,
                           std::vector<std::string> varnames)
    : n(nvars), gens(std::move(g)), names(std::move(varnames)) {
  validate();
}

void GeneratorSet::validate() const {
  if (!names.empty() && names.size() != n) {
    throw UsageError("generator set: expected " + std::to_string(n) + " variable names, got " +
                     std::to_string(names.size()));
  }
  for (const auto& g : gens) {
    if (g.size() != n) {
      throw UsageError("generator " + to_string(g) + " has length " + std::to_string(g.size()) +
                       ", expected " + std::to_string(n));
    }
    for (auto e : g) {
      if (e.is_inf() || e.value() > Exponent::kMaxFinite) {
        throw UsageError("generator " + to_string(g) + " has an exponent outside [0, 2^32]");
      }
    }
  }
}

GeneratorSet GeneratorSet::normalized(OpCounter* ops) const {
  GeneratorSet out;
  out.n = n;
  out.names = names;
  out.gens = minimalize(gens, ops);
  return out;
}

bool GeneratorSet::is_unit() const {
  const ExpVector one(n, Exponent(0));
  return std::any_of(gens.begin(), gens.end(), [&](const ExpVector& g) { return g == one; });
}

ComponentSet::ComponentSet(std::size_t nvars, std::vector<ExpVector> c)
    : n(nvars), comps(std::move(c)) {
  for (const auto& b : comps) {
    if (b.size() != n) throw UsageError("component " + to_string(b) + " has wrong length");
  }
}

ComponentSet& ComponentSet::sort() {
  lex_sort(comps);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const ComponentSet& c) {
  os << '{';
  for (std::size_t i = 0; i < c.comps.size(); ++i) {
    if (i != 0) os << ", ";
    os << to_string(c.comps[i]);
  }
  return os << '}';
}

// --- Artinian handling ----------------------------------------------------

ArtinianizedIdeal artinianize(const GeneratorSet& g) {
  g.validate();
  ArtinianizedIdeal a;
  a.base = g.normalized();
  const std::size_t n = g.n;
  a.bounds.assign(n, Exponent(1));
  for (const auto& m : a.base.gens) {
    for (std::size_t i = 0; i < n; ++i) {
      a.bounds[i] = std::max(a.bounds[i], Exponent(m[i].value() + 1));
    }
  }
  std::vector<ExpVector> all = a.base.gens;
  for (std::size_t i = 0; i < n; ++i) all.push_back(pure_power(n, i, a.bounds[i]));
  a.artinian.n = n;
  a.artinian.names = g.names;
  a.artinian.gens = minimalize(std::move(all));
  a.added.assign(n, false);
  for (const auto& m : a.artinian.gens) {
    const std::size_t i = pure_power_variable(m);
    if (i < n && m[i] == a.bounds[i]) a.added[i] = true;
  }
  return a;
}

ExpVector deartinianize(const ExpVector& v, const ArtinianizedIdeal& a) {
  if (v.size() != a.n()) throw UsageError("deartinianize: length mismatch");
  ExpVector out(v);
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].is_inf()) continue;
    if (out[i] > a.bounds[i]) {
      throw InternalError("deartinianize: coordinate " + to_string(out[i]) + " exceeds bound " +
                          to_string(a.bounds[i]));
    }
    if (a.added[i] && out[i] == a.bounds[i]) out[i] = kInf;
  }
  return out;
}

ComponentSet deartinianize(const ComponentSet& c, const ArtinianizedIdeal& a) {
  std::vector<ExpVector> out;
  out.reserve(c.comps.size());
  for (const auto& b : c.comps) out.push_back(deartinianize(b, a));
  return ComponentSet(c.n, maximalize(std::move(out)));
}

bool is_generic(const GeneratorSet& g) {
  for (std::size_t i = 0; i < g.n; ++i) {
    std::vector<Exponent::rep> degs;
    for (const auto& m : g.gens) {
      if (m[i] != Exponent(0)) degs.push_back(m[i].value());
    }
    std::sort(degs.begin(), degs.end());
    if (std::adjacent_find(degs.begin(), degs.end()) != degs.end()) return false;
  }
  return true;
}

}  // namespace irrdecomp

#pragma once

// Exponent vectors, the orders on them, and the ideal-level containers
// shared by every decomposition engine.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

namespace irrdecomp {

/// A nonnegative integer exponent or the distinguished value infinity.
/// Infinity compares greater than every finite value and is fixed by
/// decrement/increment, mirroring the convention x^inf = 0.
class Exponent {
 public:
  using rep = std::uint64_t;

  /// Largest finite exponent accepted from input files and generators.
  static constexpr rep kMaxFinite = rep{1} << 32;

  constexpr Exponent() noexcept = default;
  constexpr Exponent(rep v) noexcept : v_(v) {}  // NOLINT: implicit by design of the literal syntax

  static constexpr Exponent infinity() noexcept { return Exponent(kInfRep); }

  constexpr bool is_inf() const noexcept { return v_ == kInfRep; }
  constexpr bool is_finite() const noexcept { return v_ != kInfRep; }
  constexpr rep value() const noexcept { return v_; }

  friend constexpr bool operator==(Exponent, Exponent) = default;
  friend constexpr auto operator<=>(Exponent, Exponent) = default;

 private:
  static constexpr rep kInfRep = std::numeric_limits<rep>::max();
  rep v_ = 0;
};

inline constexpr Exponent kInf = Exponent::infinity();

std::ostream& operator<<(std::ostream& os, Exponent e);
std::string to_string(Exponent e);

/// A length-n exponent vector. Index 0 is x_1, index n-1 is x_n.
using ExpVector = std::vector<Exponent>;

std::string to_string(const ExpVector& v);

/// Counts monomial operations (comparisons and divisibility tests).
/// One counter is owned per decomposition call; nothing is global.
struct OpCounter {
  std::uint64_t ops = 0;
  void add(std::uint64_t k = 1) noexcept { ops += k; }
};

inline void tick(OpCounter* c, std::uint64_t k = 1) noexcept {
  if (c != nullptr) c->add(k);
}

// --- orders ---------------------------------------------------------------

/// Componentwise a <= b (divisibility of monomials).
bool leq(const ExpVector& a, const ExpVector& b);

/// Every coordinate of a strictly below the matching coordinate of b.
bool strictly_below(const ExpVector& a, const ExpVector& b);

/// Lex order reading from the last coordinate downward (x_1 < ... < x_n).
std::strong_ordering lex_cmp(const ExpVector& a, const ExpVector& b);

struct LexLess {
  bool operator()(const ExpVector& a, const ExpVector& b) const {
    return lex_cmp(a, b) < 0;
  }
};

void lex_sort(std::vector<ExpVector>& vs);

// --- antichain normalization ----------------------------------------------

/// The <=-minimal elements of vs, deduplicated and lex-sorted.
std::vector<ExpVector> minimalize(std::vector<ExpVector> vs, OpCounter* ops = nullptr);

/// The <=-maximal elements of vs, deduplicated and lex-sorted.
std::vector<ExpVector> maximalize(std::vector<ExpVector> vs, OpCounter* ops = nullptr);

bool is_antichain(const std::vector<ExpVector>& vs);

// --- coordinate helpers ---------------------------------------------------

/// beta (-) 1. Throws UsageError on a zero coordinate.
ExpVector decrement(const ExpVector& b);

/// Adds one to every finite coordinate (inverse of decrement).
ExpVector increment(const ExpVector& b);

/// Copy of b with coordinate j (0-based) replaced by value.
ExpVector replace_coord(const ExpVector& b, std::size_t j, Exponent value);

// --- ideals ---------------------------------------------------------------

/// A set of monomial generators in n variables. normalize() turns gens
/// into Min(I).
struct GeneratorSet {
  std::size_t n = 0;
  std::vector<ExpVector> gens;
  std::vector<std::string> names;

  GeneratorSet() = default;
  GeneratorSet(std::size_t nvars, std::vector<ExpVector> g,
               std::vector<std::string> varnames = {});

  /// Checks lengths and that every exponent is finite and <= 2^32.
  void validate() const;

  /// Min(I), lex-sorted. Names are kept.
  GeneratorSet normalized(OpCounter* ops = nullptr) const;

  /// True when Min(I) is {0}, i.e. the ideal is the whole ring.
  bool is_unit() const;
};

/// The exponent vectors of Irr(I): a maximal-sense antichain, lex-sorted.
struct ComponentSet {
  std::size_t n = 0;
  std::vector<ExpVector> comps;

  ComponentSet() = default;
  ComponentSet(std::size_t nvars, std::vector<ExpVector> c);

  std::size_t size() const noexcept { return comps.size(); }
  bool empty() const noexcept { return comps.empty(); }

  /// Lex-sorts comps in place; returns *this for chaining.
  ComponentSet& sort();

  friend bool operator==(const ComponentSet&, const ComponentSet&) = default;
};

std::ostream& operator<<(std::ostream& os, const ComponentSet& c);

/// An ideal made Artinian by adjoining x_i^{c_i} with c_i = maxdeg_i + 1.
struct ArtinianizedIdeal {
  GeneratorSet base;      ///< the original generators, normalized
  GeneratorSet artinian;  ///< Min(base + <x_i^{c_i}>), lex-sorted
  ExpVector bounds;       ///< c_i, all finite and >= 1
  std::vector<bool> added;  ///< x_i^{c_i} survived minimalization

  std::size_t n() const noexcept { return bounds.size(); }
};

ArtinianizedIdeal artinianize(const GeneratorSet& g);

/// Maps coordinates equal to c_i back to infinity for every injected
/// variable, then re-maximalizes and sorts. Throws InternalError when a
/// coordinate exceeds its bound.
ComponentSet deartinianize(const ComponentSet& c, const ArtinianizedIdeal& a);
ExpVector deartinianize(const ExpVector& v, const ArtinianizedIdeal& a);

/// No variable occurs with the same non-zero exponent in two generators.
bool is_generic(const GeneratorSet& g);

/// Pure power of variable i: the vector with exponent d at i, 0 elsewhere.
ExpVector pure_power(std::size_t n, std::size_t i, Exponent d);

/// Index of the single non-zero coordinate, or n if v is not a pure power.
std::size_t pure_power_variable(const ExpVector& v);

}  // namespace irrdecomp

#include "irrdecomp/random_ideal.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "irrdecomp/errors.hpp"

namespace irrdecomp {

namespace {

bool has_zero_row(const std::vector<ExpVector>& rows) {
  return std::any_of(rows.begin(), rows.end(), [](const ExpVector& v) {
    return std::all_of(v.begin(), v.end(), [](Exponent e) { return e == Exponent(0); });
  });
}

}  // namespace

GeneratorSet gen_random(std::size_t n, std::size_t p, std::uint64_t maxdeg, std::uint64_t seed,
                        bool generic) {
  if (n == 0) throw UsageError("gen_random: need at least one variable");
  if (p == 0) throw UsageError("gen_random: need at least one generator");
  if (maxdeg == 0) throw UsageError("gen_random: maxdeg must be at least 1");
  if (maxdeg > Exponent::kMaxFinite) throw UsageError("gen_random: maxdeg exceeds 2^32");
  if (generic && p > maxdeg + 1) {
    throw UsageError("gen_random: a generic ideal with " + std::to_string(p) +
                     " generators needs maxdeg >= " + std::to_string(p - 1));
  }

  if (generic && n == 1 && p > maxdeg) {
    throw UsageError("gen_random: a generic ideal in one variable needs p <= maxdeg");
  }

  std::mt19937_64 rng(seed);
  std::vector<ExpVector> rows(p, ExpVector(n));
  do {
    if (generic) {
      std::vector<std::uint64_t> pool(maxdeg + 1);
      for (std::size_t u = 0; u < n; ++u) {
        std::iota(pool.begin(), pool.end(), std::uint64_t{0});
        std::shuffle(pool.begin(), pool.end(), rng);
        for (std::size_t i = 0; i < p; ++i) rows[i][u] = Exponent(pool[i]);
      }
    } else {
      std::uniform_int_distribution<std::uint64_t> deg(0, maxdeg);
      for (auto& row : rows) {
        do {
          for (auto& e : row) e = Exponent(deg(rng));
        } while (std::all_of(row.begin(), row.end(), [](Exponent e) { return e == Exponent(0); }));
      }
    }
  } while (has_zero_row(rows));

  return GeneratorSet(n, std::move(rows)).normalized();
}

}  // namespace irrdecomp

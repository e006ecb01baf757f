#pragma once

// Benchmark sweeps with monomial-operation accounting, and the pinned
// envelope constants the counts are checked against:
//
//   incremental:  ops <= kIncrementalEnvelopeC * n^2 * p * l
//   recursive:    ops <= kRecursiveEnvelopeC * p^2 * prod_j s_j
//
// p counts the Artinian generating set the engines actually process
// (minimal generators plus injected pure powers), l is the number of
// components and s_j the number of distinct x_j-degrees in that set.
// The constants were calibrated on both sweeps (see README); changing
// them is a reviewed change.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "irrdecomp/core.hpp"

namespace irrdecomp::bench {

inline constexpr double kIncrementalEnvelopeC = 1.0;
inline constexpr double kRecursiveEnvelopeC = 0.25;

enum class Suite { GenericSweep, NongenericSweep };

Suite parse_suite(std::string_view name);

struct BenchRecord {
  std::string instance;
  std::size_t n = 0;
  std::size_t p = 0;    ///< minimal generators of the input ideal
  std::size_t ell = 0;  ///< components emitted
  std::string algorithm;
  std::uint64_t ops = 0;
  double wall_ms = 0.0;
  std::size_t peak = 0;     ///< peak |T|; incremental only, 0 otherwise
  double envelope = 0.0;    ///< the envelope term before the constant
};

/// Envelope terms for one ideal (see the header comment).
double incremental_envelope(const GeneratorSet& g, std::size_t ell);
double recursive_envelope(const GeneratorSet& g);

/// Decomposes with both engines and returns one record per engine.
std::vector<BenchRecord> measure(const std::string& instance, const GeneratorSet& g);

std::vector<BenchRecord> run_suite(Suite suite, unsigned reps = 3);

/// Header plus one row per record, columns:
/// instance,n,p,ell,algorithm,ops,wall_ms,peak_t
std::string to_csv(const std::vector<BenchRecord>& records);

struct EnvelopeSummary {
  double max_incremental_ratio = 0.0;
  double max_recursive_ratio = 0.0;
  std::size_t violations = 0;
  bool ok() const noexcept { return violations == 0; }
};

EnvelopeSummary check_envelopes(const std::vector<BenchRecord>& records);

}  // namespace irrdecomp::bench

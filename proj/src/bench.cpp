#include "irrdecomp/bench.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include "irrdecomp/errors.hpp"
#include "irrdecomp/incremental.hpp"
#include "irrdecomp/random_ideal.hpp"
#include "irrdecomp/recursive.hpp"

namespace irrdecomp::bench {

Suite parse_suite(std::string_view name) {
  if (name == "generic-sweep") return Suite::GenericSweep;
  if (name == "nongeneric-sweep") return Suite::NongenericSweep;
  throw UsageError("unknown bench suite '" + std::string(name) + "'");
}

double incremental_envelope(const GeneratorSet& g, std::size_t ell) {
  const auto a = artinianize(g);
  const double n = static_cast<double>(g.n);
  return n * n * static_cast<double>(a.artinian.gens.size()) * static_cast<double>(ell);
}

double recursive_envelope(const GeneratorSet& g) {
  const auto a = artinianize(g);
  const double p = static_cast<double>(a.artinian.gens.size());
  double prod = 1.0;
  for (std::size_t j = 0; j < g.n; ++j) {
    std::set<Exponent> degs;
    for (const auto& m : a.artinian.gens) degs.insert(m[j]);
    prod *= static_cast<double>(degs.size());
  }
  return p * p * prod;
}

std::vector<BenchRecord> measure(const std::string& instance, const GeneratorSet& input) {
  using clock = std::chrono::steady_clock;
  const auto g = input.normalized();
  std::vector<BenchRecord> out;

  {
    const auto t0 = clock::now();
    const auto r = incremental::incremental_decompose(g);
    const auto t1 = clock::now();
    BenchRecord rec;
    rec.instance = instance;
    rec.n = g.n;
    rec.p = g.gens.size();
    rec.ell = r.components.size();
    rec.algorithm = "incremental";
    rec.ops = r.ops;
    rec.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    rec.peak = r.peak;
    rec.envelope = incremental_envelope(g, rec.ell);
    out.push_back(std::move(rec));
  }
  {
    OpCounter ops;
    const auto t0 = clock::now();
    const auto c = recursive::decompose(g, &ops);
    const auto t1 = clock::now();
    BenchRecord rec;
    rec.instance = instance;
    rec.n = g.n;
    rec.p = g.gens.size();
    rec.ell = c.size();
    rec.algorithm = "recursive";
    rec.ops = ops.ops;
    rec.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    rec.envelope = recursive_envelope(g);
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<BenchRecord> run_suite(Suite suite, unsigned reps) {
  const bool generic = suite == Suite::GenericSweep;
  std::vector<BenchRecord> out;
  for (std::size_t n : {3u, 4u, 5u}) {
    for (std::size_t p : {5u, 10u, 15u, 20u}) {
      const std::uint64_t maxdeg = generic ? 2 * p : 4;
      for (unsigned rep = 0; rep < reps; ++rep) {
        const std::uint64_t seed = 1000003ULL * n + 1009ULL * p + rep;
        const auto g = gen_random(n, p, maxdeg, seed, generic);
        std::ostringstream id;
        id << (generic ? "g" : "ng") << "-n" << n << "-p" << p << "-r" << rep;
        auto recs = measure(id.str(), g);
        out.insert(out.end(), recs.begin(), recs.end());
      }
    }
  }
  return out;
}

std::string to_csv(const std::vector<BenchRecord>& records) {
  std::ostringstream os;
  os << "instance,n,p,ell,algorithm,ops,wall_ms,peak_t\n";
  for (const auto& r : records) {
    os << r.instance << ',' << r.n << ',' << r.p << ',' << r.ell << ',' << r.algorithm << ','
       << r.ops << ',' << r.wall_ms << ',' << r.peak << '\n';
  }
  return os.str();
}

EnvelopeSummary check_envelopes(const std::vector<BenchRecord>& records) {
  EnvelopeSummary s;
  for (const auto& r : records) {
    if (r.envelope <= 0.0) continue;
    const double ratio = static_cast<double>(r.ops) / r.envelope;
    if (r.algorithm == "incremental") {
      s.max_incremental_ratio = std::max(s.max_incremental_ratio, ratio);
      if (ratio > kIncrementalEnvelopeC) ++s.violations;
    } else {
      s.max_recursive_ratio = std::max(s.max_recursive_ratio, ratio);
      if (ratio > kRecursiveEnvelopeC) ++s.violations;
    }
  }
  return s;
}

}  // namespace irrdecomp::bench

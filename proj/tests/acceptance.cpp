// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "checks.hpp"
#include "irrdecomp/bench.hpp"
#include "irrdecomp/cli.hpp"
#include "irrdecomp/incremental.hpp"
#include "irrdecomp/oracle.hpp"
#include "irrdecomp/recursive.hpp"

namespace {

using namespace irrdecomp;
using namespace irrdecomp::testing;
using clock_type = std::chrono::steady_clock;
using json = nlohmann::json;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

Outcome golden_example() {
  const auto t0 = clock_type::now();
  const auto g = example_ideal();
  const auto want = example_components();
  const bool rec = recursive::decompose(g) == want;
  const bool inc = incremental::decompose(g) == want;
  const bool orc = oracle::decompose(g) == want;
  const double s = seconds_since(t0);
  std::ostringstream os;
  os << "recursive=" << rec << " incremental=" << inc << " oracle=" << orc << " time=" << s << "s";
  return {rec && inc && orc && s < 1.0, os.str()};
}

Outcome counterexample() {
  const auto t0 = clock_type::now();
  const auto g = counterexample_ideal();
  const auto want = counterexample_components();
  const bool engines = recursive::decompose(g) == want && incremental::decompose(g) == want &&
                       oracle::decompose(g) == want;

  const auto norm = g.normalized();
  auto state = incremental::state_from(4, norm.gens, want.comps);
  incremental::StepRecord rec;
  incremental::update_with_generator(state, {1, 1, 1, 1}, &rec, true);
  const bool five = state.components.size() == 5;
  const bool removed =
      std::find(state.components.begin(), state.components.end(), ExpVector{2, 2, 2, 2}) ==
      state.components.end();
  const bool none_added = std::none_of(rec.candidates.begin(), rec.candidates.end(),
                                       [](const incremental::Candidate& c) { return c.kept; });
  const double s = seconds_since(t0);
  std::ostringstream os;
  os << "engines=" << engines << " after_update=" << state.components.size()
     << " removed_2222=" << removed << " none_added=" << none_added << " time=" << s << "s";
  return {engines && five && removed && none_added && s < 1.0, os.str()};
}

json row(std::initializer_list<const char*> v) {
  json out = json::array();
  for (const char* s : v) out.push_back(json::parse(s));
  return out;
}

Outcome trace_fidelity() {
  namespace fs = std::filesystem;
  const auto file = fs::temp_directory_path() / "irrdecomp_acceptance_example.ideal";
  std::ofstream(file) << "ideal 3 x y z\n4 0 0\n0 4 0\n3 2 2\n1 3 2\n2 1 3\nend\n";
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli_main({"decompose", "--algo", "incremental", "--trace", file.string()}, out, err);
  fs::remove(file);
  if (code != 0) return {false, "decompose exited with " + std::to_string(code)};

  std::vector<json> steps;
  std::istringstream lines(err.str());
  for (std::string line; std::getline(lines, line);) {
    if (!line.empty() && line.front() == '{') steps.push_back(json::parse(line));
  }
  if (steps.size() != 3) return {false, "expected 3 trace lines, got " + std::to_string(steps.size())};

  // Step (i): every kept component; nothing was in T1.
  json after_first = json::array();
  for (const auto& e : steps[0]["kept"]) after_first.push_back(e["component"]);
  std::sort(after_first.begin(), after_first.end());
  json want_first = row({R"([3,4,"inf"])", R"([4,2,"inf"])", "[4,4,2]"});
  std::sort(want_first.begin(), want_first.end());
  const bool step1 = steps[0]["t1_size"] == 0 && after_first == want_first;

  // Step (ii): T1 has the two components alpha is not strictly below.
  const bool step2 = steps[1]["t1_size"] == 2 && steps[1]["t2_size"] == 1;

  // Step (iii): d and kept flags for beta = (4,2,inf), u = 1, 2, 3.
  std::vector<std::pair<int, bool>> seen(3, {-1, false});
  for (const char* key : {"kept", "rejected"}) {
    for (const auto& e : steps[2][key]) {
      if (e["beta"] == json::parse(R"([4,2,"inf"])")) {
        seen.at(e["u"].get<std::size_t>() - 1) = {e["d"].get<int>(), std::string(key) == "kept"};
      }
    }
  }
  const std::vector<std::pair<int, bool>> want3{{3, false}, {0, true}, {2, true}};
  const bool step3 = seen == want3;

  std::ostringstream os;
  os << "step1=" << step1 << " step2_t1=" << steps[1]["t1_size"] << " step3_d=(" << seen[0].first
     << ',' << seen[1].first << ',' << seen[2].first << ")";
  return {step1 && step2 && step3, os.str()};
}

Outcome from_check(const CheckResult& r, std::size_t needed, double s, double limit) {
  std::ostringstream os;
  os << r.instances << " instances, " << r.failures << " failures, " << s << "s";
  if (!r.ok()) os << "; first: " << r.first_failure;
  return {r.ok() && r.instances >= needed && s < limit, os.str()};
}

Outcome timed(const std::function<CheckResult()>& run, std::size_t needed, double limit = 1e9) {
  const auto t0 = clock_type::now();
  const auto r = run();
  return from_check(r, needed, seconds_since(t0), limit);
}

Outcome envelopes() {
  const auto records = bench::run_suite(bench::Suite::GenericSweep);
  const auto s = bench::check_envelopes(records);
  std::ostringstream os;
  os << records.size() << " records, max ops/(n^2 p l)=" << s.max_incremental_ratio
     << " (C=" << bench::kIncrementalEnvelopeC << "), max ops/(p^2 prod s_j)="
     << s.max_recursive_ratio << " (C'=" << bench::kRecursiveEnvelopeC
     << "), violations=" << s.violations;
  return {s.ok() && !records.empty(), os.str()};
}

Outcome lemma_suites() {
  constexpr std::size_t kCount = 300;
  const std::vector<std::pair<const char*, std::function<CheckResult()>>> suites{
      {"staircase_below", [] { return check_staircase_below_components(101, kCount); }},
      {"maximal_points", [] { return check_components_are_maximal_points(102, kCount); }},
      {"slices", [] { return check_slice_criterion(103, kCount); }},
      {"untouched", [] { return check_untouched_components_survive(104, kCount); }},
      {"single_match", [] { return check_single_variable_matches(105, kCount); }},
      {"lcm_divisors", [] { return check_lcm_of_divisors(106, kCount); }},
      {"redundancy", [] { return check_redundancy_criterion(107, kCount); }},
  };
  bool pass = true;
  std::ostringstream os;
  for (const auto& [name, run] : suites) {
    const auto r = run();
    pass = pass && r.ok() && r.instances >= kCount;
    os << name << '=' << r.instances << '/' << r.failures << ' ';
    if (!r.ok()) os << "(" << r.first_failure << ") ";
  }
  os << "(instances/failures)";
  return {pass, os.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"golden example, three engines", golden_example},
      {"non-generic counterexample and update", counterexample},
      {"incremental trace fidelity", trace_fidelity},
      {"oracle cross-validation",
       [] { return timed([] { return check_engine_agreement(4001, 1000); }, 1000, 300.0); }},
      {"non-decreasing |T| under lex insertion",
       [] { return timed([] { return check_nondecreasing(5001, 200); }, 200); }},
      {"distribution rules",
       [] { return timed([] { return check_distribution_rules(6001, 1000); }, 1000); }},
      {"bivariate closed form", [] { return timed([] { return check_bivariate(7001, 500); }, 500); }},
      {"operation-count envelopes", envelopes},
      {"lemma property suites", lemma_suites},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s criterion %zu: %s -- %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}

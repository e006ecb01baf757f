#include "irrdecomp/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <filesystem>
#include <future>
#include <ostream>
#include <sstream>
#include <thread>

#include "irrdecomp/bench.hpp"
#include "irrdecomp/errors.hpp"
#include "irrdecomp/incremental.hpp"
#include "irrdecomp/io.hpp"
#include "irrdecomp/oracle.hpp"
#include "irrdecomp/random_ideal.hpp"
#include "irrdecomp/recursive.hpp"

namespace irrdecomp {

namespace {

namespace fs = std::filesystem;

struct DecomposeOptions {
  std::string algo = "incremental";
  std::string order = "lex";
  bool trace = false;
  bool stats = false;
  bool check_maxmerge = false;
  std::uint64_t budget = oracle::kDefaultBudget;
};

struct Outcome {
  std::string components;  // ComponentFile text
  std::string diagnostics;  // trace and stats lines
};

Outcome run_decompose(const GeneratorSet& input, const DecomposeOptions& opt) {
  using clock = std::chrono::steady_clock;
  std::ostringstream diag;
  const auto norm = input.normalized();
  ComponentSet comps;
  std::uint64_t ops = 0;
  std::size_t peak = 0;

  const auto t0 = clock::now();
  if (opt.algo == "incremental") {
    incremental::Options o;
    o.order = opt.order == "input" ? incremental::InsertionOrder::Input
                                   : incremental::InsertionOrder::Lex;
    o.check_maxmerge = opt.check_maxmerge;
    ArtinianizedIdeal a;
    if (opt.trace && !norm.is_unit()) {
      a = artinianize(norm);
      o.on_step = [&](const incremental::StepRecord& rec) {
        diag << io::trace_line(rec, a) << '\n';
      };
    }
    auto r = incremental::incremental_decompose(input, o);
    comps = std::move(r.components);
    ops = r.ops;
    peak = r.peak;
  } else if (opt.algo == "recursive") {
    OpCounter c;
    comps = recursive::decompose(input, &c);
    ops = c.ops;
  } else {
    comps = oracle::decompose(input, opt.budget);
  }
  const auto t1 = clock::now();

  if (opt.stats) {
    diag << "algo=" << opt.algo << " n=" << input.n << " p=" << norm.gens.size()
         << " ell=" << comps.size() << " ops=" << ops
         << " wall_ms=" << std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (opt.algo == "incremental") diag << " peak_t=" << peak;
    diag << '\n';
  }
  return {io::emit_components(comps), diag.str()};
}

int decompose_batch(const fs::path& dir, const std::string& out_dir, const DecomposeOptions& opt,
                    std::ostream& out, std::ostream& err) {
  if (out_dir.empty()) {
    err << "decompose: an output directory is required when IN is a directory\n";
    return kExitUsage;
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".ideal") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  fs::create_directories(out_dir);

  struct Result {
    int code = kExitOk;
    std::string message;
    std::string diagnostics;
  };
  auto work = [&](const fs::path& file) {
    Result r;
    try {
      auto outcome = run_decompose(io::read_ideal_file(file.string()), opt);
      io::write_file((fs::path(out_dir) / file.stem()).string() + ".irr", outcome.components);
      r.diagnostics = std::move(outcome.diagnostics);
    } catch (const BudgetExceeded& e) {
      r = {kExitBudget, e.what(), {}};
    } catch (const InternalError& e) {
      r = {kExitVerificationFailed, e.what(), {}};
    } catch (const std::exception& e) {
      r = {kExitUsage, e.what(), {}};
    }
    return r;
  };

  const std::size_t width = std::max(1u, std::thread::hardware_concurrency());
  std::vector<Result> results(files.size());
  for (std::size_t start = 0; start < files.size(); start += width) {
    std::vector<std::future<Result>> pending;
    for (std::size_t i = start; i < std::min(files.size(), start + width); ++i) {
      pending.push_back(std::async(std::launch::async, work, files[i]));
    }
    for (std::size_t i = 0; i < pending.size(); ++i) results[start + i] = pending[i].get();
  }

  int code = kExitOk;
  for (std::size_t i = 0; i < files.size(); ++i) {
    err << results[i].diagnostics;
    if (results[i].code != kExitOk) {
      err << files[i].string() << ": " << results[i].message << '\n';
      code = std::max(code, results[i].code);
    }
  }
  out << "decomposed " << files.size() << " ideals into " << out_dir << '\n';
  return code;
}

int cmd_decompose(const std::string& in, const std::string& out_path, const DecomposeOptions& opt,
                  std::ostream& out, std::ostream& err) {
  if (opt.trace && opt.algo != "incremental") {
    err << "decompose: --trace requires --algo incremental\n";
    return kExitUsage;
  }
  if (fs::is_directory(in)) return decompose_batch(in, out_path, opt, out, err);
  auto outcome = run_decompose(io::read_ideal_file(in), opt);
  err << outcome.diagnostics;
  if (out_path.empty()) {
    out << outcome.components;
  } else {
    io::write_file(out_path, outcome.components);
  }
  return kExitOk;
}

int cmd_verify(const std::string& comps_path, const std::string& ideal_path, std::uint64_t budget,
               std::ostream& out) {
  const auto c = io::read_components_file(comps_path);
  const auto g = io::read_ideal_file(ideal_path);
  auto fail = [&](const std::string& why) {
    out << "FAIL: " << why << '\n';
    return kExitVerificationFailed;
  };
  if (c.n != g.n) return fail("variable counts differ");
  for (const auto& b : c.comps) {
    for (auto e : b) {
      if (e == Exponent(0)) return fail("component " + to_string(b) + " has a zero coordinate");
    }
  }
  if (!is_antichain(c.comps)) return fail("components are not an antichain");
  if (!oracle::components_generate(c, g, budget)) {
    return fail("intersection of components differs from the ideal");
  }
  out << "ok\n";
  return kExitOk;
}

int cmd_gen(std::size_t n, std::size_t p, std::uint64_t maxdeg, std::uint64_t seed, bool generic,
            const std::string& out_path, std::ostream& out) {
  const auto g = gen_random(n, p, maxdeg, seed, generic);
  const auto text = io::emit_ideal(g);
  if (out_path == "-") {
    out << text;
  } else {
    io::write_file(out_path, text);
  }
  return kExitOk;
}

int cmd_bench(const std::string& suite, const std::string& csv, unsigned reps, std::ostream& out) {
  const auto records = bench::run_suite(bench::parse_suite(suite), reps);
  io::write_file(csv, bench::to_csv(records));
  const auto s = bench::check_envelopes(records);
  out << "records=" << records.size() << " max_incremental_ratio=" << s.max_incremental_ratio
      << " (C=" << bench::kIncrementalEnvelopeC << ") max_recursive_ratio="
      << s.max_recursive_ratio << " (C'=" << bench::kRecursiveEnvelopeC
      << ") violations=" << s.violations << '\n';
  return s.ok() ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Irreducible decomposition of monomial ideals", "irrdecomp"};
  app.require_subcommand(1);

  DecomposeOptions dopt;
  std::string dec_in;
  std::string dec_out;
  auto* dec = app.add_subcommand("decompose", "Decompose an ideal file (or a directory of them)");
  dec->add_option("--algo", dopt.algo, "Engine")
      ->check(CLI::IsMember({"recursive", "incremental", "oracle"}));
  dec->add_flag("--trace", dopt.trace, "Print one JSON line per incremental step to stderr");
  dec->add_flag("--stats", dopt.stats, "Print operation count and timing to stderr");
  dec->add_option("--order", dopt.order,
                  "Incremental insertion order; 'input' voids the non-decreasing |T| guarantee")
      ->check(CLI::IsMember({"lex", "input"}));
  dec->add_flag("--check-maxmerge", dopt.check_maxmerge,
                "Cross-check every incremental step against a full MaxMerge");
  dec->add_option("--budget", dopt.budget, "Oracle cell budget");
  dec->add_option("IN", dec_in, "Ideal file or directory")->required();
  dec->add_option("OUT", dec_out, "Output component file (or directory in batch mode)");

  std::string ver_comps;
  std::string ver_ideal;
  std::uint64_t ver_budget = oracle::kDefaultBudget;
  auto* ver = app.add_subcommand("verify", "Check a component file against an ideal file");
  ver->add_option("COMPONENTS", ver_comps)->required();
  ver->add_option("IDEAL", ver_ideal)->required();
  ver->add_option("--budget", ver_budget, "Oracle cell budget");

  std::size_t gen_n = 0;
  std::size_t gen_p = 0;
  std::uint64_t gen_maxdeg = 0;
  std::uint64_t gen_seed = 0;
  bool gen_generic = false;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Write a seeded random ideal");
  gen->add_option("--vars", gen_n)->required();
  gen->add_option("--gens", gen_p)->required();
  gen->add_option("--maxdeg", gen_maxdeg)->required();
  gen->add_option("--seed", gen_seed)->required();
  gen->add_flag("--generic", gen_generic);
  gen->add_option("OUT", gen_out, "Output path, '-' for stdout")->required();

  std::string bench_suite;
  std::string bench_out;
  unsigned bench_reps = 3;
  auto* bch = app.add_subcommand("bench", "Run a benchmark sweep and write CSV");
  bch->add_option("--suite", bench_suite)
      ->required()
      ->check(CLI::IsMember({"generic-sweep", "nongeneric-sweep"}));
  bch->add_option("--out", bench_out)->required();
  bch->add_option("--reps", bench_reps, "Instances per (n, p) cell");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*dec) return cmd_decompose(dec_in, dec_out, dopt, out, err);
    if (*ver) return cmd_verify(ver_comps, ver_ideal, ver_budget, out);
    if (*gen) return cmd_gen(gen_n, gen_p, gen_maxdeg, gen_seed, gen_generic, gen_out, out);
    if (*bch) return cmd_bench(bench_suite, bench_out, bench_reps, out);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitVerificationFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace irrdecomp

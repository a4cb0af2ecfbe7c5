// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: instance generation, connectivity checking with
// exact query accounting, scaling benchmarks, and the lower-bound
// experiments. Exit codes: 0 success, 2 invalid input or exceeded caps,
// 3 internal invariant violation.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "matq/chi.hpp"
#include "matq/cunningham.hpp"
#include "matq/errors.hpp"
#include "matq/families.hpp"
#include "matq/grover.hpp"
#include "matq/instance.hpp"
#include "matq/lower_bound.hpp"
#include "matq/matroid_ops.hpp"
#include "matq/quantum_dfs.hpp"
#include "matq/rng.hpp"
#include "matq/scaling.hpp"
#include "matq/subset_mask.hpp"
#include "svg_plot.hpp"

namespace {

using json = nlohmann::json;
using namespace matq;

// ---------------------------------------------------------------------------
// Shared option bundles

struct GroverFlags {
  std::uint32_t scale = 1;
  std::uint32_t repetitions = 1;
  std::string mode = "idealized";

  GroverCostModel to_model() const {
    GroverCostModel model;
    model.c_success = scale;
    model.c_fail = scale;
    model.repetitions = repetitions;
    model.mode = mode == "sampled" ? GroverMode::kSampled : GroverMode::kIdealized;
    model.validate();
    return model;
  }
};

void add_grover_flags(CLI::App* cmd, GroverFlags& flags) {
  cmd->add_option("--grover-c", flags.scale,
                  "Integer scale applied to both search cost constants")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--repetitions", flags.repetitions,
                  "Error-amplification repetitions for emptiness declarations")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--grover-mode", flags.mode, "Search outcome model")
      ->check(CLI::IsMember({"idealized", "sampled"}));
}

// Rank rule: explicit --r wins; otherwise half of n, clamped to a legal
// minimal-family rank.
std::size_t effective_rank(std::size_t n, std::int64_t r_flag) {
  if (r_flag >= 0) return static_cast<std::size_t>(r_flag);
  if (n < 2) return 1;
  return std::clamp<std::size_t>(n / 2, 1, n - 1);
}

// ---------------------------------------------------------------------------
// Serialization helpers

json mask_to_json(const SubsetMask& mask) {
  json arr = json::array();
  mask.for_each([&arr](ElementId e) { arr.push_back(e + 1); });
  return arr;
}

json ledger_to_json(const QueryLedger& ledger) {
  json phases = json::array();
  for (const auto& p : ledger.phases()) {
    phases.push_back({{"label", p.label},
                      {"classical", p.classical},
                      {"quantum_charged", p.quantum_charged}});
  }
  return {{"classical_total", ledger.classical_total()},
          {"quantum_total", ledger.quantum_total()},
          {"phases", std::move(phases)}};
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << text;
  if (!out) throw std::invalid_argument("error writing output file: " + path);
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_text(out_path, text);
  }
}

// ---------------------------------------------------------------------------
// Algorithm runners

struct RunOutcome {
  ConnectivityVerdict verdict;
  double elapsed_ms = 0.0;
};

RunOutcome run_algorithm(const MatroidOracle& oracle, const std::string& algorithm,
                         const GroverCostModel& model, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  RunOutcome outcome;
  if (algorithm == "brute") {
    outcome.verdict = brute_force_connected(oracle);
  } else if (algorithm == "classical") {
    outcome.verdict = cunningham_connected(oracle);
  } else if (algorithm == "quantum") {
    Rng rng = Rng::seeded(seed);
    outcome.verdict = quantum_dfs_connected(oracle, model, rng);
  } else {
    throw std::invalid_argument("unknown algorithm \"" + algorithm + "\"");
  }
  const auto stop = std::chrono::steady_clock::now();
  outcome.elapsed_ms =
      std::chrono::duration<double, std::milli>(stop - start).count();
  return outcome;
}

// ---------------------------------------------------------------------------
// gen

InstanceSpec generate_spec(const std::string& family, std::size_t n, std::int64_t r_flag,
                           std::uint64_t seed) {
  InstanceSpec spec;
  spec.family = family_from_name(family);
  switch (spec.family) {
    case Family::kMinimal:
    case Family::kUniform:
      spec.n = n;
      spec.r = effective_rank(n, r_flag);
      break;
    case Family::kRemovedBase: {
      spec.n = n;
      spec.r = effective_rank(n, r_flag);
      const auto bases = MinimalMatroid::canonical_bases(spec.n, spec.r);
      spec.removed = bases[seed % bases.size()].elements();
      break;
    }
    case Family::kGraphic: {
      // --n is the vertex count here: a cycle keeps the graph connected and
      // seed-derived chords vary the structure; elements are the edges.
      if (n < 3) throw std::invalid_argument("graphic generation requires n >= 3 vertices");
      spec.vertex_count = n;
      std::set<std::pair<ElementId, ElementId>> used;
      for (ElementId v = 0; v < n; ++v) {
        const auto next = static_cast<ElementId>((v + 1) % n);
        spec.edges.push_back(GraphicMatroid::Edge{v, next});
        used.insert(std::minmax(v, next));
      }
      Rng rng = Rng::seeded(seed);
      std::size_t chords = n / 2;
      for (std::size_t attempts = 10 * n; chords > 0 && attempts > 0; --attempts) {
        const auto a = static_cast<ElementId>(rng.pick(n));
        const auto b = static_cast<ElementId>(rng.pick(n));
        if (a == b || !used.insert(std::minmax(a, b)).second) continue;
        spec.edges.push_back(GraphicMatroid::Edge{a, b});
        --chords;
      }
      spec.n = spec.edges.size();
      break;
    }
    case Family::kExplicitBases: {
      spec.n = n;
      spec.r = effective_rank(n, r_flag);
      for (const auto& b : MinimalMatroid::canonical_bases(spec.n, spec.r)) {
        spec.bases.push_back(b.elements());
      }
      break;
    }
  }
  return spec;
}

int cmd_gen(const std::string& family, std::size_t n, std::int64_t r_flag,
            std::uint64_t seed, const std::string& out_path) {
  const InstanceSpec spec = generate_spec(family, n, r_flag, seed);
  make_oracle(spec);  // force validation before emitting
  emit(out_path, instance_to_text(spec) + "\n");
  return 0;
}

// ---------------------------------------------------------------------------
// check

int cmd_check(const std::string& instance_arg, const std::string& algorithm,
              std::uint64_t seed, const GroverFlags& grover, const std::string& out_path) {
  const auto first_char = instance_arg.find_first_not_of(" \t\r\n");
  const bool inline_doc = first_char != std::string::npos && instance_arg[first_char] == '{';
  const InstanceSpec spec =
      inline_doc ? parse_instance_text(instance_arg) : parse_instance_file(instance_arg);
  const std::unique_ptr<MatroidOracle> oracle = make_oracle(spec);

  const RunOutcome outcome = run_algorithm(*oracle, algorithm, grover.to_model(), seed);

  json doc = {{"family", family_name(spec.family)},
              {"n", spec.n},
              {"r", instance_rank(spec)},
              {"algorithm", algorithm},
              {"connected", outcome.verdict.connected},
              {"classical_queries", outcome.verdict.ledger.classical_total()},
              {"quantum_charged", outcome.verdict.ledger.quantum_total()},
              {"ledger", ledger_to_json(outcome.verdict.ledger)},
              {"seed", seed}};
  if (outcome.verdict.witness) {
    doc["witness"] = json::array({mask_to_json(outcome.verdict.witness->first),
                                  mask_to_json(outcome.verdict.witness->second)});
  } else {
    doc["witness"] = nullptr;
  }
  emit(out_path, doc.dump(2) + "\n");
  return 0;
}

// ---------------------------------------------------------------------------
// bench

struct BenchRow {
  std::string family;
  std::size_t n = 0;
  std::size_t r = 0;
  std::string algorithm;
  bool connected = false;
  std::uint64_t classical_queries = 0;
  std::uint64_t quantum_charged = 0;
  std::uint64_t seed = 0;
  double elapsed_ms = 0.0;

  // The algorithm's headline cost: modeled charge for the quantum decider,
  // oracle calls otherwise.
  double headline() const {
    return algorithm == "quantum" ? static_cast<double>(quantum_charged)
                                  : static_cast<double>(classical_queries);
  }
};

std::string rows_to_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "# matq-bench-v1\n";
  out << "family,n,r,algorithm,connected,classical_queries,quantum_charged,seed,elapsed_ms\n";
  for (const auto& row : rows) {
    out << row.family << ',' << row.n << ',' << row.r << ',' << row.algorithm << ','
        << (row.connected ? "true" : "false") << ',' << row.classical_queries << ','
        << row.quantum_charged << ',' << row.seed << ',';
    out.precision(3);
    out << std::fixed << row.elapsed_ms << '\n';
    out.unsetf(std::ios_base::floatfield);
  }
  return out.str();
}

std::string rows_to_json(const std::vector<BenchRow>& rows) {
  json arr = json::array();
  for (const auto& row : rows) {
    arr.push_back({{"family", row.family},
                   {"n", row.n},
                   {"r", row.r},
                   {"algorithm", row.algorithm},
                   {"connected", row.connected},
                   {"classical_queries", row.classical_queries},
                   {"quantum_charged", row.quantum_charged},
                   {"seed", row.seed},
                   {"elapsed_ms", row.elapsed_ms}});
  }
  return arr.dump(2) + "\n";
}

// Mean headline cost per n for each algorithm, as plottable series.
std::vector<matq::tools::PlotSeries> summarize(const std::vector<BenchRow>& rows) {
  std::map<std::string, std::map<std::size_t, std::pair<double, std::size_t>>> sums;
  for (const auto& row : rows) {
    auto& cell = sums[row.algorithm][row.n];
    cell.first += row.headline();
    cell.second += 1;
  }
  std::vector<matq::tools::PlotSeries> series;
  for (const auto& [algorithm, by_n] : sums) {
    matq::tools::PlotSeries s;
    s.label = algorithm;
    for (const auto& [n, cell] : by_n) {
      s.points.emplace_back(static_cast<double>(n),
                            cell.first / static_cast<double>(cell.second));
    }
    series.push_back(std::move(s));
  }
  return series;
}

int cmd_bench(const std::string& family, const std::vector<std::size_t>& n_grid,
              std::int64_t r_flag, const std::vector<std::string>& algorithms,
              std::size_t trials, std::uint64_t seed, const GroverFlags& grover,
              const std::string& out_path, const std::string& format, bool fit,
              const std::string& svg_path) {
  if ((fit || !svg_path.empty()) && out_path.empty()) {
    throw std::invalid_argument("--fit and --svg require --out so stdout stays single-purpose");
  }
  const GroverCostModel model = grover.to_model();

  std::vector<BenchRow> rows;
  std::size_t ordinal = 0;
  for (std::size_t n : n_grid) {
    for (std::size_t trial = 0; trial < trials; ++trial, ++ordinal) {
      const std::uint64_t cell_seed = Rng::derive_seed(seed, ordinal);
      const InstanceSpec spec = generate_spec(family, n, r_flag, cell_seed);
      const std::unique_ptr<MatroidOracle> oracle = make_oracle(spec);
      for (const auto& algorithm : algorithms) {
        const RunOutcome outcome = run_algorithm(*oracle, algorithm, model, cell_seed);
        rows.push_back(BenchRow{family, spec.n, instance_rank(spec), algorithm,
                                outcome.verdict.connected,
                                outcome.verdict.ledger.classical_total(),
                                outcome.verdict.ledger.quantum_total(), cell_seed,
                                outcome.elapsed_ms});
      }
    }
  }

  emit(out_path, format == "json" ? rows_to_json(rows) : rows_to_csv(rows));

  const auto series = summarize(rows);
  if (!svg_path.empty()) {
    write_text(svg_path, matq::tools::render_loglog_svg(series, "query cost vs n"));
  }
  if (fit) {
    json slopes = json::object();
    for (const auto& s : series) {
      slopes[s.label] = fit_scaling_exponent(s.points);
    }
    std::cout << slopes.dump(2) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// distinguish / adversary

int cmd_distinguish(std::size_t n, std::size_t r, std::size_t probes, std::size_t trials,
                    std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("--trials must be positive");
  const double bases = static_cast<double>(r * (n - r) + 1);
  std::size_t correct = 0;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    Rng rng = Rng::seeded(Rng::derive_seed(seed, trial));
    const MuSample sample = mu_sample(n, r, rng);
    if (probe_distinguisher(sample, probes)) ++correct;
  }
  const json doc = {{"n", n},
                    {"r", r},
                    {"probes", probes},
                    {"trials", trials},
                    {"seed", seed},
                    {"empirical_success", static_cast<double>(correct) / static_cast<double>(trials)},
                    {"predicted", 0.5 + static_cast<double>(probes) / (2.0 * bases)}};
  std::cout << doc.dump(2) << "\n";
  return 0;
}

int cmd_adversary(std::size_t n, std::size_t r) {
  const AdversaryParameters params = adversary_parameters(n, r);
  const json doc = {{"n", n},           {"r", r},
                    {"m", params.m},    {"m_prime", params.m_prime},
                    {"l", params.l},    {"l_prime", params.l_prime},
                    {"bound", params.bound}};
  std::cout << doc.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matroid connectivity query-complexity laboratory"};
  app.require_subcommand(1);

  // gen
  std::string gen_family;
  std::size_t gen_n = 0;
  std::int64_t gen_r = -1;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Emit an instance document");
  gen->add_option("family", gen_family, "Instance family")
      ->required()
      ->check(CLI::IsMember({"minimal", "removed_base", "uniform", "graphic", "explicit_bases"}));
  gen->add_option("--n", gen_n, "Ground-set size (vertex count for graphic)")->required();
  gen->add_option("--r", gen_r, "Rank parameter (default: half of n)");
  gen->add_option("--seed", gen_seed, "Selects the removed base / graph chords");
  gen->add_option("--out", gen_out, "Output path (default: stdout)");

  // check
  std::string check_instance, check_alg = "classical", check_out;
  std::uint64_t check_seed = 0;
  GroverFlags check_grover;
  auto* check = app.add_subcommand("check", "Decide connectivity of one instance");
  check->add_option("instance", check_instance, "Instance document path, or inline JSON")
      ->required();
  check->add_option("--alg", check_alg, "Decider to run")
      ->check(CLI::IsMember({"brute", "classical", "quantum"}));
  check->add_option("--seed", check_seed, "Seed for the quantum decider's rng");
  check->add_option("--out", check_out, "Output path (default: stdout)");
  add_grover_flags(check, check_grover);

  // bench
  std::string bench_family = "minimal", bench_out, bench_format = "csv", bench_svg;
  std::vector<std::size_t> bench_ns;
  std::vector<std::string> bench_algs{"classical", "quantum"};
  std::int64_t bench_r = -1;
  std::size_t bench_trials = 1;
  std::uint64_t bench_seed = 0;
  bool bench_fit = false;
  GroverFlags bench_grover;
  auto* bench = app.add_subcommand("bench", "Run deciders over an n-grid, emitting records");
  bench->add_option("--family", bench_family, "Instance family")
      ->check(CLI::IsMember({"minimal", "removed_base", "uniform", "graphic", "explicit_bases"}));
  bench->add_option("--n", bench_ns, "Grid of sizes (repeatable)");
  bench->add_option("--r", bench_r, "Rank parameter (default: half of n)");
  bench->add_option("--alg", bench_algs, "Algorithms to run (repeatable)")
      ->check(CLI::IsMember({"brute", "classical", "quantum"}));
  bench->add_option("--trials", bench_trials, "Seeds per grid point");
  bench->add_option("--seed", bench_seed, "Master seed; cell seeds derive from it");
  bench->add_option("--out", bench_out, "Output path (default: stdout)");
  bench->add_option("--format", bench_format, "Record format")
      ->check(CLI::IsMember({"csv", "json"}));
  bench->add_flag("--fit", bench_fit, "Print fitted log-log slopes to stdout (needs --out)");
  bench->add_option("--svg", bench_svg, "Also write a log-log SVG plot (needs --out)");
  add_grover_flags(bench, bench_grover);

  // distinguish
  std::size_t dist_n = 0, dist_r = 0, dist_probes = 0, dist_trials = 100000;
  std::uint64_t dist_seed = 0;
  auto* distinguish = app.add_subcommand(
      "distinguish", "Monte Carlo success rate of the base-probing distinguisher");
  distinguish->add_option("--n", dist_n, "Ground-set size")->required();
  distinguish->add_option("--r", dist_r, "Rank")->required();
  distinguish->add_option("--probes", dist_probes, "Number of canonical bases probed")
      ->required();
  distinguish->add_option("--trials", dist_trials, "Monte Carlo trials");
  distinguish->add_option("--seed", dist_seed, "Master seed");

  // adversary
  std::size_t adv_n = 0, adv_r = 0;
  auto* adversary =
      app.add_subcommand("adversary", "Adversary-method parameters and query bound");
  adversary->add_option("--n", adv_n, "Ground-set size")->required();
  adversary->add_option("--r", adv_r, "Rank")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (gen->parsed()) return cmd_gen(gen_family, gen_n, gen_r, gen_seed, gen_out);
    if (check->parsed()) {
      return cmd_check(check_instance, check_alg, check_seed, check_grover, check_out);
    }
    if (bench->parsed()) {
      return cmd_bench(bench_family, bench_ns, bench_r, bench_algs, bench_trials,
                       bench_seed, bench_grover, bench_out, bench_format, bench_fit,
                       bench_svg);
    }
    if (distinguish->parsed()) {
      return cmd_distinguish(dist_n, dist_r, dist_probes, dist_trials, dist_seed);
    }
    if (adversary->parsed()) return cmd_adversary(adv_n, adv_r);
    std::cerr << "no subcommand selected\n";
    return 2;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}

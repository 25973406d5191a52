#include "updom/cli.h"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "updom/bench.h"
#include "updom/graph.h"
#include "updom/instance.h"
#include "updom/model.h"
#include "updom/oracle.h"
#include "updom/solver.h"

namespace updom {
namespace {

struct GlobalFlags {
  std::string formulation = "f1";
  double time_limit = 10000.0;
  int jobs = 1;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string out_path;
  bool warm_start = false;
};

InstanceSpec spec_with_seed(std::string_view text, const GlobalFlags& flags) {
  InstanceSpec spec = parse_instance_spec(text);
  if (flags.seed_given && text.find("seed=") == std::string_view::npos) {
    spec.seed = flags.seed;
  }
  return spec;
}

// A path that exists is read as a graph file, anything else as a spec string.
Graph load_input(const std::string& input, const GlobalFlags& flags) {
  if (std::filesystem::is_regular_file(input)) return read_graph_file(input);
  return generate(spec_with_seed(input, flags));
}

// Writes to --out when given, otherwise to `out`.
void emit(const std::string& text, const GlobalFlags& flags, std::ostream& out) {
  if (flags.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(flags.out_path, std::ios::binary);
  if (!file) throw ParseError("cannot open '" + flags.out_path + "' for writing");
  file << text;
  if (!file.flush()) throw ParseError("write to '" + flags.out_path + "' failed");
}

int cmd_generate(const std::string& spec_text, const GlobalFlags& flags, std::ostream& out) {
  const Graph g = generate(spec_with_seed(spec_text, flags));
  emit(to_text(g), flags, out);
  return kExitOk;
}

std::string model_summary(const LinearModel& m) {
  std::ostringstream os;
  os << formulation_name(m.formulation()) << " vars=" << m.num_variables()
     << " cons=" << m.num_constraints();
  return os.str();
}

int cmd_solve(const std::string& input, const GlobalFlags& flags, std::ostream& out) {
  const Graph g = load_input(input, flags);
  out << std::fixed << std::setprecision(6);
  if (flags.formulation == "oracle") {
    const auto start = std::chrono::steady_clock::now();
    const GammaCertificate cert = gamma_oracle(g);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out << "oracle n=" << g.n() << " subsets=" << (std::int64_t{1} << g.n()) << '\n'
        << "status: optimal\n"
        << "objective: " << cert.gamma << '\n'
        << "witness: " << cert.witness << '\n'
        << "nodes: " << (std::int64_t{1} << g.n()) << '\n'
        << "elapsed: " << elapsed << '\n';
    return kExitOk;
  }

  const Formulation f = formulation_from_flag(flags.formulation);
  const LinearModel model = build_model(g, f);
  SolveOptions options;
  options.time_limit_seconds = flags.time_limit;
  if (flags.warm_start) options.warm_start = encode(g, greedy_minimal_dominating(g), f);
  const SolveResult result = solve(model, options);

  out << model_summary(model) << '\n';
  out << "status: " << status_name(result.status) << '\n';
  out << "objective: " << (result.objective ? std::to_string(*result.objective) : "-")
      << '\n';
  out << "witness: ";
  if (result.assignment) {
    out << decode(model, *result.assignment) << '\n';
  } else {
    out << "-\n";
  }
  out << "nodes: " << result.nodes_explored << '\n';
  out << "elapsed: " << result.elapsed_seconds << '\n';

  switch (result.status) {
    case SolveStatus::kOptimal:
      return kExitOk;
    case SolveStatus::kTimeLimit:
      return kExitTimeLimit;
    case SolveStatus::kInfeasible:
      return kExitInfeasible;
  }
  return kExitInfeasible;
}

int cmd_verify(const std::vector<std::string>& patterns, const GlobalFlags& flags,
               std::ostream& out) {
  const auto& use = patterns.empty() ? default_verify_patterns() : patterns;
  std::vector<InstanceSpec> instances;
  const std::vector<std::uint64_t> seeds{flags.seed};
  for (const auto& pattern : use) {
    auto specs = expand_instance_pattern(pattern, seeds);
    if (specs.empty()) throw UsageError("pattern '" + pattern + "' has no valid instances");
    instances.insert(instances.end(), specs.begin(), specs.end());
  }
  const auto rows = run_verify(instances, flags.time_limit, flags.jobs);
  write_verify_table(out, rows);
  const auto failures = std::count_if(rows.begin(), rows.end(),
                                      [](const VerifyRow& r) { return !r.match; });
  out << rows.size() - failures << "/" << rows.size() << " instances match\n";
  return failures == 0 ? kExitOk : kExitMismatch;
}

int cmd_bench(const std::string& config_path, const GlobalFlags& flags, std::ostream& out,
              std::ostream& err) {
  BenchConfig config;
  if (config_path.empty()) {
    config = parse_bench_config_text(default_bench_config_text());
  } else {
    std::ifstream in(config_path);
    if (!in) throw ParseError("cannot open config '" + config_path + "'");
    try {
      config = parse_bench_config(in);
    } catch (const ParseError& e) {
      throw ParseError(e.detail(), e.line(), config_path);
    }
  }
  const auto rows = run_bench(config, flags.jobs);
  std::ostringstream csv;
  write_bench_csv(csv, rows);
  emit(csv.str(), flags, out);
  const auto mismatches =
      std::count_if(rows.begin(), rows.end(), [](const BenchRow& r) { return !r.match; });
  if (!flags.out_path.empty()) {
    err << rows.size() << " rows written to " << flags.out_path << '\n';
  }
  if (mismatches > 0) {
    err << mismatches << " rows disagree with the closed form\n";
    return kExitMismatch;
  }
  return kExitOk;
}

int cmd_export(const std::string& input, const GlobalFlags& flags, std::ostream& out,
               std::ostream& err) {
  const Graph g = load_input(input, flags);
  const LinearModel model = build_model(g, formulation_from_flag(flags.formulation));
  emit(export_lp(model), flags, out);
  if (!flags.out_path.empty()) err << model_summary(model) << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Upper domination toolkit: instance generation, binary programming "
               "models, exact solving and benchmarking"};
  app.name("updom");
  app.require_subcommand(1);

  GlobalFlags flags;
  const auto add_formulation = [&](CLI::App* cmd, bool allow_oracle) {
    auto* opt = cmd->add_option("--formulation", flags.formulation,
                                "Model to build: f1, f1-min, f2, domination" +
                                    std::string(allow_oracle ? ", oracle" : ""))
                    ->capture_default_str();
    if (allow_oracle) {
      opt->check(CLI::IsMember({"f1", "f1-min", "f2", "domination", "oracle"}));
    } else {
      opt->check(CLI::IsMember({"f1", "f1-min", "f2", "domination"}));
    }
  };
  const auto add_time_limit = [&](CLI::App* cmd) {
    cmd->add_option("--time-limit", flags.time_limit, "Per-solve limit in seconds")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };
  const auto add_seed = [&](CLI::App* cmd) {
    cmd->add_option("--seed", flags.seed, "Seed for random families without seed=S")
        ->each([&](const std::string&) { flags.seed_given = true; });
  };
  const auto add_jobs = [&](CLI::App* cmd) {
    cmd->add_option("--jobs", flags.jobs, "Worker threads")
        ->check(CLI::Range(1, 1024))
        ->capture_default_str();
  };

  std::string input;
  std::string config_path;
  std::vector<std::string> patterns;

  auto* generate_cmd = app.add_subcommand("generate", "Write an instance in graph text format");
  generate_cmd->add_option("spec", input, "family:p1,p2[,seed=S]")->required();
  generate_cmd->add_option("--out", flags.out_path, "Output path (default stdout)");
  add_seed(generate_cmd);

  auto* solve_cmd = app.add_subcommand("solve", "Solve a graph file or instance spec");
  solve_cmd->add_option("input", input, "Graph file or family:p1,p2[,seed=S]")->required();
  add_formulation(solve_cmd, true);
  add_time_limit(solve_cmd);
  add_seed(solve_cmd);
  solve_cmd->add_flag("--warm-start", flags.warm_start,
                      "Seed the search with a greedy minimal dominating set");

  auto* verify_cmd = app.add_subcommand(
      "verify", "Check oracle, F1 and F2 against closed-form upper domination numbers");
  verify_cmd->add_option("patterns", patterns,
                         "family:ranges patterns, e.g. bishopkxk:2..5 (default: all)");
  add_time_limit(verify_cmd);
  add_jobs(verify_cmd);
  add_seed(verify_cmd);

  auto* bench_cmd = app.add_subcommand("bench", "Run a benchmark config and emit CSV");
  bench_cmd->add_option("config", config_path, "key=value config (default: built-in)");
  bench_cmd->add_option("--out", flags.out_path, "CSV path (default stdout)");
  add_jobs(bench_cmd);

  auto* export_cmd = app.add_subcommand("export", "Write a model in LP format");
  export_cmd->add_option("input", input, "Graph file or family:p1,p2[,seed=S]")->required();
  export_cmd->add_option("--out", flags.out_path, "Output path (default stdout)");
  add_formulation(export_cmd, false);
  add_seed(export_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (generate_cmd->parsed()) return cmd_generate(input, flags, out);
    if (solve_cmd->parsed()) return cmd_solve(input, flags, out);
    if (verify_cmd->parsed()) return cmd_verify(patterns, flags, out);
    if (bench_cmd->parsed()) return cmd_bench(config_path, flags, out, err);
    if (export_cmd->parsed()) return cmd_export(input, flags, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace updom

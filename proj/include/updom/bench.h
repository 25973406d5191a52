#ifndef UPDOM_BENCH_H_
#define UPDOM_BENCH_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "updom/instance.h"
#include "updom/oracle.h"
#include "updom/solver.h"

namespace updom {

// What produced a benchmark row.
enum class Method { kF1, kF1Min, kF2, kOracle };

std::string_view method_name(Method m);  // F1, F1-min, F2, oracle
// Accepts f1, f1-min, f2, oracle (case as in the CLI flags).
Method method_from_flag(std::string_view flag);

// Expands a pattern such as "gen_petersen:3..8,1..3" or
// "erdos_renyi:20..30,4..6" into concrete specs: each parameter is an integer
// or an inclusive range a..b, combined as a cartesian product with the first
// parameter outermost. Combinations that violate the family's parameter
// bounds are dropped. Random families without an explicit ",seed=S" are
// replicated once per entry of `seeds`.
std::vector<InstanceSpec> expand_instance_pattern(std::string_view pattern,
                                                  const std::vector<std::uint64_t>& seeds);

// Flat key=value text, '#' starts a comment:
//   time_limit=<seconds>
//   formulations=f1,f1-min,f2,oracle
//   seeds=1,2,3
//   repetitions=<n>        elapsed column reports the fastest repetition
//   warm_start=<0|1>
//   oracle_max_vertices=<n>
//   instance=<pattern>     repeatable, see expand_instance_pattern
struct BenchConfig {
  double time_limit_seconds = 10000.0;
  std::vector<Method> methods = {Method::kF1, Method::kF1Min, Method::kF2, Method::kOracle};
  std::vector<std::uint64_t> seeds = {1};
  int repetitions = 1;
  bool warm_start = false;
  Vertex oracle_max_vertices = kOracleMaxVertices;
  std::vector<std::string> patterns;
  std::vector<InstanceSpec> instances;  // expanded from patterns, config order
};

// Throws ParseError naming the offending key and line.
BenchConfig parse_bench_config(std::istream& in);
BenchConfig parse_bench_config_text(std::string_view text);

// The shipped desk-scale configuration (also in configs/default.cfg).
std::string_view default_bench_config_text();

struct BenchRow {
  std::string family;
  std::string params;
  Vertex n = 0;
  std::int64_t m = 0;
  Method method = Method::kF1;
  std::optional<std::int64_t> objective;
  SolveStatus status = SolveStatus::kInfeasible;
  std::int64_t nodes = 0;
  double elapsed_seconds = 0.0;
  std::optional<std::int64_t> closed_form;
  bool match = true;
};

inline constexpr std::string_view kBenchCsvHeader =
    "family,params,n,m,formulation,objective,status,nodes,elapsed,closed_form,match";

// match = closed form absent, or status optimal and objective equal to it.
bool row_matches(const BenchRow& row);

// One row per (instance, method) in config order. Oracle rows are emitted
// only for instances within oracle_max_vertices. Independent solves run on
// `jobs` worker threads; row order does not depend on completion order.
std::vector<BenchRow> run_bench(const BenchConfig& config, int jobs = 1);

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

// Runs one method on one graph, timing only the solve / oracle call.
BenchRow run_method(const InstanceSpec& spec, const Graph& g, Method method,
                    double time_limit_seconds, bool warm_start = false,
                    Vertex oracle_max_vertices = kOracleMaxVertices);

struct VerifyRow {
  InstanceSpec spec;
  Vertex n = 0;
  std::int64_t m = 0;
  std::optional<std::int64_t> closed_form;
  std::optional<BenchRow> oracle;  // absent when n exceeds the oracle cap
  BenchRow f1;
  BenchRow f2;
  bool match = false;
};

// Patterns checked by `verify` with no arguments: every family with a closed
// form, over ranges that finish in minutes.
std::vector<std::string> default_verify_patterns();

// For each instance: oracle (when small enough), F1 and F2, all required to
// be optimal and equal to the closed form (or to each other when the family
// has none).
std::vector<VerifyRow> run_verify(const std::vector<InstanceSpec>& instances,
                                  double time_limit_seconds, int jobs = 1);

void write_verify_table(std::ostream& out, const std::vector<VerifyRow>& rows);

}  // namespace updom

#endif  // UPDOM_BENCH_H_

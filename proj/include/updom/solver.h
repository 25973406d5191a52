#ifndef UPDOM_SOLVER_H_
#define UPDOM_SOLVER_H_

#include <cstdint>
#include <optional>
#include <string_view>

#include "updom/model.h"

namespace updom {

enum class SolveStatus { kOptimal, kInfeasible, kTimeLimit };

std::string_view status_name(SolveStatus s);  // optimal | infeasible | time_limit

struct SolveOptions {
  double time_limit_seconds = 10000.0;
  // Feasible starting incumbent; the search then only looks for strictly
  // better solutions.
  std::optional<Assignment> warm_start;
};

struct SolveResult {
  SolveStatus status = SolveStatus::kInfeasible;
  // Objective of `assignment` in the model's own sense; set when an
  // incumbent exists.
  std::optional<std::int64_t> objective;
  std::optional<Assignment> assignment;
  std::int64_t nodes_explored = 0;
  double elapsed_seconds = 0.0;
};

// Exact depth-first branch-and-bound for pure binary models.
//
// Every row is kept in <= form together with its minimum activity under the
// current fixings. A row whose minimum activity exceeds its rhs prunes the
// node; a row whose slack is smaller than one of its unfixed coefficients
// forces that variable (bound propagation, run to fixpoint before branching).
// Nodes are also pruned when fixed objective + positive objective mass of the
// unfixed variables cannot beat the incumbent.
//
// Branching takes the unfixed variable with the largest objective
// coefficient (in maximization form), smallest id first, and tries 1 before 0
// when maximizing and 0 before 1 when minimizing. The search is single
// threaded and fully deterministic, including nodes_explored.
//
// Throws UsageError for non-binary variables, a non-positive time limit, or
// an infeasible / mis-sized warm start.
SolveResult solve(const LinearModel& model, const SolveOptions& options = {});

}  // namespace updom

#endif  // UPDOM_SOLVER_H_

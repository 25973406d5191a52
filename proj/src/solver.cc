#include "updom/solver.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <vector>

namespace updom {

std::string_view status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::kOptimal:
      return "optimal";
    case SolveStatus::kInfeasible:
      return "infeasible";
    case SolveStatus::kTimeLimit:
      return "time_limit";
  }
  return "infeasible";
}

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::int8_t kUnfixed = -1;
constexpr std::int64_t kClockCheckInterval = 1024;
// Longer limits are treated as unlimited; keeps the deadline representable.
constexpr double kMaxTimeLimitSeconds = 1e9;

class BranchAndBound {
 public:
  BranchAndBound(const LinearModel& model, const SolveOptions& options)
      : model_(model),
        deadline_(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                     std::chrono::duration<double>(
                                         std::min(options.time_limit_seconds,
                                                  kMaxTimeLimitSeconds)))) {
    const std::size_t num_vars = model.num_variables();
    const double sign = model.sense() == Sense::kMaximize ? 1 : -1;
    objective_.resize(num_vars);
    cols_.resize(num_vars);
    value_.assign(num_vars, kUnfixed);
    for (std::size_t j = 0; j < num_vars; ++j) {
      objective_[j] = static_cast<std::int64_t>(sign) * model.variables()[j].objective;
      optimistic_rest_ += std::max<std::int64_t>(objective_[j], 0);
    }

    const auto constraints = model.constraints();
    rows_.resize(constraints.size());
    for (std::size_t r = 0; r < constraints.size(); ++r) {
      const Constraint& c = constraints[r];
      const std::int64_t flip = c.relation == Relation::kLessEqual ? 1 : -1;
      Row& row = rows_[r];
      row.rhs = flip * c.rhs;
      for (const Term& t : c.terms) {
        const std::int64_t a = flip * t.coef;
        row.terms.push_back({t.var, a});
        row.min_activity += std::min<std::int64_t>(a, 0);
        row.max_abs_coef = std::max<std::int64_t>(row.max_abs_coef, a < 0 ? -a : a);
        cols_[t.var].push_back({static_cast<VarId>(r), a});
      }
    }

    branch_order_.resize(num_vars);
    for (std::size_t j = 0; j < num_vars; ++j) branch_order_[j] = static_cast<VarId>(j);
    std::stable_sort(branch_order_.begin(), branch_order_.end(), [&](VarId a, VarId b) {
      return objective_[a] > objective_[b];
    });
    first_value_ = model.sense() == Sense::kMaximize ? 1 : 0;
    in_queue_.assign(rows_.size(), 0);
  }

  void seed_incumbent(const Assignment& a) {
    best_ = 0;
    for (std::size_t j = 0; j < a.values.size(); ++j) *best_ += objective_[j] * a.values[j];
    incumbent_ = a;
  }

  SolveResult run() {
    const auto start = Clock::now();
    bool root_ok = true;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (rows_[r].min_activity > rows_[r].rhs) root_ok = false;
      enqueue(static_cast<VarId>(r));
    }
    root_ok = root_ok && propagate();
    if (root_ok) {
      search(0);
    } else {
      nodes_ = 1;
    }

    SolveResult result;
    result.nodes_explored = nodes_;
    result.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (incumbent_) {
      result.assignment = incumbent_;
      result.objective = objective_value(model_, *incumbent_);
    }
    if (timed_out_) {
      result.status = SolveStatus::kTimeLimit;
    } else {
      result.status = incumbent_ ? SolveStatus::kOptimal : SolveStatus::kInfeasible;
    }
    return result;
  }

 private:
  struct RowTerm {
    VarId var;
    std::int64_t coef;
  };
  struct ColEntry {
    VarId row;
    std::int64_t coef;
  };
  struct Row {
    std::vector<RowTerm> terms;
    std::int64_t rhs = 0;
    // sum of fixed a*x plus min(a, 0) over unfixed terms
    std::int64_t min_activity = 0;
    std::int64_t max_abs_coef = 0;
  };

  void enqueue(VarId r) {
    if (!in_queue_[r]) {
      in_queue_[r] = 1;
      queue_.push_back(r);
    }
  }

  // Applies every row update for the fixing; returns false on a violated row.
  bool fix(VarId j, std::int8_t v) {
    value_[j] = v;
    trail_.push_back(j);
    fixed_objective_ += objective_[j] * v;
    optimistic_rest_ -= std::max<std::int64_t>(objective_[j], 0);
    bool ok = true;
    for (const ColEntry& e : cols_[j]) {
      Row& row = rows_[e.row];
      row.min_activity += e.coef * v - std::min<std::int64_t>(e.coef, 0);
      if (row.min_activity > row.rhs) ok = false;
      enqueue(e.row);
    }
    return ok;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const VarId j = trail_.back();
      trail_.pop_back();
      const std::int8_t v = value_[j];
      for (const ColEntry& e : cols_[j]) {
        rows_[e.row].min_activity -= e.coef * v - std::min<std::int64_t>(e.coef, 0);
      }
      fixed_objective_ -= objective_[j] * v;
      optimistic_rest_ += std::max<std::int64_t>(objective_[j], 0);
      value_[j] = kUnfixed;
    }
  }

  bool propagate() {
    bool ok = true;
    std::size_t head = 0;
    while (ok && head < queue_.size()) {
      const VarId r = queue_[head++];
      in_queue_[r] = 0;
      const Row& row = rows_[r];
      const std::int64_t slack = row.rhs - row.min_activity;
      if (slack >= row.max_abs_coef) continue;
      for (const RowTerm& t : row.terms) {
        if (value_[t.var] != kUnfixed) continue;
        if (t.coef > slack) {
          ok = fix(t.var, 0) && ok;
        } else if (-t.coef > slack) {
          ok = fix(t.var, 1) && ok;
        }
        if (!ok) break;
      }
    }
    for (std::size_t i = head; i < queue_.size(); ++i) in_queue_[queue_[i]] = 0;
    queue_.clear();
    return ok;
  }

  bool out_of_time() {
    if (timed_out_) return true;
    if (nodes_ % kClockCheckInterval == 1 && Clock::now() >= deadline_) timed_out_ = true;
    return timed_out_;
  }

  void search(std::size_t order_pos) {
    ++nodes_;
    if (out_of_time()) return;
    if (best_ && fixed_objective_ + optimistic_rest_ <= *best_) return;

    while (order_pos < branch_order_.size() && value_[branch_order_[order_pos]] != kUnfixed) {
      ++order_pos;
    }
    if (order_pos == branch_order_.size()) {
      if (!best_ || fixed_objective_ > *best_) {
        best_ = fixed_objective_;
        incumbent_ = Assignment{};
        incumbent_->values.assign(value_.begin(), value_.end());
      }
      return;
    }

    const VarId j = branch_order_[order_pos];
    for (std::int8_t v : {first_value_, static_cast<std::int8_t>(1 - first_value_)}) {
      const std::size_t mark = trail_.size();
      bool ok = fix(j, v);
      ok = propagate() && ok;
      if (ok) search(order_pos + 1);
      undo(mark);
      if (timed_out_) return;
    }
  }

  const LinearModel& model_;
  Clock::time_point deadline_;
  std::vector<std::int64_t> objective_;  // maximization form
  std::vector<Row> rows_;
  std::vector<std::vector<ColEntry>> cols_;
  std::vector<std::int8_t> value_;
  std::vector<VarId> trail_;
  std::vector<VarId> queue_;
  std::vector<std::uint8_t> in_queue_;
  std::vector<VarId> branch_order_;
  std::int8_t first_value_ = 1;
  std::int64_t fixed_objective_ = 0;
  std::int64_t optimistic_rest_ = 0;
  std::optional<std::int64_t> best_;
  std::optional<Assignment> incumbent_;
  std::int64_t nodes_ = 0;
  bool timed_out_ = false;
};

}  // namespace

SolveResult solve(const LinearModel& model, const SolveOptions& options) {
  if (!(options.time_limit_seconds > 0) || !std::isfinite(options.time_limit_seconds)) {
    throw UsageError("time limit must be a positive number of seconds");
  }
  for (const Variable& var : model.variables()) {
    if (var.kind != VarKind::kBinary) {
      throw UsageError("variable '" + var.name + "' is not binary");
    }
  }
  BranchAndBound bnb(model, options);
  if (options.warm_start) {
    const auto check = check_feasible(model, *options.warm_start);
    if (!check) throw UsageError("warm start violates " + check.violated);
    for (std::uint8_t v : options.warm_start->values) {
      if (v > 1) throw UsageError("warm start values must be 0 or 1");
    }
    bnb.seed_incumbent(*options.warm_start);
  }
  return bnb.run();
}

}  // namespace updom

#ifndef UPDOM_MODEL_H_
#define UPDOM_MODEL_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "updom/graph.h"

namespace updom {

using VarId = std::int32_t;

enum class Sense { kMaximize, kMinimize };
enum class Relation { kLessEqual, kGreaterEqual };
enum class VarKind { kBinary, kInteger };

// Which builder produced a model. kCustom models have no vertex semantics.
enum class Formulation { kDomination, kF1, kF1Min, kF2, kCustom };

std::string_view formulation_name(Formulation f);  // "F1", "F1-min", ...
// Accepts the CLI spellings: f1, f1-min, f2, domination.
Formulation formulation_from_flag(std::string_view flag);

struct Term {
  VarId var;
  std::int64_t coef;
  friend bool operator==(const Term&, const Term&) = default;
};

struct Variable {
  std::string name;
  VarKind kind = VarKind::kBinary;
  std::int64_t objective = 0;
  friend bool operator==(const Variable&, const Variable&) = default;
};

struct Constraint {
  std::string name;
  std::vector<Term> terms;  // sparse row, no zero coefficients, unique vars
  Relation relation = Relation::kLessEqual;
  std::int64_t rhs = 0;
  friend bool operator==(const Constraint&, const Constraint&) = default;
};

// Pure-integer linear program over (mostly) binary variables.
class LinearModel {
 public:
  explicit LinearModel(Sense sense = Sense::kMaximize,
                       Formulation formulation = Formulation::kCustom,
                       Vertex num_vertices = 0)
      : sense_(sense), formulation_(formulation), num_vertices_(num_vertices) {}

  // Throws UsageError on a duplicate name.
  VarId add_variable(std::string name, std::int64_t objective = 0,
                     VarKind kind = VarKind::kBinary);
  // Zero coefficients are dropped and repeated variables merged. Throws
  // UsageError on unknown variables or a duplicate row name.
  void add_constraint(std::string name, std::vector<Term> terms, Relation relation,
                      std::int64_t rhs);

  Sense sense() const { return sense_; }
  Formulation formulation() const { return formulation_; }
  // For graph formulations, variables [0, num_vertices) are x_0 .. x_{n-1}.
  Vertex num_vertices() const { return num_vertices_; }

  std::span<const Variable> variables() const { return variables_; }
  std::span<const Constraint> constraints() const { return constraints_; }
  std::size_t num_variables() const { return variables_.size(); }
  std::size_t num_constraints() const { return constraints_.size(); }
  std::optional<VarId> find_variable(std::string_view name) const;

  // Structural equality (sense, variables, rows); ignores formulation tags.
  bool same_program(const LinearModel& other) const;

 private:
  Sense sense_;
  Formulation formulation_;
  Vertex num_vertices_;
  std::vector<Variable> variables_;
  std::vector<Constraint> constraints_;
  std::unordered_map<std::string, VarId> by_name_;
  std::unordered_map<std::string, std::size_t> row_by_name_;
};

// One 0/1 value per model variable, indexed by VarId.
struct Assignment {
  std::vector<std::uint8_t> values;
  friend bool operator==(const Assignment&, const Assignment&) = default;
};

enum class Provenance { kOracle, kF1, kF2, kClosedForm };
std::string_view provenance_name(Provenance p);

// Upper domination value with a witness. Valid when the witness is a minimal
// dominating set of size gamma.
struct GammaCertificate {
  std::int64_t gamma = 0;
  VertexSet witness;
  Provenance provenance = Provenance::kOracle;
};

bool is_valid_certificate(const Graph& g, const GammaCertificate& cert);

// min sum x_v  s.t.  sum_{w in N[v]} x_w >= 1 for all v. Rows are c{v}.
LinearModel build_domination(const Graph& g);

// Upper domination, first formulation: variables x_v, z_v. Rows dom{v},
// two{v}, priv{v} and, when include_redundant, red{v}.
LinearModel build_f1(const Graph& g, bool include_redundant = true);

// Upper domination, second formulation: variables x_v and y_{v,w} for every
// w in N[v] (named y{v}_{w}). Rows dom{v}, own{v}, only{v}_{w}.
LinearModel build_f2(const Graph& g);

// Dispatches on kDomination / kF1 / kF1Min / kF2.
LinearModel build_model(const Graph& g, Formulation f);

struct Feasibility {
  bool feasible = true;
  std::string violated;  // name of the first violated row when infeasible
  explicit operator bool() const { return feasible; }
};

// Exact integer evaluation of every row in order. Throws UsageError when the
// assignment does not cover exactly the model's variables.
Feasibility check_feasible(const LinearModel& m, const Assignment& a);

std::int64_t objective_value(const LinearModel& m, const Assignment& a);

// Witness assignments built from a minimal dominating set. Both throw
// UsageError when s is not minimal dominating.
Assignment encode_f1(const Graph& g, const VertexSet& s);
Assignment encode_f2(const Graph& g, const VertexSet& s);
// x from membership only; valid for the domination model.
Assignment encode_domination(const Graph& g, const VertexSet& s);
// Dispatching encoder matched to build_model(g, f).
Assignment encode(const Graph& g, const VertexSet& s, Formulation f);

// { v : x_v = 1 }. Throws UsageError when `a` is infeasible for `m` or the
// model has no vertex semantics.
VertexSet decode(const LinearModel& m, const Assignment& a);

// LP-format text. Byte-deterministic for a given model.
std::string export_lp(const LinearModel& m);

}  // namespace updom

#endif  // UPDOM_MODEL_H_

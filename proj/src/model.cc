#include "updom/model.h"

#include <algorithm>
#include <map>
#include <sstream>

namespace updom {

std::string_view formulation_name(Formulation f) {
  switch (f) {
    case Formulation::kDomination:
      return "domination";
    case Formulation::kF1:
      return "F1";
    case Formulation::kF1Min:
      return "F1-min";
    case Formulation::kF2:
      return "F2";
    case Formulation::kCustom:
      return "custom";
  }
  return "custom";
}

Formulation formulation_from_flag(std::string_view flag) {
  if (flag == "f1" || flag == "F1") return Formulation::kF1;
  if (flag == "f1-min" || flag == "F1-min") return Formulation::kF1Min;
  if (flag == "f2" || flag == "F2") return Formulation::kF2;
  if (flag == "domination") return Formulation::kDomination;
  throw UsageError("unknown formulation '" + std::string(flag) +
                   "' (expected f1, f1-min, f2 or domination)");
}

std::string_view provenance_name(Provenance p) {
  switch (p) {
    case Provenance::kOracle:
      return "oracle";
    case Provenance::kF1:
      return "F1";
    case Provenance::kF2:
      return "F2";
    case Provenance::kClosedForm:
      return "closed_form";
  }
  return "oracle";
}

bool is_valid_certificate(const Graph& g, const GammaCertificate& cert) {
  return static_cast<std::int64_t>(cert.witness.size()) == cert.gamma &&
         is_minimal_dominating(g, cert.witness);
}

VarId LinearModel::add_variable(std::string name, std::int64_t objective, VarKind kind) {
  const auto id = static_cast<VarId>(variables_.size());
  if (!by_name_.emplace(name, id).second) {
    throw UsageError("duplicate variable name '" + name + "'");
  }
  variables_.push_back(Variable{std::move(name), kind, objective});
  return id;
}

void LinearModel::add_constraint(std::string name, std::vector<Term> terms,
                                 Relation relation, std::int64_t rhs) {
  std::map<VarId, std::int64_t> merged;
  for (const Term& t : terms) {
    if (t.var < 0 || static_cast<std::size_t>(t.var) >= variables_.size()) {
      throw UsageError("constraint '" + name + "' references undeclared variable " +
                       std::to_string(t.var));
    }
    merged[t.var] += t.coef;
  }
  std::vector<Term> row;
  row.reserve(merged.size());
  for (auto [var, coef] : merged) {
    if (coef != 0) row.push_back(Term{var, coef});
  }
  if (!row_by_name_.emplace(name, constraints_.size()).second) {
    throw UsageError("duplicate constraint name '" + name + "'");
  }
  constraints_.push_back(Constraint{std::move(name), std::move(row), relation, rhs});
}

std::optional<VarId> LinearModel::find_variable(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

bool LinearModel::same_program(const LinearModel& other) const {
  return sense_ == other.sense_ && variables_ == other.variables_ &&
         constraints_ == other.constraints_;
}

namespace {

std::string vname(char prefix, Vertex v) { return prefix + std::to_string(v); }

std::string yname(Vertex v, Vertex w) {
  return "y" + std::to_string(v) + "_" + std::to_string(w);
}

// Terms +coef * x_w for w in N[v].
std::vector<Term> closed_sum(const Graph& g, Vertex v, VarId x_base, std::int64_t coef) {
  std::vector<Term> terms{{x_base + v, coef}};
  for (Vertex w : g.neighbors(v)) terms.push_back({x_base + w, coef});
  return terms;
}

void add_x_variables(LinearModel& m, const Graph& g, std::int64_t objective) {
  for (Vertex v = 0; v < g.n(); ++v) m.add_variable(vname('x', v), objective);
}

}  // namespace

LinearModel build_domination(const Graph& g) {
  LinearModel m(Sense::kMinimize, Formulation::kDomination, g.n());
  add_x_variables(m, g, 1);
  for (Vertex v = 0; v < g.n(); ++v) {
    m.add_constraint(vname('c', v), closed_sum(g, v, 0, 1), Relation::kGreaterEqual, 1);
  }
  return m;
}

LinearModel build_f1(const Graph& g, bool include_redundant) {
  LinearModel m(Sense::kMaximize,
                include_redundant ? Formulation::kF1 : Formulation::kF1Min, g.n());
  const Vertex n = g.n();
  add_x_variables(m, g, 1);
  for (Vertex v = 0; v < n; ++v) m.add_variable(vname('z', v), 0);
  const VarId z = n;

  for (Vertex v = 0; v < n; ++v) {
    m.add_constraint("dom" + std::to_string(v), closed_sum(g, v, 0, 1),
                     Relation::kGreaterEqual, 1);
  }
  for (Vertex v = 0; v < n; ++v) {
    auto terms = closed_sum(g, v, 0, 1);
    terms.push_back({z + v, -static_cast<std::int64_t>(g.degree(v))});
    m.add_constraint("two" + std::to_string(v), std::move(terms), Relation::kLessEqual, 1);
  }
  for (Vertex v = 0; v < n; ++v) {
    auto terms = closed_sum(g, v, z, 1);
    terms.push_back({v, 1});
    m.add_constraint("priv" + std::to_string(v), std::move(terms), Relation::kLessEqual,
                     g.degree(v) + 1);
  }
  if (include_redundant) {
    for (Vertex v = 0; v < n; ++v) {
      auto terms = closed_sum(g, v, 0, -1);
      terms.push_back({z + v, 1});
      m.add_constraint("red" + std::to_string(v), std::move(terms), Relation::kLessEqual,
                       -1);
    }
  }
  return m;
}

LinearModel build_f2(const Graph& g) {
  LinearModel m(Sense::kMaximize, Formulation::kF2, g.n());
  const Vertex n = g.n();
  add_x_variables(m, g, 1);
  // y ids grouped by owner v, w in sorted N[v].
  std::vector<std::vector<std::pair<Vertex, VarId>>> y(n);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : closed_neighborhood(g, v)) {
      y[v].emplace_back(w, m.add_variable(yname(v, w), 0));
    }
  }

  for (Vertex v = 0; v < n; ++v) {
    m.add_constraint("dom" + std::to_string(v), closed_sum(g, v, 0, 1),
                     Relation::kGreaterEqual, 1);
  }
  for (Vertex v = 0; v < n; ++v) {
    std::vector<Term> terms{{v, 1}};
    for (auto [w, id] : y[v]) terms.push_back({id, -1});
    m.add_constraint("own" + std::to_string(v), std::move(terms), Relation::kLessEqual, 0);
  }
  for (Vertex v = 0; v < n; ++v) {
    for (auto [w, id] : y[v]) {
      std::vector<Term> terms{{id, g.degree(w)}};
      if (w != v) terms.push_back({w, 1});
      for (Vertex u : g.neighbors(w)) {
        if (u != v) terms.push_back({u, 1});
      }
      m.add_constraint("only" + std::to_string(v) + "_" + std::to_string(w),
                       std::move(terms), Relation::kLessEqual, g.degree(w));
    }
  }
  return m;
}

LinearModel build_model(const Graph& g, Formulation f) {
  switch (f) {
    case Formulation::kDomination:
      return build_domination(g);
    case Formulation::kF1:
      return build_f1(g, true);
    case Formulation::kF1Min:
      return build_f1(g, false);
    case Formulation::kF2:
      return build_f2(g);
    case Formulation::kCustom:
      break;
  }
  throw UsageError("no builder for a custom formulation");
}

Feasibility check_feasible(const LinearModel& m, const Assignment& a) {
  if (a.values.size() != m.num_variables()) {
    throw UsageError("assignment has " + std::to_string(a.values.size()) +
                     " values for a model with " + std::to_string(m.num_variables()) +
                     " variables");
  }
  for (const Constraint& row : m.constraints()) {
    std::int64_t activity = 0;
    for (const Term& t : row.terms) activity += t.coef * a.values[t.var];
    const bool ok = row.relation == Relation::kLessEqual ? activity <= row.rhs
                                                         : activity >= row.rhs;
    if (!ok) return Feasibility{false, row.name};
  }
  return Feasibility{};
}

std::int64_t objective_value(const LinearModel& m, const Assignment& a) {
  if (a.values.size() != m.num_variables()) {
    throw UsageError("assignment does not match the model's variables");
  }
  std::int64_t total = 0;
  for (std::size_t j = 0; j < m.num_variables(); ++j) {
    total += m.variables()[j].objective * a.values[j];
  }
  return total;
}

namespace {

void require_minimal(const Graph& g, const VertexSet& s) {
  if (!is_minimal_dominating(g, s)) {
    std::ostringstream os;
    os << "vertex set " << s << " is not a minimal dominating set";
    throw UsageError(os.str());
  }
}

int closed_hits(const Graph& g, const VertexSet& s, Vertex w) {
  int hits = s.contains(w) ? 1 : 0;
  for (Vertex u : g.neighbors(w)) hits += s.contains(u) ? 1 : 0;
  return hits;
}

}  // namespace

Assignment encode_domination(const Graph& g, const VertexSet& s) {
  require_valid(g, s);
  Assignment a;
  a.values.assign(g.n(), 0);
  for (Vertex v : s) a.values[v] = 1;
  return a;
}

Assignment encode_f1(const Graph& g, const VertexSet& s) {
  require_minimal(g, s);
  const Vertex n = g.n();
  Assignment a;
  a.values.assign(2 * static_cast<std::size_t>(n), 0);
  for (Vertex v : s) a.values[v] = 1;
  // z_w = 0 exactly when N[w] meets S in a single vertex.
  for (Vertex w = 0; w < n; ++w) a.values[n + w] = closed_hits(g, s, w) == 1 ? 0 : 1;
  return a;
}

Assignment encode_f2(const Graph& g, const VertexSet& s) {
  require_minimal(g, s);
  const Vertex n = g.n();
  Assignment a;
  a.values.assign(2 * static_cast<std::size_t>(n) + 2 * static_cast<std::size_t>(g.m()),
                  0);
  for (Vertex v : s) a.values[v] = 1;
  std::size_t id = n;
  for (Vertex v = 0; v < n; ++v) {
    // r(v) = smallest private neighbor; y layout matches build_f2.
    const Vertex r = s.contains(v) ? private_neighbors(g, s, v).members().front() : -1;
    for (Vertex w : closed_neighborhood(g, v)) {
      a.values[id++] = (w == r) ? 1 : 0;
    }
  }
  return a;
}

Assignment encode(const Graph& g, const VertexSet& s, Formulation f) {
  switch (f) {
    case Formulation::kDomination:
      return encode_domination(g, s);
    case Formulation::kF1:
    case Formulation::kF1Min:
      return encode_f1(g, s);
    case Formulation::kF2:
      return encode_f2(g, s);
    case Formulation::kCustom:
      break;
  }
  throw UsageError("no encoder for a custom formulation");
}

VertexSet decode(const LinearModel& m, const Assignment& a) {
  if (m.formulation() == Formulation::kCustom) {
    throw UsageError("cannot decode a model without vertex variables");
  }
  if (auto check = check_feasible(m, a); !check) {
    throw UsageError("cannot decode an infeasible assignment (violates " +
                     check.violated + ")");
  }
  std::vector<Vertex> members;
  for (Vertex v = 0; v < m.num_vertices(); ++v) {
    if (a.values[v] == 1) members.push_back(v);
  }
  return VertexSet(std::move(members));
}

namespace {

void write_terms(std::ostream& os, std::span<const Term> terms, const LinearModel& m) {
  bool first = true;
  for (const Term& t : terms) {
    const std::int64_t mag = t.coef < 0 ? -t.coef : t.coef;
    if (first) {
      if (t.coef < 0) os << "- ";
    } else {
      os << (t.coef < 0 ? " - " : " + ");
    }
    if (mag != 1) os << mag << ' ';
    os << m.variables()[t.var].name;
    first = false;
  }
  if (first) {
    // LP rows need at least one variable.
    os << "0 " << (m.num_variables() > 0 ? m.variables()[0].name : "x0");
  }
}

}  // namespace

std::string export_lp(const LinearModel& m) {
  std::ostringstream os;
  os << (m.sense() == Sense::kMaximize ? "Maximize" : "Minimize") << '\n';
  std::vector<Term> objective;
  for (std::size_t j = 0; j < m.num_variables(); ++j) {
    if (m.variables()[j].objective != 0) {
      objective.push_back({static_cast<VarId>(j), m.variables()[j].objective});
    }
  }
  os << " obj: ";
  write_terms(os, objective, m);
  os << "\nSubject To\n";
  for (const Constraint& row : m.constraints()) {
    os << ' ' << row.name << ": ";
    write_terms(os, row.terms, m);
    os << (row.relation == Relation::kLessEqual ? " <= " : " >= ") << row.rhs << '\n';
  }
  bool has_general = false;
  os << "Binary\n";
  for (const Variable& var : m.variables()) {
    if (var.kind == VarKind::kBinary) {
      os << ' ' << var.name << '\n';
    } else {
      has_general = true;
    }
  }
  if (has_general) {
    os << "General\n";
    for (const Variable& var : m.variables()) {
      if (var.kind == VarKind::kInteger) os << ' ' << var.name << '\n';
    }
  }
  os << "End\n";
  return os.str();
}

}  // namespace updom

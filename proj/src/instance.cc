#include "updom/instance.h"

#include <array>
#include <charconv>
#include <cstdlib>
#include <random>
#include <utility>

namespace updom {
namespace {

struct FamilyInfo {
  Family family;
  std::string_view name;
};

constexpr std::array<FamilyInfo, 12> kFamilies = {{
    {Family::kComplete, "complete"},
    {Family::kCompleteBipartite, "complete_bipartite"},
    {Family::kQueen2xk, "queen2xk"},
    {Family::kRook2xk, "rook2xk"},
    {Family::kRookKxK, "rookkxk"},
    {Family::kBishopKxK, "bishopkxk"},
    {Family::kKnightKxK, "knightkxk"},
    {Family::kFlowerSnark, "flower_snark"},
    {Family::kGenPetersen, "gen_petersen"},
    {Family::kErdosRenyi, "erdos_renyi"},
    {Family::kCycle, "cycle"},
    {Family::kPath, "path"},
}};

// Keeps generated graphs well inside 32-bit vertex ids.
constexpr std::int64_t kMaxVertices = std::int64_t{1} << 22;

using Edges = std::vector<std::pair<Vertex, Vertex>>;

[[noreturn]] void fail(const InstanceSpec& spec, const std::string& bound) {
  throw UsageError(std::string(family_name(spec.family)) + ": " + bound);
}

void require_arity(const InstanceSpec& spec, std::size_t lo, std::size_t hi,
                   std::string_view usage) {
  const std::size_t count = spec.params.size();
  if (count < lo || count > hi) {
    fail(spec, "expected parameters " + std::string(usage) + ", got " +
                   std::to_string(count));
  }
}

void require_vertex_budget(const InstanceSpec& spec, std::int64_t vertices) {
  if (vertices > kMaxVertices) {
    fail(spec, "instance would have " + std::to_string(vertices) +
                   " vertices (limit " + std::to_string(kMaxVertices) + ")");
  }
}

// Board dimensions for the 2 x k families: [k] means 2 x k.
std::pair<std::int64_t, std::int64_t> two_row_board(const InstanceSpec& spec) {
  if (spec.params.size() == 1) return {2, spec.params[0]};
  return {spec.params[0], spec.params[1]};
}

template <typename Attacks>
Graph board_graph(std::int64_t rows, std::int64_t cols, Attacks attacks) {
  Edges edges;
  const auto id = [cols](std::int64_t r, std::int64_t c) {
    return static_cast<Vertex>(r * cols + c);
  };
  for (std::int64_t r1 = 0; r1 < rows; ++r1) {
    for (std::int64_t c1 = 0; c1 < cols; ++c1) {
      for (std::int64_t r2 = r1; r2 < rows; ++r2) {
        for (std::int64_t c2 = 0; c2 < cols; ++c2) {
          if (id(r2, c2) <= id(r1, c1)) continue;
          if (attacks(std::llabs(r1 - r2), std::llabs(c1 - c2))) {
            edges.emplace_back(id(r1, c1), id(r2, c2));
          }
        }
      }
    }
  }
  return Graph::FromEdges(static_cast<Vertex>(rows * cols), edges);
}

bool queen_attacks(std::int64_t dr, std::int64_t dc) {
  return dr == 0 || dc == 0 || dr == dc;
}
bool rook_attacks(std::int64_t dr, std::int64_t dc) { return dr == 0 || dc == 0; }
bool bishop_attacks(std::int64_t dr, std::int64_t dc) { return dr == dc && dr != 0; }
bool knight_attacks(std::int64_t dr, std::int64_t dc) {
  return (dr == 1 && dc == 2) || (dr == 2 && dc == 1);
}

Graph complete_graph(std::int64_t n) {
  Edges edges;
  for (std::int64_t u = 0; u < n; ++u) {
    for (std::int64_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::FromEdges(static_cast<Vertex>(n), edges);
}

Graph complete_bipartite_graph(std::int64_t m, std::int64_t n) {
  Edges edges;
  for (std::int64_t u = 0; u < m; ++u) {
    for (std::int64_t v = 0; v < n; ++v) edges.emplace_back(u, m + v);
  }
  return Graph::FromEdges(static_cast<Vertex>(m + n), edges);
}

Graph generalized_petersen(std::int64_t n, std::int64_t k) {
  Edges edges;
  for (std::int64_t i = 0; i < n; ++i) {
    edges.emplace_back(i, (i + 1) % n);
    edges.emplace_back(i, n + i);
    edges.emplace_back(n + i, n + (i + k) % n);
  }
  return Graph::FromEdges(static_cast<Vertex>(2 * n), edges);
}

// Isaacs flower snark: k claws A_i -> {B_i, C_i, D_i}, the B_i on a k-cycle,
// and the C/D paths closed crosswise into one 2k-cycle.
Graph flower_snark(std::int64_t k) {
  const auto a = [](std::int64_t i) { return i; };
  const auto b = [k](std::int64_t i) { return k + i; };
  const auto c = [k](std::int64_t i) { return 2 * k + i; };
  const auto d = [k](std::int64_t i) { return 3 * k + i; };
  Edges edges;
  for (std::int64_t i = 0; i < k; ++i) {
    edges.emplace_back(a(i), b(i));
    edges.emplace_back(a(i), c(i));
    edges.emplace_back(a(i), d(i));
    edges.emplace_back(b(i), b((i + 1) % k));
    if (i + 1 < k) {
      edges.emplace_back(c(i), c(i + 1));
      edges.emplace_back(d(i), d(i + 1));
    }
  }
  edges.emplace_back(c(k - 1), d(0));
  edges.emplace_back(d(k - 1), c(0));
  return Graph::FromEdges(static_cast<Vertex>(4 * k), edges);
}

// G(n, p) with p = d / n. The Bernoulli draw compares a uniform integer in
// [0, n) against d, so p is represented exactly.
Graph erdos_renyi(std::int64_t n, std::int64_t d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> draw(0, n - 1);
  Edges edges;
  for (std::int64_t u = 0; u < n; ++u) {
    for (std::int64_t v = u + 1; v < n; ++v) {
      if (draw(rng) < d) edges.emplace_back(u, v);
    }
  }
  return Graph::FromEdges(static_cast<Vertex>(n), edges);
}

Graph cycle_graph(std::int64_t n) {
  Edges edges;
  for (std::int64_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::FromEdges(static_cast<Vertex>(n), edges);
}

Graph path_graph(std::int64_t n) {
  Edges edges;
  for (std::int64_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::FromEdges(static_cast<Vertex>(n), edges);
}

std::int64_t parse_int(std::string_view token, std::string_view what) {
  std::int64_t value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc() || ptr != last) {
    throw ParseError("invalid " + std::string(what) + " '" + std::string(token) +
                     "' (expected family:p1,p2[,seed=S])");
  }
  return value;
}

}  // namespace

std::string_view family_name(Family f) {
  for (const auto& info : kFamilies) {
    if (info.family == f) return info.name;
  }
  return "unknown";
}

Family family_from_name(std::string_view name) {
  for (const auto& info : kFamilies) {
    if (info.name == name) return info.family;
  }
  std::string known;
  for (const auto& info : kFamilies) {
    if (!known.empty()) known += ", ";
    known += info.name;
  }
  throw UsageError("unknown family '" + std::string(name) + "' (known: " + known + ")");
}

bool is_random_family(Family f) { return f == Family::kErdosRenyi; }

InstanceSpec parse_instance_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("missing ':' in instance spec '" + std::string(text) +
                     "' (expected family:p1,p2[,seed=S])");
  }
  InstanceSpec spec;
  spec.family = family_from_name(text.substr(0, colon));
  std::string_view rest = text.substr(colon + 1);
  bool seen_seed = false;
  while (true) {
    const auto comma = rest.find(',');
    const std::string_view token = rest.substr(0, comma);
    if (seen_seed) {
      throw ParseError("'seed=' must be the last field in '" + std::string(text) + "'");
    }
    if (token.starts_with("seed=")) {
      const std::int64_t seed = parse_int(token.substr(5), "seed");
      if (seed < 0) throw ParseError("seed must be non-negative");
      spec.seed = static_cast<std::uint64_t>(seed);
      seen_seed = true;
    } else {
      spec.params.push_back(parse_int(token, "parameter"));
    }
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  if (spec.params.empty()) {
    throw ParseError("instance spec '" + std::string(text) + "' has no parameters");
  }
  return spec;
}

std::string format_instance_spec(const InstanceSpec& spec) {
  std::string out(family_name(spec.family));
  char sep = ':';
  for (std::int64_t p : spec.params) {
    out += sep;
    out += std::to_string(p);
    sep = ',';
  }
  if (is_random_family(spec.family)) out += ",seed=" + std::to_string(spec.seed);
  return out;
}

std::string format_params(const InstanceSpec& spec) {
  std::string out;
  for (std::int64_t p : spec.params) {
    if (!out.empty()) out += ';';
    out += std::to_string(p);
  }
  if (is_random_family(spec.family)) out += ";seed=" + std::to_string(spec.seed);
  return out;
}

void validate(const InstanceSpec& spec) {
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::kComplete:
    case Family::kPath:
      require_arity(spec, 1, 1, "[n]");
      if (p[0] < 1) fail(spec, "requires n >= 1");
      require_vertex_budget(spec, p[0]);
      return;
    case Family::kCycle:
      require_arity(spec, 1, 1, "[n]");
      if (p[0] < 3) fail(spec, "requires n >= 3");
      require_vertex_budget(spec, p[0]);
      return;
    case Family::kCompleteBipartite:
      require_arity(spec, 2, 2, "[m, n]");
      if (p[0] < 1 || p[1] < 1) fail(spec, "requires m >= 1 and n >= 1");
      require_vertex_budget(spec, p[0] + p[1]);
      return;
    case Family::kQueen2xk:
    case Family::kRook2xk: {
      require_arity(spec, 1, 2, "[k] or [rows, cols]");
      auto [rows, cols] = two_row_board(spec);
      if (rows < 1 || cols < 1) fail(spec, "requires rows >= 1 and cols >= 1");
      if (rows > kMaxVertices || cols > kMaxVertices) fail(spec, "board too large");
      require_vertex_budget(spec, rows * cols);
      return;
    }
    case Family::kRookKxK:
    case Family::kBishopKxK:
    case Family::kKnightKxK: {
      require_arity(spec, 1, 1, "[k]");
      const std::int64_t min_k = spec.family == Family::kRookKxK     ? 1
                                 : spec.family == Family::kBishopKxK ? 2
                                                                     : 3;
      if (p[0] < min_k) fail(spec, "requires k >= " + std::to_string(min_k));
      if (p[0] > kMaxVertices) fail(spec, "board too large");
      require_vertex_budget(spec, p[0] * p[0]);
      return;
    }
    case Family::kFlowerSnark:
      require_arity(spec, 1, 1, "[k]");
      if (p[0] < 3) fail(spec, "requires k >= 3");
      require_vertex_budget(spec, 4 * p[0]);
      return;
    case Family::kGenPetersen:
      require_arity(spec, 2, 2, "[n, k]");
      if (p[0] < 3) fail(spec, "requires n >= 3");
      if (p[1] < 1 || 2 * p[1] >= p[0]) fail(spec, "requires 1 <= k < n/2");
      require_vertex_budget(spec, 2 * p[0]);
      return;
    case Family::kErdosRenyi:
      require_arity(spec, 2, 2, "[n, d]");
      if (p[0] < 1) fail(spec, "requires n >= 1");
      if (p[1] < 0 || p[1] > p[0]) fail(spec, "requires 0 <= d <= n (p = d/n)");
      require_vertex_budget(spec, p[0]);
      return;
  }
  fail(spec, "unhandled family");
}

Graph generate(const InstanceSpec& spec) {
  validate(spec);
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::kComplete:
      return complete_graph(p[0]);
    case Family::kCompleteBipartite:
      return complete_bipartite_graph(p[0], p[1]);
    case Family::kQueen2xk: {
      auto [rows, cols] = two_row_board(spec);
      return board_graph(rows, cols, queen_attacks);
    }
    case Family::kRook2xk: {
      auto [rows, cols] = two_row_board(spec);
      return board_graph(rows, cols, rook_attacks);
    }
    case Family::kRookKxK:
      return board_graph(p[0], p[0], rook_attacks);
    case Family::kBishopKxK:
      return board_graph(p[0], p[0], bishop_attacks);
    case Family::kKnightKxK:
      return board_graph(p[0], p[0], knight_attacks);
    case Family::kFlowerSnark:
      return flower_snark(p[0]);
    case Family::kGenPetersen:
      return generalized_petersen(p[0], p[1]);
    case Family::kErdosRenyi:
      return erdos_renyi(p[0], p[1], spec.seed);
    case Family::kCycle:
      return cycle_graph(p[0]);
    case Family::kPath:
      return path_graph(p[0]);
  }
  throw UsageError("unhandled family");
}

std::optional<std::int64_t> closed_form_gamma(const InstanceSpec& spec) {
  try {
    validate(spec);
  } catch (const UsageError&) {
    return std::nullopt;
  }
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::kComplete:
      return 1;
    case Family::kCompleteBipartite:
      if (std::min(p[0], p[1]) >= 2) return 2;
      return std::nullopt;
    case Family::kQueen2xk:
    case Family::kRook2xk: {
      // Transposing the board gives an isomorphic graph, so k x 2 counts too.
      auto [rows, cols] = two_row_board(spec);
      std::int64_t k = 0;
      if (rows == 2) {
        k = cols;
      } else if (cols == 2) {
        k = rows;
      } else {
        return std::nullopt;
      }
      return spec.family == Family::kQueen2xk ? (k + 1) / 2 : k;
    }
    case Family::kRookKxK:
      return p[0];
    case Family::kBishopKxK:
      return 2 * p[0] - 2;
    case Family::kKnightKxK:
      return (p[0] * p[0] + 1) / 2;
    case Family::kFlowerSnark:
      return p[0] % 2 == 1 ? 2 * p[0] - 1 : 2 * p[0];
    case Family::kGenPetersen:
      return p[0];
    case Family::kErdosRenyi:
    case Family::kCycle:
    case Family::kPath:
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace updom

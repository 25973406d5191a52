#include "updom/oracle.h"

#include <omp.h>

#include <algorithm>
#include <bit>

namespace updom {
namespace {

using Mask = std::uint64_t;

void check_limits(const Graph& g, OracleLimits limits) {
  if (limits.max_vertices > kOracleMaxVertices || limits.max_vertices < 1) {
    throw UsageError("oracle vertex limit must be in [1, " +
                     std::to_string(kOracleMaxVertices) + "]");
  }
  if (g.n() > limits.max_vertices) {
    throw UsageError("graph has " + std::to_string(g.n()) +
                     " vertices; exhaustive oracles are limited to " +
                     std::to_string(limits.max_vertices) +
                     " (use solve() on an F1/F2 model instead)");
  }
}

// Dominating and every member owns a private neighbor. A vertex w whose
// closed neighborhood meets S in exactly one vertex is private to it, so S is
// minimal iff the union of those single hits covers S.
inline bool is_minimal_dominating_mask(std::span<const Mask> closed, Mask s) {
  Mask owners = 0;
  for (const Mask nw : closed) {
    const Mask hit = nw & s;
    if (hit == 0) return false;
    if ((hit & (hit - 1)) == 0) owners |= hit;
  }
  return owners == s;
}

inline bool is_independent_mask(std::span<const Mask> open, Mask s) {
  for (Mask rest = s; rest != 0; rest &= rest - 1) {
    if (open[std::countr_zero(rest)] & s) return false;
  }
  return true;
}

// Size first, then lexicographic on sorted member lists: among equal-size
// sets the one owning the lowest differing vertex comes first.
inline bool mask_less(Mask a, Mask b) {
  const int pa = std::popcount(a);
  const int pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  const Mask diff = a ^ b;
  return (a & diff & (~diff + 1)) != 0;
}

// Larger set wins; ties go to the earlier set in mask_less order.
inline bool better_gamma(Mask a, Mask b) {
  const int pa = std::popcount(a);
  const int pb = std::popcount(b);
  if (pa != pb) return pa > pb;
  return mask_less(a, b);
}

std::vector<Mask> open_masks(const Graph& g) {
  auto masks = closed_neighborhood_masks(g);
  for (Vertex v = 0; v < g.n(); ++v) masks[v] &= ~(Mask{1} << v);
  return masks;
}

Enumeration finish_enumeration(std::vector<Mask> found, std::size_t cap) {
  std::sort(found.begin(), found.end(), mask_less);
  Enumeration out;
  out.total = found.size();
  out.truncated = found.size() > cap;
  const std::size_t keep = std::min(found.size(), cap);
  out.sets.reserve(keep);
  for (std::size_t i = 0; i < keep; ++i) out.sets.push_back(VertexSet::FromMask(found[i]));
  return out;
}

GammaCertificate make_certificate(Mask best) {
  GammaCertificate cert;
  cert.witness = VertexSet::FromMask(best);
  cert.gamma = static_cast<std::int64_t>(cert.witness.size());
  cert.provenance = Provenance::kOracle;
  return cert;
}

}  // namespace

Enumeration enumerate_minimal_dominating(const Graph& g, std::size_t cap,
                                         OracleLimits limits) {
  check_limits(g, limits);
  const auto closed = closed_neighborhood_masks(g);
  const std::int64_t total = std::int64_t{1} << g.n();
  std::vector<Mask> found;
#pragma omp parallel
  {
    std::vector<Mask> local;
#pragma omp for schedule(static) nowait
    for (std::int64_t s = 1; s < total; ++s) {
      if (is_minimal_dominating_mask(closed, static_cast<Mask>(s))) {
        local.push_back(static_cast<Mask>(s));
      }
    }
#pragma omp critical(updom_enumerate_merge)
    found.insert(found.end(), local.begin(), local.end());
  }
  return finish_enumeration(std::move(found), cap);
}

GammaCertificate gamma_oracle(const Graph& g, OracleLimits limits) {
  check_limits(g, limits);
  const auto closed = closed_neighborhood_masks(g);
  const std::int64_t total = std::int64_t{1} << g.n();
  // Some minimal dominating set always exists, so best ends up nonzero.
  Mask best = 0;
#pragma omp parallel
  {
    Mask local = 0;
#pragma omp for schedule(static) nowait
    for (std::int64_t s = 1; s < total; ++s) {
      const auto mask = static_cast<Mask>(s);
      if ((local == 0 || better_gamma(mask, local)) &&
          is_minimal_dominating_mask(closed, mask)) {
        local = mask;
      }
    }
#pragma omp critical(updom_gamma_merge)
    if (local != 0 && (best == 0 || better_gamma(local, best))) best = local;
  }
  return make_certificate(best);
}

std::int64_t alpha_oracle(const Graph& g, OracleLimits limits) {
  check_limits(g, limits);
  const auto open = open_masks(g);
  const std::int64_t total = std::int64_t{1} << g.n();
  int best = 0;
#pragma omp parallel for schedule(static) reduction(max : best)
  for (std::int64_t s = 1; s < total; ++s) {
    const auto mask = static_cast<Mask>(s);
    if (std::popcount(mask) > best && is_independent_mask(open, mask)) {
      best = std::popcount(mask);
    }
  }
  return best;
}

namespace serial {

Enumeration enumerate_minimal_dominating(const Graph& g, std::size_t cap,
                                         OracleLimits limits) {
  check_limits(g, limits);
  const auto closed = closed_neighborhood_masks(g);
  const Mask total = Mask{1} << g.n();
  std::vector<Mask> found;
  for (Mask s = 1; s < total; ++s) {
    if (is_minimal_dominating_mask(closed, s)) found.push_back(s);
  }
  return finish_enumeration(std::move(found), cap);
}

GammaCertificate gamma_oracle(const Graph& g, OracleLimits limits) {
  check_limits(g, limits);
  const auto closed = closed_neighborhood_masks(g);
  const Mask total = Mask{1} << g.n();
  Mask best = 0;
  for (Mask s = 1; s < total; ++s) {
    if (is_minimal_dominating_mask(closed, s) && (best == 0 || better_gamma(s, best))) {
      best = s;
    }
  }
  return make_certificate(best);
}

std::int64_t alpha_oracle(const Graph& g, OracleLimits limits) {
  check_limits(g, limits);
  const auto open = open_masks(g);
  const Mask total = Mask{1} << g.n();
  int best = 0;
  for (Mask s = 1; s < total; ++s) {
    if (is_independent_mask(open, s)) best = std::max(best, std::popcount(s));
  }
  return best;
}

}  // namespace serial

namespace {

std::int64_t floor_div(std::int64_t num, std::int64_t den) {
  std::int64_t q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

}  // namespace

BoundsReport bazgan_bounds(const Graph& g, OracleLimits limits) {
  BoundsReport report;
  report.alpha = alpha_oracle(g, limits);
  report.lower = report.alpha;
  report.min_degree = g.min_degree();
  report.max_degree = g.max_degree();
  const std::int64_t n = g.n();
  const std::int64_t big = report.max_degree;
  const std::int64_t gap = report.max_degree - report.min_degree;

  if (big == 0) {
    report.upper = report.alpha;
  } else {
    // n/2 + alpha*gap/(2*big) - gap/big == (n*big + alpha*gap - 2*gap) / (2*big)
    const std::int64_t numerator = n * big + report.alpha * gap - 2 * gap;
    report.upper = std::max(report.alpha, floor_div(numerator, 2 * big));
  }

  int d = 0;
  const bool regular = g.is_regular(&d);
  report.corollary_applies = regular && d == 3 && n >= 6;
  if (report.corollary_applies) report.upper = std::min(report.upper, n / 2);
  report.regular_alpha_cap_applies = regular && d >= 1 && d <= (n + 1) / 2;
  return report;
}

VertexSet greedy_minimal_dominating(const Graph& g) {
  // Coverage counts |S intersect N[w]| for the current S.
  std::vector<int> cover(g.n());
  for (Vertex w = 0; w < g.n(); ++w) cover[w] = g.degree(w) + 1;
  std::vector<bool> in_set(g.n(), true);
  for (Vertex v = g.n() - 1; v >= 0; --v) {
    bool removable = cover[v] > 1;
    for (Vertex w : g.neighbors(v)) removable = removable && cover[w] > 1;
    if (!removable) continue;
    in_set[v] = false;
    --cover[v];
    for (Vertex w : g.neighbors(v)) --cover[w];
  }
  std::vector<Vertex> members;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (in_set[v]) members.push_back(v);
  }
  return VertexSet(std::move(members));
}

}  // namespace updom

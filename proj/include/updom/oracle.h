#ifndef UPDOM_ORACLE_H_
#define UPDOM_ORACLE_H_

#include <cstdint>
#include <limits>
#include <vector>

#include "updom/graph.h"
#include "updom/model.h"

namespace updom {

// Subset-scan oracles visit all 2^n vertex subsets. The default cap keeps a
// scan in the seconds range; callers may lower it, never raise it.
inline constexpr Vertex kOracleMaxVertices = 24;

struct OracleLimits {
  Vertex max_vertices = kOracleMaxVertices;
};

struct Enumeration {
  // Sorted by size, then lexicographically by member list.
  std::vector<VertexSet> sets;
  // Number of minimal dominating sets found before truncation.
  std::uint64_t total = 0;
  bool truncated = false;
};

// Every minimal dominating set of g, truncated to the first `cap` in the
// deterministic order. Throws UsageError when g.n() exceeds the limit.
Enumeration enumerate_minimal_dominating(
    const Graph& g, std::size_t cap = std::numeric_limits<std::size_t>::max(),
    OracleLimits limits = {});

// Maximum-cardinality minimal dominating set; the witness is the
// lexicographically smallest among those of maximum size.
GammaCertificate gamma_oracle(const Graph& g, OracleLimits limits = {});

// Independence number by exhaustive scan.
std::int64_t alpha_oracle(const Graph& g, OracleLimits limits = {});

// Single-threaded reference versions of the three scans above, kept for
// cross-checking the OpenMP kernels. Same results, same ordering.
namespace serial {
Enumeration enumerate_minimal_dominating(
    const Graph& g, std::size_t cap = std::numeric_limits<std::size_t>::max(),
    OracleLimits limits = {});
GammaCertificate gamma_oracle(const Graph& g, OracleLimits limits = {});
std::int64_t alpha_oracle(const Graph& g, OracleLimits limits = {});
}  // namespace serial

struct BoundsReport {
  std::int64_t alpha = 0;
  std::int64_t lower = 0;  // = alpha
  std::int64_t upper = 0;
  int min_degree = 0;
  int max_degree = 0;
  // g is 3-regular with n >= 6; upper is then capped at n/2.
  bool corollary_applies = false;
  // g is d-regular with 1 <= d <= ceil(n/2), so alpha <= floor(n/2).
  bool regular_alpha_cap_applies = false;
};

// alpha <= Gamma <= max{alpha, n/2 + alpha(D-d)/(2D) - (D-d)/D} with D, d the
// max and min degree. The second term is evaluated exactly over the rationals
// and floored. For D = 0 the bound is alpha.
BoundsReport bazgan_bounds(const Graph& g, OracleLimits limits = {});

// Minimal dominating set obtained by dropping vertices from V (highest id
// first) while the set stays dominating. Used for warm starts.
VertexSet greedy_minimal_dominating(const Graph& g);

}  // namespace updom

#endif  // UPDOM_ORACLE_H_

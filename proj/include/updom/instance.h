#ifndef UPDOM_INSTANCE_H_
#define UPDOM_INSTANCE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "updom/graph.h"

namespace updom {

enum class Family {
  kComplete,           // [n]
  kCompleteBipartite,  // [m, n]
  kQueen2xk,           // [k] or [rows, cols]
  kRook2xk,            // [k] or [rows, cols]
  kRookKxK,            // [k]
  kBishopKxK,          // [k]
  kKnightKxK,          // [k]
  kFlowerSnark,        // [k]
  kGenPetersen,        // [n, k]
  kErdosRenyi,         // [n, d], p = d / n
  kCycle,              // [n]
  kPath,               // [n]
};

std::string_view family_name(Family f);
// Throws UsageError for unknown names.
Family family_from_name(std::string_view name);
bool is_random_family(Family f);

// Family tag + integer parameters + seed for the random families.
struct InstanceSpec {
  Family family = Family::kComplete;
  std::vector<std::int64_t> params;
  std::uint64_t seed = 0;

  friend bool operator==(const InstanceSpec&, const InstanceSpec&) = default;
};

// Parses `family:p1,p2[,seed=S]`, e.g. "gen_petersen:7,2" or
// "erdos_renyi:40,4,seed=17". Throws ParseError on bad grammar and
// UsageError on an unknown family.
InstanceSpec parse_instance_spec(std::string_view text);
// Inverse of parse_instance_spec; the seed is only printed for random
// families.
std::string format_instance_spec(const InstanceSpec& spec);
// Parameters joined with ';' (plus ";seed=S" for random families), the form
// used in CSV cells.
std::string format_params(const InstanceSpec& spec);

// Throws UsageError naming the violated bound when `spec` is invalid.
void validate(const InstanceSpec& spec);

// Deterministic in (family, params, seed). Vertex layouts:
//  - board families: id = row * cols + col
//  - gen_petersen: u_i = i, v_i = n + i
//  - flower_snark: A_i = i, B_i = k + i, C_i = 2k + i, D_i = 3k + i
//  - complete_bipartite: left side 0..m-1, right side m..m+n-1
Graph generate(const InstanceSpec& spec);

// Upper domination number from the literature when the family has one,
// otherwise nullopt (random families, parameters outside the known range).
std::optional<std::int64_t> closed_form_gamma(const InstanceSpec& spec);

}  // namespace updom

#endif  // UPDOM_INSTANCE_H_

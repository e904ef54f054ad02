#pragma once

#include <optional>
#include <vector>

#include "tourney/numeric.hpp"
#include "tourney/patterns.hpp"
#include "tourney/tournament.hpp"

namespace tourney {

/// Exact counts of induced 3- and 4-vertex subtournament types. The 4-vertex
/// fields are meaningful only when has_quads (n >= 4).
struct Census {
  int n = 0;
  i128 tt3 = 0, c3 = 0;
  bool has_quads = false;
  i128 tt4 = 0, c3plus = 0, c3minus = 0, c4 = 0;
};

/// Classifies every 3- and 4-subset directly. The reference path; O(n^4).
Census census_bruteforce(const Tournament& t);

/// Bitset path, identical output: tt3 from out-degrees, C3+ by summing the
/// cyclic triangles inside each out-neighborhood (each copy counted once at
/// its apex), C3- the same on the reversal, and c4 / tt4 recovered from the
/// exact lifting identities. O(n^3 / w).
Census census_fast(const Tournament& t, int threads = 0);

/// Both integer lifting identities, exact:
///   c3 * (n-3) == 2*c4 + c3plus + c3minus
///   tt3 * (n-3) == 4*tt4 + 3*(c3plus + c3minus) + 2*c4
bool lifting_identities_hold(const Census& c);
bool verify_lifting_identities(const Tournament& t, int threads = 0);

/// Number of |H|-subsets of t inducing a copy of the pattern.
i128 count_pattern(const PatternId& pattern, const Tournament& t, int threads = 0);

struct DensityEntry {
  Rational exact;
  double approx = 0.0;
};

struct DensityReport {
  int n = 0;
  DensityEntry tt3, c3;
  bool has_quads = false;
  DensityEntry tt4, c3plus, c3minus, c4;
};

DensityReport densities(const Census& c);

/// Per-vertex copy counts C3+(v); sums to 4 * c3plus. Each load splits into
/// an apex role (cyclic triangles in N+(v)) and a cycle role (v on the
/// triangle under some dominating vertex). With with_pairs, also fills the
/// per-pair counts C3+(v,w) by a full 4-subset scan (O(n^4), small n only).
struct VertexLoads {
  std::vector<i128> by_vertex;
  std::vector<i128> apex_part;
  std::vector<i128> cycle_part;
  std::optional<std::vector<i128>> pair_counts;  // row-major n*n, symmetric

  i128 pair(int v, int w) const {
    return (*pair_counts)[static_cast<std::size_t>(v) * by_vertex.size() + w];
  }
};

VertexLoads vertex_loads_c3plus(const Tournament& t, bool with_pairs = false,
                                int threads = 0);

/// Number of 4-subsets containing both v and w that induce C3+.
i128 pair_count_c3plus(const Tournament& t, int v, int w);

}  // namespace tourney

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tourney/tournament.hpp"

namespace tourney {

/// arc i -> j iff i < j.
Tournament transitive(int n);

/// The distinguished carousel: for odd n, arc v_i -> v_j iff
/// (j - i) mod n is in {1 .. (n-1)/2}; for even n, delete the last vertex of
/// the odd carousel on n+1 vertices. n >= 3.
Tournament carousel(int n);

/// All locally transitive, (near-)balanced tournaments on n vertices up to
/// isomorphism, as canonical representatives sorted by canonical code.
/// Odd n: the singleton {carousel(n)}. Even n: every orientation of the n/2
/// antipodal diagonals, deduplicated. Requires n <= 16.
std::vector<Tournament> carousel_class(int n);

/// True iff every vertex has a cycle-free in- and out-neighborhood and
/// out-degree in {(n-2)/2, (n-1)/2, n/2}; holds exactly on the carousel
/// class.
bool is_locally_transitive_balanced(const Tournament& t);

/// One fair bit per pair from a counter-based generator keyed by
/// (seed, i, j); bit-identical output for identical (n, seed) everywhere.
Tournament random_tournament(int n, std::uint64_t seed);

std::uint64_t pair_bit(std::uint64_t seed, std::uint32_t i, std::uint32_t j);

/// Parameters of the iterated two-block construction: the top ceil(alpha*m)
/// vertices dominate the rest, the bottom block is random, and the top block
/// repeats the construction until it has fewer than base_cutoff vertices,
/// which are filled transitively. alpha empty = closed-form optimum.
struct BlowupSpec {
  int n = 0;
  std::optional<double> alpha;  // nullopt = auto
  std::uint64_t seed = 0;
  int base_cutoff = 4;

  double resolved_alpha() const;
  void validate() const;
};

/// Block layout of the construction. Blocks are index ranges; block k
/// occupies [start, start+len): every vertex below `start` dominates it.
struct BlowupLayout {
  struct Block {
    int start = 0;
    int len = 0;
    bool random = false;  // false = transitive base
    int level = 0;
  };
  std::vector<Block> blocks;            // deepest (base) first
  std::vector<int> level_of_vertex;     // nesting level per vertex
  int depth = 0;                        // level of the base block
};

BlowupLayout blowup_layout(const BlowupSpec& spec);
Tournament iterated_blowup(const BlowupSpec& spec);

/// Companion accessor: nesting level per vertex (outermost random block = 0,
/// deeper blocks count up, the transitive base is deepest).
std::vector<int> blowup_levels(const BlowupSpec& spec);

}  // namespace tourney

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tourney/canonical.hpp"
#include "tourney/census.hpp"
#include "tourney/numeric.hpp"
#include "tourney/patterns.hpp"

namespace tourney {

inline constexpr int kMaxEnumerationSize = 9;

/// All isomorphism classes on n vertices as canonical codes, sorted.
/// Generated by canonical extension: each (m)-class is extended by a last
/// vertex in all 2^m ways and a candidate survives iff it is its own
/// canonical form. 1 <= n <= 9.
std::vector<CanonicalForm> enumerate_codes(int n, int threads = 0);

/// Same classes decoded, one representative per class.
std::vector<Tournament> enumerate_tournaments(int n, int threads = 0);

enum class SearchMode { Exhaustive, Local };
enum class Move { ArcFlip, DuplicateDelete };

struct SearchStats {
  int restarts = 0;
  std::int64_t improving_moves = 0;
  std::int64_t plateau_moves = 0;
  int best_restart = 0;
};

struct SearchResult {
  PatternId pattern;
  int n = 0;
  SearchMode mode = SearchMode::Exhaustive;
  i128 best_count = 0;
  std::vector<CanonicalForm> maximizers;  // exhaustive: the full set, sorted
  std::optional<Tournament> witness;      // local: best tournament found
  std::optional<SearchStats> stats;

  Rational density() const {
    return Rational(best_count, binomial(n, pattern.order()));
  }
};

/// Exact maximum of the pattern count over every isomorphism class,
/// with the complete maximizer set. |pattern| <= n <= 9.
SearchResult exhaustive_max(const PatternId& pattern, int n, int threads = 0);

struct LocalSearchOptions {
  std::uint64_t seed = 1;
  int restarts = 1;
  bool use_arc_flip = true;
  bool use_duplicate_delete = true;
  bool first_improvement = false;
  int plateau_budget = -1;  // -1 = default 2n
  bool audit = false;       // recount from scratch after every accepted move
};

/// Seeded hill climbing under the chosen move set. Arc-flip gains rescan only
/// the subsets through the flipped pair; duplicate/delete gains use the exact
/// load/pair-count formula for C3+/C3- and an exact local recount otherwise.
/// Deterministic given (seed, restarts); never overstates: the witness is
/// recounted from scratch.
SearchResult local_search(const PatternId& pattern, int n,
                          const LocalSearchOptions& opts, int threads = 0);

struct MaxTableRow {
  int n = 0;
  i128 best_count = 0;
  Rational density;
};

/// Exact per-n maxima over a range (exhaustive limits apply).
std::vector<MaxTableRow> max_table(const PatternId& pattern, int n_lo, int n_hi,
                                   int threads = 0);

}  // namespace tourney

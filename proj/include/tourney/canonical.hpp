#pragma once

#include <cstdint>
#include <string>

#include "tourney/numeric.hpp"
#include "tourney/tournament.hpp"

namespace tourney {

inline constexpr int kMaxCanonicalSize = 16;

/// Label-invariant normal form for tournaments on up to 16 vertices.
///
/// The code reads the upper triangle column by column — pairs (i,k), i<k,
/// ordered by (k,i) — with earlier pairs in higher bit positions and bit 1
/// meaning lower-index -> higher-index. `code` is the minimum of that value
/// over all relabelings. Column order (rather than the row-major file order)
/// makes the code of the first m vertices a prefix of the full code, so
/// deleting the last vertex of a canonically labeled tournament leaves a
/// canonically labeled tournament; enumeration by canonical extension relies
/// on this.
struct CanonicalForm {
  int n = 0;
  u128 code = 0;

  bool operator==(const CanonicalForm& o) const { return n == o.n && code == o.code; }
  bool operator!=(const CanonicalForm& o) const { return !(*this == o); }
  bool operator<(const CanonicalForm& o) const {
    return n != o.n ? n < o.n : code < o.code;
  }

  /// The code as a '0'/'1' string of length n(n-1)/2 (column pair order).
  std::string bit_string() const;
};

/// Code of t under its current labeling (no minimization).
u128 identity_code(const Tournament& t);

CanonicalForm canonical_form(const Tournament& t);

/// True iff t's current labeling already achieves the canonical code.
bool is_canonically_labeled(const Tournament& t);

Tournament from_canonical(const CanonicalForm& cf);

/// Canonical representative (the canonical form decoded back to a tournament).
Tournament canonicalized(const Tournament& t);

/// Size mismatch is an answer (false), not an error; both sizes must be
/// within the canonical labeling limit.
bool is_isomorphic(const Tournament& a, const Tournament& b);

/// |Aut(t)| = number of orderings achieving the canonical code.
std::uint64_t automorphism_count(const Tournament& t);

}  // namespace tourney

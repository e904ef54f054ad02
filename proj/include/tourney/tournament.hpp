#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tourney/errors.hpp"

namespace tourney {

/// A tournament on n labeled vertices: exactly one arc between every pair.
/// Arcs are stored as per-vertex out-neighborhood bitsets, so the
/// exactly-one-arc invariant holds by construction: a fresh Tournament is the
/// transitive order (i -> j for i < j) and set_arc only reorients pairs.
/// Values are immutable in all library operations (surgery returns copies)
/// and safe to share across threads.
class Tournament {
public:
  explicit Tournament(int n);

  /// Decodes the row-major pair encoding: pairs (i,j), i<j, ordered
  /// lexicographically; character '1' means i -> j.
  static Tournament from_bits(int n, std::string_view bits);
  std::string to_bits() const;

  int size() const { return n_; }
  int words() const { return words_; }

  bool arc(int from, int to) const {
    return (rows_[static_cast<std::size_t>(from) * words_ + to / 64] >>
            (to % 64)) & 1u;
  }

  /// Orients the pair {from, to} as from -> to.
  void set_arc(int from, int to);

  int out_degree(int v) const;

  std::span<const std::uint64_t> out_row(int v) const {
    return {rows_.data() + static_cast<std::size_t>(v) * words_,
            static_cast<std::size_t>(words_)};
  }

  Tournament reversed() const;

  /// Induced subtournament under the order-preserving relabeling of verts.
  Tournament induced(std::span<const int> verts) const;

  Tournament without_vertex(int v) const;

  /// Appends a twin of v as the new last vertex; arc v -> twin iff
  /// arc_to_copy, the twin's other arcs mirror v's.
  Tournament with_duplicated(int v, bool arc_to_copy = true) const;

  /// perm[p] = original vertex placed at position p.
  Tournament relabeled(std::span<const int> perm) const;

  bool operator==(const Tournament& o) const {
    return n_ == o.n_ && rows_ == o.rows_;
  }

private:
  int n_;
  int words_;
  std::vector<std::uint64_t> rows_;
};

inline int popcount_words(std::span<const std::uint64_t> a) {
  int c = 0;
  for (std::uint64_t w : a) c += __builtin_popcountll(w);
  return c;
}

inline int popcount_and(std::span<const std::uint64_t> a,
                        std::span<const std::uint64_t> b) {
  int c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += __builtin_popcountll(a[i] & b[i]);
  return c;
}

// --- "tour/1" text format ---------------------------------------------------
// One tournament per non-comment line: `t <n> <bitstring>` with the
// row-major encoding of from_bits/to_bits. Lines starting with '#' are
// comments. Round-trips bit-exactly.

std::vector<Tournament> parse_tour(std::istream& in, const std::string& source_name);
std::vector<Tournament> read_tour_file(const std::string& path);
void write_tour(std::ostream& out, std::span<const Tournament> ts);
void write_tour_file(const std::string& path, std::span<const Tournament> ts);

}  // namespace tourney

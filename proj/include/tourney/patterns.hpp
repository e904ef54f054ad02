#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "tourney/tournament.hpp"

namespace tourney {

enum class TriadType : unsigned char { TT3, C3 };
enum class QuadType : unsigned char { TT4, C3Plus, C3Minus, C4 };

/// Classification tables for induced 3- and 4-subsets, indexed by the
/// row-major pair bits of the subset ("110" -> 0b110 with pair (0,1) as the
/// most significant bit). Built once from out-degree multisets, which
/// separate all four 4-vertex types: TT4 {3,2,1,0}, C3+ {3,1,1,1},
/// C3- {2,2,2,0}, C4 {2,2,1,1}.
TriadType classify_triad_code(unsigned code);
QuadType classify_quad_code(unsigned code);

/// Row-major pair bits of the subset {a<b<c} / {a<b<c<d} of t.
inline unsigned triad_code(const Tournament& t, int a, int b, int c) {
  return (unsigned{t.arc(a, b)} << 2) | (unsigned{t.arc(a, c)} << 1) |
         unsigned{t.arc(b, c)};
}
inline unsigned quad_code(const Tournament& t, int a, int b, int c, int d) {
  return (unsigned{t.arc(a, b)} << 5) | (unsigned{t.arc(a, c)} << 4) |
         (unsigned{t.arc(a, d)} << 3) | (unsigned{t.arc(b, c)} << 2) |
         (unsigned{t.arc(b, d)} << 1) | unsigned{t.arc(c, d)};
}

/// A countable pattern: one of the six named small tournaments or a custom
/// tournament on at most 8 vertices.
class PatternId {
public:
  enum class Tag { TT3, C3, TT4, C3Plus, C3Minus, C4, Custom };

  static PatternId tt3() { return PatternId(Tag::TT3); }
  static PatternId c3() { return PatternId(Tag::C3); }
  static PatternId tt4() { return PatternId(Tag::TT4); }
  static PatternId c3plus() { return PatternId(Tag::C3Plus); }
  static PatternId c3minus() { return PatternId(Tag::C3Minus); }
  static PatternId c4() { return PatternId(Tag::C4); }
  static PatternId custom(const Tournament& t);

  /// Parses "TT3", "C3", "TT4", "C3+", "C3PLUS", "C3-", "C3MINUS", "C4"
  /// (case-insensitive).
  static std::optional<PatternId> parse(std::string_view name);

  Tag tag() const { return tag_; }
  int order() const;
  std::string name() const;
  Tournament tournament() const;

  bool operator==(const PatternId& o) const;

private:
  explicit PatternId(Tag tag) : tag_(tag) {}
  Tag tag_;
  std::optional<Tournament> custom_;
};

// The named patterns as labeled tournaments (row-major bit literals).
Tournament pattern_tt3();
Tournament pattern_c3();
Tournament pattern_tt4();
Tournament pattern_c3plus();
Tournament pattern_c3minus();
Tournament pattern_c4();

}  // namespace tourney

#include "tourney/patterns.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace tourney {
namespace {

std::array<TriadType, 8> build_triad_table() {
  std::array<TriadType, 8> table{};
  for (unsigned code = 0; code < 8; ++code) {
    // out-degrees of a,b,c from pair bits (ab, ac, bc)
    unsigned ab = (code >> 2) & 1, ac = (code >> 1) & 1, bc = code & 1;
    int da = ab + ac;
    int db = (1 - ab) + bc;
    int dc = (1 - ac) + (1 - bc);
    bool cyclic = da == 1 && db == 1 && dc == 1;
    table[code] = cyclic ? TriadType::C3 : TriadType::TT3;
  }
  return table;
}

std::array<QuadType, 64> build_quad_table() {
  std::array<QuadType, 64> table{};
  for (unsigned code = 0; code < 64; ++code) {
    unsigned ab = (code >> 5) & 1, ac = (code >> 4) & 1, ad = (code >> 3) & 1;
    unsigned bc = (code >> 2) & 1, bd = (code >> 1) & 1, cd = code & 1;
    std::array<int, 4> deg = {
        static_cast<int>(ab + ac + ad),
        static_cast<int>((1 - ab) + bc + bd),
        static_cast<int>((1 - ac) + (1 - bc) + cd),
        static_cast<int>((1 - ad) + (1 - bd) + (1 - cd)),
    };
    std::sort(deg.begin(), deg.end());
    if (deg == std::array<int, 4>{0, 1, 2, 3}) table[code] = QuadType::TT4;
    else if (deg == std::array<int, 4>{1, 1, 1, 3}) table[code] = QuadType::C3Plus;
    else if (deg == std::array<int, 4>{0, 2, 2, 2}) table[code] = QuadType::C3Minus;
    else table[code] = QuadType::C4;  // {1,1,2,2} is the only remaining multiset
  }
  return table;
}

const std::array<TriadType, 8> kTriadTable = build_triad_table();
const std::array<QuadType, 64> kQuadTable = build_quad_table();

}  // namespace

TriadType classify_triad_code(unsigned code) { return kTriadTable[code & 7]; }
QuadType classify_quad_code(unsigned code) { return kQuadTable[code & 63]; }

Tournament pattern_tt3() { return Tournament::from_bits(3, "111"); }
Tournament pattern_c3() { return Tournament::from_bits(3, "110"); }
Tournament pattern_tt4() { return Tournament::from_bits(4, "111111"); }
// apex 0 over the cycle 1 -> 2 -> 3 -> 1
Tournament pattern_c3plus() { return Tournament::from_bits(4, "111101"); }
// cycle 0 -> 1 -> 2 -> 0 over the sink 3
Tournament pattern_c3minus() { return Tournament::from_bits(4, "101111"); }
// the strongly connected 4-vertex tournament
Tournament pattern_c4() { return Tournament::from_bits(4, "110111"); }

PatternId PatternId::custom(const Tournament& t) {
  if (t.size() > 8)
    throw UnsupportedSizeError("custom patterns support at most 8 vertices");
  PatternId p(Tag::Custom);
  p.custom_ = t;
  return p;
}

std::optional<PatternId> PatternId::parse(std::string_view name) {
  std::string up;
  up.reserve(name.size());
  for (char c : name) up.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (up == "TT3") return tt3();
  if (up == "C3") return c3();
  if (up == "TT4") return tt4();
  if (up == "C3+" || up == "C3PLUS") return c3plus();
  if (up == "C3-" || up == "C3MINUS") return c3minus();
  if (up == "C4") return c4();
  return std::nullopt;
}

int PatternId::order() const {
  switch (tag_) {
    case Tag::TT3:
    case Tag::C3:
      return 3;
    case Tag::Custom:
      return custom_->size();
    default:
      return 4;
  }
}

std::string PatternId::name() const {
  switch (tag_) {
    case Tag::TT3: return "TT3";
    case Tag::C3: return "C3";
    case Tag::TT4: return "TT4";
    case Tag::C3Plus: return "C3+";
    case Tag::C3Minus: return "C3-";
    case Tag::C4: return "C4";
    case Tag::Custom: return "custom(" + std::to_string(custom_->size()) + ")";
  }
  return "?";
}

Tournament PatternId::tournament() const {
  switch (tag_) {
    case Tag::TT3: return pattern_tt3();
    case Tag::C3: return pattern_c3();
    case Tag::TT4: return pattern_tt4();
    case Tag::C3Plus: return pattern_c3plus();
    case Tag::C3Minus: return pattern_c3minus();
    case Tag::C4: return pattern_c4();
    case Tag::Custom: return *custom_;
  }
  throw MalformedInputError("bad pattern tag");
}

bool PatternId::operator==(const PatternId& o) const {
  if (tag_ != o.tag_) return false;
  if (tag_ != Tag::Custom) return true;
  return *custom_ == *o.custom_;
}

}  // namespace tourney

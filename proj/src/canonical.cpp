#include "tourney/canonical.hpp"

#include <array>

namespace tourney {
namespace {

struct SmallTournament {
  int n = 0;
  // out[v] bit u set = arc v -> u ; in[v] bit u set = arc u -> v
  std::array<std::uint16_t, kMaxCanonicalSize> out{};
  std::array<std::uint16_t, kMaxCanonicalSize> in{};
};

SmallTournament shrink(const Tournament& t) {
  if (t.size() > kMaxCanonicalSize)
    throw UnsupportedSizeError("canonical labeling supports n <= 16, got n=" +
                               std::to_string(t.size()));
  SmallTournament s;
  s.n = t.size();
  for (int v = 0; v < s.n; ++v)
    for (int u = 0; u < s.n; ++u)
      if (u != v && t.arc(v, u)) {
        s.out[v] |= std::uint16_t(1) << u;
        s.in[u] |= std::uint16_t(1) << v;
      }
  return s;
}

u128 small_identity_code(const SmallTournament& s) {
  u128 code = 0;
  for (int k = 1; k < s.n; ++k)
    for (int i = 0; i < k; ++i)
      code = (code << 1) | ((s.out[i] >> k) & 1u);
  return code;
}

// Minimizes the column code over all vertex orderings. The next column is a
// contiguous block of bits right after the current prefix, so only vertices
// whose column (arc pattern against the placed prefix) is minimal can extend
// a minimal completion; branching is over those ties only. Prefixes are
// compared against the incumbent and pruned when strictly greater.
class CanonSearch {
public:
  explicit CanonSearch(const SmallTournament& s) : s_(s) {
    total_bits_ = s_.n * (s_.n - 1) / 2;
  }

  // Full minimization. Returns the minimal code; leaf_matches() then counts
  // the orderings that achieve it (= |Aut|).
  u128 minimize(u128 incumbent) {
    best_ = incumbent;
    leaf_matches_ = 0;
    abort_on_improvement_ = false;
    improved_ = false;
    std::array<std::uint8_t, kMaxCanonicalSize> placed{};
    std::array<std::uint16_t, kMaxCanonicalSize> cols{};
    recurse(0, placed, cols, static_cast<std::uint16_t>((1u << s_.n) - 1), 0, 0);
    return best_;
  }

  // True iff no ordering beats the incumbent (early abort on first
  // improvement; equality leaves are not counted).
  bool verify_minimal(u128 incumbent) {
    best_ = incumbent;
    leaf_matches_ = 0;
    abort_on_improvement_ = true;
    improved_ = false;
    std::array<std::uint8_t, kMaxCanonicalSize> placed{};
    std::array<std::uint16_t, kMaxCanonicalSize> cols{};
    recurse(0, placed, cols, static_cast<std::uint16_t>((1u << s_.n) - 1), 0, 0);
    return !improved_;
  }

  std::uint64_t leaf_matches() const { return leaf_matches_; }

private:
  void recurse(int k, std::array<std::uint8_t, kMaxCanonicalSize>& placed,
               const std::array<std::uint16_t, kMaxCanonicalSize>& cols,
               std::uint16_t unplaced, u128 code, int code_len) {
    if (improved_ && abort_on_improvement_) return;
    if (unplaced == 0) {
      if (code < best_) {
        best_ = code;
        leaf_matches_ = 1;
        improved_ = true;
      } else if (code == best_) {
        ++leaf_matches_;
      }
      return;
    }
    std::uint16_t mincol = 0xffff;
    for (std::uint16_t m = unplaced; m;) {
      int v = __builtin_ctz(m);
      m &= static_cast<std::uint16_t>(m - 1);
      if (cols[v] < mincol) mincol = cols[v];
    }
    u128 new_code = (code << k) | mincol;
    int new_len = code_len + k;
    u128 best_prefix = best_ >> (total_bits_ - new_len);
    if (new_code > best_prefix) return;
    if (abort_on_improvement_ && new_code < best_prefix) {
      improved_ = true;
      return;
    }
    for (std::uint16_t m = unplaced; m;) {
      int v = __builtin_ctz(m);
      m &= static_cast<std::uint16_t>(m - 1);
      if (cols[v] != mincol) continue;
      placed[k] = static_cast<std::uint8_t>(v);
      std::array<std::uint16_t, kMaxCanonicalSize> next_cols = cols;
      std::uint16_t rest = unplaced & static_cast<std::uint16_t>(~(1u << v));
      for (std::uint16_t mm = rest; mm;) {
        int u = __builtin_ctz(mm);
        mm &= static_cast<std::uint16_t>(mm - 1);
        next_cols[u] = static_cast<std::uint16_t>((next_cols[u] << 1) |
                                                  ((s_.in[u] >> v) & 1u));
      }
      recurse(k + 1, placed, next_cols, rest, new_code, new_len);
      if (improved_ && abort_on_improvement_) return;
    }
  }

  const SmallTournament& s_;
  int total_bits_;
  u128 best_ = 0;
  std::uint64_t leaf_matches_ = 0;
  bool abort_on_improvement_ = false;
  bool improved_ = false;
};

}  // namespace

std::string CanonicalForm::bit_string() const {
  int bits = n * (n - 1) / 2;
  std::string s(static_cast<std::size_t>(bits), '0');
  for (int t = 0; t < bits; ++t)
    if ((code >> (bits - 1 - t)) & 1) s[static_cast<std::size_t>(t)] = '1';
  return s;
}

u128 identity_code(const Tournament& t) { return small_identity_code(shrink(t)); }

CanonicalForm canonical_form(const Tournament& t) {
  SmallTournament s = shrink(t);
  CanonSearch search(s);
  u128 code = search.minimize(small_identity_code(s));
  return CanonicalForm{t.size(), code};
}

bool is_canonically_labeled(const Tournament& t) {
  SmallTournament s = shrink(t);
  CanonSearch search(s);
  return search.verify_minimal(small_identity_code(s));
}

Tournament from_canonical(const CanonicalForm& cf) {
  if (cf.n < 1) throw MalformedInputError("from_canonical: empty form");
  Tournament t(cf.n);
  int bits = cf.n * (cf.n - 1) / 2;
  int pos = 0;
  for (int k = 1; k < cf.n; ++k)
    for (int i = 0; i < k; ++i, ++pos) {
      bool lo_wins = (cf.code >> (bits - 1 - pos)) & 1;
      if (lo_wins) t.set_arc(i, k);
      else t.set_arc(k, i);
    }
  return t;
}

Tournament canonicalized(const Tournament& t) { return from_canonical(canonical_form(t)); }

bool is_isomorphic(const Tournament& a, const Tournament& b) {
  if (a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

std::uint64_t automorphism_count(const Tournament& t) {
  SmallTournament s = shrink(t);
  CanonSearch search(s);
  search.minimize(small_identity_code(s));
  return search.leaf_matches();
}

}  // namespace tourney

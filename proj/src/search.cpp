#include "tourney/search.hpp"

#include <algorithm>
#include <array>
#include <tuple>

#include "tourney/constructions.hpp"
#include "tourney/parallel.hpp"

namespace tourney {
namespace {

void check_enumeration_size(int n) {
  if (n < 1 || n > kMaxEnumerationSize)
    throw UnsupportedSizeError("enumeration supports 1 <= n <= " +
                               std::to_string(kMaxEnumerationSize) + ", got n=" +
                               std::to_string(n));
}

Tournament extend(const Tournament& parent, std::uint32_t mask) {
  int m = parent.size();
  Tournament child(m + 1);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      if (parent.arc(i, j)) child.set_arc(i, j);
      else child.set_arc(j, i);
    }
  for (int i = 0; i < m; ++i) {
    if ((mask >> i) & 1) child.set_arc(i, m);
    else child.set_arc(m, i);
  }
  return child;
}

i128 pattern_count_small(const PatternId& pattern, const Tournament& t) {
  switch (pattern.tag()) {
    case PatternId::Tag::Custom:
      return count_pattern(pattern, t, 1);
    default: {
      Census c = census_bruteforce(t);
      switch (pattern.tag()) {
        case PatternId::Tag::TT3: return c.tt3;
        case PatternId::Tag::C3: return c.c3;
        case PatternId::Tag::TT4: return c.tt4;
        case PatternId::Tag::C3Plus: return c.c3plus;
        case PatternId::Tag::C3Minus: return c.c3minus;
        case PatternId::Tag::C4: return c.c4;
        default: break;
      }
    }
  }
  throw MalformedInputError("bad pattern tag");
}

}  // namespace

std::vector<CanonicalForm> enumerate_codes(int n, int threads) {
  check_enumeration_size(n);
  std::vector<u128> level = {0};  // the single vertex
  for (int m = 1; m < n; ++m) {
    auto chunks = parallel_chunks<std::vector<u128>>(
        static_cast<std::int64_t>(level.size()), threads,
        [&](std::int64_t begin, std::int64_t end) {
          std::vector<u128> local;
          for (std::int64_t p = begin; p < end; ++p) {
            Tournament parent = from_canonical(CanonicalForm{m, level[p]});
            for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
              Tournament child = extend(parent, mask);
              if (is_canonically_labeled(child)) local.push_back(identity_code(child));
            }
          }
          return local;
        });
    std::vector<u128> next;
    for (auto& ch : chunks) next.insert(next.end(), ch.begin(), ch.end());
    std::sort(next.begin(), next.end());
    level = std::move(next);
  }
  std::vector<CanonicalForm> out;
  out.reserve(level.size());
  for (u128 code : level) out.push_back(CanonicalForm{n, code});
  return out;
}

std::vector<Tournament> enumerate_tournaments(int n, int threads) {
  std::vector<CanonicalForm> codes = enumerate_codes(n, threads);
  std::vector<Tournament> out;
  out.reserve(codes.size());
  for (const CanonicalForm& cf : codes) out.push_back(from_canonical(cf));
  return out;
}

SearchResult exhaustive_max(const PatternId& pattern, int n, int threads) {
  check_enumeration_size(n);
  if (pattern.order() > n)
    throw UnsupportedSizeError("exhaustive_max: pattern larger than host");
  std::vector<CanonicalForm> classes = enumerate_codes(n, threads);

  struct Part {
    i128 best = -1;
    std::vector<CanonicalForm> arg;
  };
  auto parts = parallel_chunks<Part>(
      static_cast<std::int64_t>(classes.size()), threads,
      [&](std::int64_t begin, std::int64_t end) {
        Part part;
        for (std::int64_t i = begin; i < end; ++i) {
          Tournament t = from_canonical(classes[i]);
          i128 cnt = pattern_count_small(pattern, t);
          if (cnt > part.best) {
            part.best = cnt;
            part.arg.assign(1, classes[i]);
          } else if (cnt == part.best) {
            part.arg.push_back(classes[i]);
          }
        }
        return part;
      });

  SearchResult result{pattern, n, SearchMode::Exhaustive, -1, {}, {}, {}};
  for (Part& p : parts) {
    if (p.best > result.best_count) {
      result.best_count = p.best;
      result.maximizers = std::move(p.arg);
    } else if (p.best == result.best_count) {
      result.maximizers.insert(result.maximizers.end(), p.arg.begin(), p.arg.end());
    }
  }
  std::sort(result.maximizers.begin(), result.maximizers.end());
  return result;
}

namespace {

// bit position of the pair (positions pi < pj inside the sorted subset) in
// the row-major subset code
constexpr std::array<std::array<int, 4>, 4> kQuadPairBit = {{
    {-1, 5, 4, 3},
    {-1, -1, 2, 1},
    {-1, -1, -1, 0},
    {-1, -1, -1, -1},
}};
constexpr std::array<std::array<int, 3>, 3> kTriadPairBit = {{
    {-1, 2, 1},
    {-1, -1, 0},
    {-1, -1, -1},
}};

class Climber {
public:
  Climber(const PatternId& pattern, const LocalSearchOptions& opts, int n)
      : pattern_(pattern), opts_(opts), n_(n),
        budget_default_(opts.plateau_budget >= 0 ? opts.plateau_budget : 2 * n) {
    if (pattern_.tag() != PatternId::Tag::Custom) {
      named_ = true;
      order_ = pattern_.order();
      if (order_ == 3)
        tri_target_ = pattern_.tag() == PatternId::Tag::C3 ? TriadType::C3 : TriadType::TT3;
      else
        quad_target_ = pattern_.tag() == PatternId::Tag::TT4    ? QuadType::TT4
                       : pattern_.tag() == PatternId::Tag::C3Plus ? QuadType::C3Plus
                       : pattern_.tag() == PatternId::Tag::C3Minus ? QuadType::C3Minus
                                                                   : QuadType::C4;
    } else {
      order_ = pattern_.order();
      custom_target_ = canonical_form(pattern_.tournament());
    }
  }

  i128 count(const Tournament& t) const { return count_pattern(pattern_, t, 1); }

  struct Outcome {
    Tournament best;
    i128 count = 0;
    std::int64_t improving = 0;
    std::int64_t plateau = 0;
  };

  Outcome climb(Tournament t) const {
    i128 cur = count(t);
    std::int64_t improving = 0, plateau = 0;
    int budget = budget_default_;
    while (true) {
      auto [gain, kind, a, b] = best_move(t, cur);
      if (kind < 0) break;
      if (gain > 0) {
        apply_move(t, kind, a, b);
        cur += gain;
        ++improving;
        budget = budget_default_;
      } else if (gain == 0 && budget > 0) {
        apply_move(t, kind, a, b);
        ++plateau;
        --budget;
      } else {
        break;
      }
      if (opts_.audit) {
        i128 check = count(t);
        if (check != cur)
          throw std::logic_error("local_search audit: incremental count " +
                                 to_string(cur) + " != recount " + to_string(check));
      }
    }
    return Outcome{std::move(t), cur, improving, plateau};
  }

private:
  // move kinds: 0 = arc flip (a < b), 1 = delete a, duplicate b
  std::tuple<i128, int, int, int> best_move(const Tournament& t, i128 cur) const {
    i128 best_gain = -1;
    int kind = -1, ba = -1, bb = -1;
    bool stop = false;
    auto consider = [&](i128 g, int k, int a, int b) {
      if (g > best_gain) {
        best_gain = g;
        kind = k;
        ba = a;
        bb = b;
        if (opts_.first_improvement && g > 0) stop = true;
      }
    };
    if (opts_.use_arc_flip) {
      for (int i = 0; i < n_ && !stop; ++i)
        for (int j = i + 1; j < n_ && !stop; ++j)
          consider(flip_gain(t, i, j), 0, i, j);
    }
    if (opts_.use_duplicate_delete && !stop) {
      bool formula = named_ && (quad_target_ == QuadType::C3Plus ||
                                quad_target_ == QuadType::C3Minus) &&
                     order_ == 4;
      if (formula) {
        const bool reversed_host = quad_target_ == QuadType::C3Minus;
        Tournament host = reversed_host ? t.reversed() : t;
        VertexLoads loads = vertex_loads_c3plus(host, false, 1);
        for (int v = 0; v < n_ && !stop; ++v)
          for (int w = 0; w < n_ && !stop; ++w) {
            if (v == w) continue;
            i128 upper = loads.by_vertex[w] - loads.by_vertex[v];
            if (upper <= best_gain) continue;  // pair count only lowers it
            i128 g = upper - pair_count_c3plus(host, v, w);
            consider(g, 1, v, w);
          }
      } else {
        for (int v = 0; v < n_ && !stop; ++v)
          for (int w = 0; w < n_ && !stop; ++w) {
            if (v == w) continue;
            Tournament t2 = t.without_vertex(v).with_duplicated(w > v ? w - 1 : w);
            consider(count(t2) - cur, 1, v, w);
          }
      }
    }
    return {best_gain, kind, ba, bb};
  }

  void apply_move(Tournament& t, int kind, int a, int b) const {
    if (kind == 0) {
      if (t.arc(a, b)) t.set_arc(b, a);
      else t.set_arc(a, b);
    } else {
      t = t.without_vertex(a).with_duplicated(b > a ? b - 1 : b);
    }
  }

  i128 flip_gain(const Tournament& t, int i, int j) const {
    if (!named_) return flip_gain_custom(t, i, j);
    i128 delta = 0;
    if (order_ == 3) {
      for (int x = 0; x < n_; ++x) {
        if (x == i || x == j) continue;
        int s[3] = {i, j, x};
        std::sort(s, s + 3);
        int pi = static_cast<int>(std::find(s, s + 3, i) - s);
        int pj = static_cast<int>(std::find(s, s + 3, j) - s);
        if (pi > pj) std::swap(pi, pj);
        unsigned code = triad_code(t, s[0], s[1], s[2]);
        unsigned flipped = code ^ (1u << kTriadPairBit[pi][pj]);
        delta += (classify_triad_code(flipped) == tri_target_) -
                 (classify_triad_code(code) == tri_target_);
      }
      return delta;
    }
    for (int x = 0; x < n_; ++x) {
      if (x == i || x == j) continue;
      for (int y = x + 1; y < n_; ++y) {
        if (y == i || y == j) continue;
        int s[4] = {i, j, x, y};
        std::sort(s, s + 4);
        int pi = static_cast<int>(std::find(s, s + 4, i) - s);
        int pj = static_cast<int>(std::find(s, s + 4, j) - s);
        if (pi > pj) std::swap(pi, pj);
        unsigned code = quad_code(t, s[0], s[1], s[2], s[3]);
        unsigned flipped = code ^ (1u << kQuadPairBit[pi][pj]);
        delta += (classify_quad_code(flipped) == quad_target_) -
                 (classify_quad_code(code) == quad_target_);
      }
    }
    return delta;
  }

  i128 flip_gain_custom(const Tournament& t, int i, int j) const {
    Tournament flipped = t;
    if (flipped.arc(i, j)) flipped.set_arc(j, i);
    else flipped.set_arc(i, j);
    return count_through_pair(flipped, i, j) - count_through_pair(t, i, j);
  }

  i128 count_through_pair(const Tournament& t, int i, int j) const {
    // k-subsets containing both i and j
    int k = order_;
    if (k < 2) return 0;
    if (k == 2) return 1;
    std::vector<int> others;
    for (int v = 0; v < n_; ++v)
      if (v != i && v != j) others.push_back(v);
    std::vector<int> idx(k - 2);
    for (int p = 0; p < k - 2; ++p) idx[p] = p;
    i128 cnt = 0;
    if (k - 2 > static_cast<int>(others.size())) return 0;
    while (true) {
      std::vector<int> subset = {i, j};
      for (int p : idx) subset.push_back(others[p]);
      std::sort(subset.begin(), subset.end());
      if (canonical_form(t.induced(subset)) == custom_target_) ++cnt;
      int p = k - 3;
      while (p >= 0 && idx[p] == static_cast<int>(others.size()) - (k - 2 - p)) --p;
      if (p < 0) break;
      ++idx[p];
      for (int q = p + 1; q < k - 2; ++q) idx[q] = idx[q - 1] + 1;
    }
    return cnt;
  }

  PatternId pattern_;
  LocalSearchOptions opts_;
  int n_;
  int budget_default_;
  bool named_ = false;
  int order_ = 4;
  TriadType tri_target_ = TriadType::C3;
  QuadType quad_target_ = QuadType::C4;
  CanonicalForm custom_target_;
};

std::uint64_t mix_restart_seed(std::uint64_t seed, int restart) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(restart) + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

SearchResult local_search(const PatternId& pattern, int n,
                          const LocalSearchOptions& opts, int threads) {
  if (n < pattern.order())
    throw UnsupportedSizeError("local_search: pattern larger than host");
  Climber climber(pattern, opts, n);

  SearchResult result{pattern, n, SearchMode::Local, 0, {}, {}, SearchStats{}};
  result.stats->restarts = opts.restarts;
  if (opts.restarts <= 0) {
    // degenerate: report the seed start's own count, no moves
    Tournament t = random_tournament(n, mix_restart_seed(opts.seed, 0));
    result.best_count = climber.count(t);
    result.witness = std::move(t);
    return result;
  }

  using Outcome = std::vector<Climber::Outcome>;
  auto chunks = parallel_chunks<Outcome>(
      opts.restarts, threads, [&](std::int64_t begin, std::int64_t end) {
        Outcome out;
        for (std::int64_t r = begin; r < end; ++r) {
          Tournament start =
              random_tournament(n, mix_restart_seed(opts.seed, static_cast<int>(r)));
          out.push_back(climber.climb(std::move(start)));
        }
        return out;
      });

  int restart_index = 0;
  bool have = false;
  for (const Outcome& chunk : chunks)
    for (const Climber::Outcome& o : chunk) {
      result.stats->improving_moves += o.improving;
      result.stats->plateau_moves += o.plateau;
      if (!have || o.count > result.best_count) {
        have = true;
        result.best_count = o.count;
        result.witness = o.best;
        result.stats->best_restart = restart_index;
      }
      ++restart_index;
    }

  // never overstate: the reported count is a from-scratch recount
  i128 recount = climber.count(*result.witness);
  if (recount != result.best_count)
    throw std::logic_error("local_search: witness recount mismatch");
  return result;
}

std::vector<MaxTableRow> max_table(const PatternId& pattern, int n_lo, int n_hi,
                                   int threads) {
  if (n_lo > n_hi) throw MalformedInputError("max_table: empty range");
  if (n_lo < pattern.order())
    throw UnsupportedSizeError("max_table: range starts below the pattern order");
  std::vector<MaxTableRow> rows;
  for (int n = n_lo; n <= n_hi; ++n) {
    SearchResult r = exhaustive_max(pattern, n, threads);
    rows.push_back({n, r.best_count, r.density()});
  }
  return rows;
}

}  // namespace tourney

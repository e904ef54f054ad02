#include "tourney/census.hpp"

#include <algorithm>

#include "tourney/canonical.hpp"
#include "tourney/parallel.hpp"

namespace tourney {

Census census_bruteforce(const Tournament& t) {
  int n = t.size();
  Census c;
  c.n = n;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int x = b + 1; x < n; ++x) {
        if (classify_triad_code(triad_code(t, a, b, x)) == TriadType::C3) ++c.c3;
        else ++c.tt3;
      }
  if (n < 4) return c;
  c.has_quads = true;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int x = b + 1; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
          switch (classify_quad_code(quad_code(t, a, b, x, y))) {
            case QuadType::TT4: ++c.tt4; break;
            case QuadType::C3Plus: ++c.c3plus; break;
            case QuadType::C3Minus: ++c.c3minus; break;
            case QuadType::C4: ++c.c4; break;
          }
        }
  return c;
}

namespace {

struct FastParts {
  i128 tt3 = 0;
  i128 c3plus_fwd = 0;
  i128 c3plus_rev = 0;
};

// Cyclic triangles inside N+(v) of `host`, counted as (d choose 3) minus the
// transitive triples, each of which has a unique source u with both other
// vertices in N+(u) and N+(v).
i128 apex_cycles(const Tournament& host, int v) {
  auto row_v = host.out_row(v);
  i128 d = popcount_words(row_v);
  i128 cycles = binomial(d, 3);
  for (std::size_t w = 0; w < row_v.size(); ++w) {
    std::uint64_t m = row_v[w];
    while (m) {
      int u = static_cast<int>(w * 64) + __builtin_ctzll(m);
      m &= m - 1;
      i128 common = popcount_and(host.out_row(u), row_v);
      cycles -= binomial(common, 2);
    }
  }
  return cycles;
}

}  // namespace

Census census_fast(const Tournament& t, int threads) {
  int n = t.size();
  Census c;
  c.n = n;
  if (n < 3) {
    return c;
  }
  Tournament rev = t.reversed();
  auto parts = parallel_chunks<FastParts>(
      n, threads, [&](std::int64_t begin, std::int64_t end) {
        FastParts p;
        for (int v = static_cast<int>(begin); v < end; ++v) {
          p.tt3 += binomial(t.out_degree(v), 2);
          p.c3plus_fwd += apex_cycles(t, v);
          p.c3plus_rev += apex_cycles(rev, v);
        }
        return p;
      });
  FastParts sum;
  for (const FastParts& p : parts) {
    sum.tt3 += p.tt3;
    sum.c3plus_fwd += p.c3plus_fwd;
    sum.c3plus_rev += p.c3plus_rev;
  }
  c.tt3 = sum.tt3;
  c.c3 = binomial(n, 3) - c.tt3;
  if (n < 4) return c;
  c.has_quads = true;
  c.c3plus = sum.c3plus_fwd;
  c.c3minus = sum.c3plus_rev;
  i128 twice_c4 = c.c3 * (n - 3) - c.c3plus - c.c3minus;
  c.c4 = twice_c4 / 2;
  c.tt4 = binomial(n, 4) - c.c3plus - c.c3minus - c.c4;
  return c;
}

bool lifting_identities_hold(const Census& c) {
  if (!c.has_quads) return false;
  i128 lift_c3 = c.c3 * (c.n - 3);
  i128 lift_tt3 = c.tt3 * (c.n - 3);
  return lift_c3 == 2 * c.c4 + c.c3plus + c.c3minus &&
         lift_tt3 == 4 * c.tt4 + 3 * (c.c3plus + c.c3minus) + 2 * c.c4;
}

bool verify_lifting_identities(const Tournament& t, int threads) {
  return lifting_identities_hold(census_fast(t, threads));
}

DensityReport densities(const Census& c) {
  DensityReport r;
  r.n = c.n;
  i128 triples = binomial(c.n, 3);
  auto entry = [](i128 count, i128 total) {
    Rational exact(count, total > 0 ? total : 1);
    return DensityEntry{exact, exact.approx()};
  };
  r.tt3 = entry(c.tt3, triples);
  r.c3 = entry(c.c3, triples);
  r.has_quads = c.has_quads;
  if (c.has_quads) {
    i128 quads = binomial(c.n, 4);
    r.tt4 = entry(c.tt4, quads);
    r.c3plus = entry(c.c3plus, quads);
    r.c3minus = entry(c.c3minus, quads);
    r.c4 = entry(c.c4, quads);
  }
  return r;
}

namespace {

i128 count_named_pattern(PatternId::Tag tag, const Census& c) {
  switch (tag) {
    case PatternId::Tag::TT3: return c.tt3;
    case PatternId::Tag::C3: return c.c3;
    case PatternId::Tag::TT4: return c.tt4;
    case PatternId::Tag::C3Plus: return c.c3plus;
    case PatternId::Tag::C3Minus: return c.c3minus;
    case PatternId::Tag::C4: return c.c4;
    default: throw MalformedInputError("not a named pattern");
  }
}

i128 count_custom(const Tournament& pattern, const Tournament& t, int threads) {
  int k = pattern.size();
  int n = t.size();
  i128 subsets = binomial(n, k);
  if (subsets > i128{100000000})
    throw UnsupportedSizeError("count_pattern: " + to_string(subsets) +
                               " subsets exceeds the enumeration guard");
  CanonicalForm target = canonical_form(pattern);
  // degree-multiset prefilter: isomorphic tournaments share it
  std::vector<int> target_degs(k);
  for (int v = 0; v < k; ++v) target_degs[v] = pattern.out_degree(v);
  std::sort(target_degs.begin(), target_degs.end());

  // enumerate k-subsets in colex order, split by the largest element
  auto count_with_max = [&](int top) {
    i128 cnt = 0;
    std::vector<int> sel(k);
    sel[k - 1] = top;
    // iterate (k-1)-subsets of {0..top-1}
    for (int i = 0; i < k - 1; ++i) sel[i] = i;
    if (k - 1 > top) return cnt;
    while (true) {
      Tournament sub = t.induced(sel);
      std::vector<int> degs(k);
      for (int v = 0; v < k; ++v) degs[v] = sub.out_degree(v);
      std::sort(degs.begin(), degs.end());
      if (degs == target_degs && canonical_form(sub) == target) ++cnt;
      int i = k - 2;
      while (i >= 0 && sel[i] == top - (k - 1 - i)) --i;
      if (i < 0) break;
      ++sel[i];
      for (int j = i + 1; j < k - 1; ++j) sel[j] = sel[j - 1] + 1;
    }
    return cnt;
  };

  auto parts = parallel_chunks<i128>(n, threads, [&](std::int64_t begin, std::int64_t end) {
    i128 cnt = 0;
    for (int top = static_cast<int>(begin); top < end; ++top) cnt += count_with_max(top);
    return cnt;
  });
  i128 total = 0;
  for (i128 p : parts) total += p;
  return total;
}

}  // namespace

i128 count_pattern(const PatternId& pattern, const Tournament& t, int threads) {
  int k = pattern.order();
  if (k > t.size()) return 0;
  if (pattern.tag() != PatternId::Tag::Custom) {
    Census c = census_fast(t, threads);
    return count_named_pattern(pattern.tag(), c);
  }
  return count_custom(pattern.tournament(), t, threads);
}

VertexLoads vertex_loads_c3plus(const Tournament& t, bool with_pairs, int threads) {
  int n = t.size();
  VertexLoads loads;
  loads.by_vertex.assign(n, 0);
  loads.apex_part.assign(n, 0);
  loads.cycle_part.assign(n, 0);
  if (with_pairs) {
    // full 4-subset scan fills loads and pairs together; O(n^4)
    loads.pair_counts.emplace(static_cast<std::size_t>(n) * n, 0);
    auto& pairs = *loads.pair_counts;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int x = b + 1; x < n; ++x)
          for (int y = x + 1; y < n; ++y) {
            unsigned code = quad_code(t, a, b, x, y);
            if (classify_quad_code(code) != QuadType::C3Plus) continue;
            int q[4] = {a, b, x, y};
            for (int u : q) ++loads.by_vertex[u];
            for (int i = 0; i < 4; ++i)
              for (int j = i + 1; j < 4; ++j) {
                ++pairs[static_cast<std::size_t>(q[i]) * n + q[j]];
                ++pairs[static_cast<std::size_t>(q[j]) * n + q[i]];
              }
            // apex is the vertex of out-degree 3 within the subset
            for (int i = 0; i < 4; ++i) {
              int dv = 0;
              for (int j = 0; j < 4; ++j)
                if (j != i && t.arc(q[i], q[j])) ++dv;
              if (dv == 3) ++loads.apex_part[q[i]];
              else ++loads.cycle_part[q[i]];
            }
          }
    return loads;
  }

  Tournament rev = t.reversed();
  struct Part {
    std::vector<i128> apex, cycle;
  };
  auto parts = parallel_chunks<Part>(n, threads, [&](std::int64_t begin, std::int64_t end) {
    Part p;
    p.apex.assign(n, 0);
    p.cycle.assign(n, 0);
    std::vector<std::uint64_t> tmp(static_cast<std::size_t>(t.words()));
    for (int v = static_cast<int>(begin); v < end; ++v) {
      p.apex[v] = apex_cycles(t, v);
      // cycle role: v -> x -> y -> v with every common dominator of {v,x,y}
      // as the apex
      auto in_v = rev.out_row(v);
      auto out_v = t.out_row(v);
      for (std::size_t w = 0; w < out_v.size(); ++w) {
        std::uint64_t mx = out_v[w];
        while (mx) {
          int x = static_cast<int>(w * 64) + __builtin_ctzll(mx);
          mx &= mx - 1;
          auto out_x = t.out_row(x);
          auto in_x = rev.out_row(x);
          for (int ww = 0; ww < t.words(); ++ww)
            tmp[ww] = out_x[ww] & in_v[ww];  // y with x->y and y->v
          for (int ww = 0; ww < t.words(); ++ww) {
            std::uint64_t my = tmp[ww];
            while (my) {
              int y = ww * 64 + __builtin_ctzll(my);
              my &= my - 1;
              auto in_y = rev.out_row(y);
              i128 dominators = 0;
              for (int w2 = 0; w2 < t.words(); ++w2)
                dominators += __builtin_popcountll(in_v[w2] & in_x[w2] & in_y[w2]);
              p.cycle[v] += dominators;
            }
          }
        }
      }
    }
    return p;
  });
  for (const Part& p : parts)
    for (int v = 0; v < n; ++v) {
      loads.apex_part[v] += p.apex[v];
      loads.cycle_part[v] += p.cycle[v];
    }
  for (int v = 0; v < n; ++v)
    loads.by_vertex[v] = loads.apex_part[v] + loads.cycle_part[v];
  return loads;
}

i128 pair_count_c3plus(const Tournament& t, int v, int w) {
  int n = t.size();
  if (v == w || v < 0 || w < 0 || v >= n || w >= n)
    throw MalformedInputError("pair_count_c3plus: need two distinct vertices");
  i128 cnt = 0;
  for (int x = 0; x < n; ++x) {
    if (x == v || x == w) continue;
    for (int y = x + 1; y < n; ++y) {
      if (y == v || y == w) continue;
      int q[4] = {v, w, x, y};
      std::sort(q, q + 4);
      if (classify_quad_code(quad_code(t, q[0], q[1], q[2], q[3])) == QuadType::C3Plus)
        ++cnt;
    }
  }
  return cnt;
}

}  // namespace tourney

#include "tourney/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "tourney/canonical.hpp"
#include "tourney/constants.hpp"
#include "tourney/numeric.hpp"

namespace tourney {

Tournament transitive(int n) {
  return Tournament(n);  // the default orientation is the transitive order
}

Tournament carousel(int n) {
  if (n < 3) throw MalformedInputError("carousel: n must be >= 3");
  if (n % 2 == 0) return carousel(n + 1).without_vertex(n);
  int half = (n - 1) / 2;
  Tournament t(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int diff = j - i;
      if (diff <= half) t.set_arc(i, j);
      else t.set_arc(j, i);
    }
  return t;
}

std::vector<Tournament> carousel_class(int n) {
  if (n < 3) throw MalformedInputError("carousel_class: n must be >= 3");
  if (n > kMaxCanonicalSize)
    throw UnsupportedSizeError("carousel_class: isomorphism dedup needs n <= 16");
  if (n % 2 == 1) return {canonicalized(carousel(n))};
  int half = n / 2;
  std::set<CanonicalForm> seen;
  for (std::uint32_t mask = 0; mask < (1u << half); ++mask) {
    Tournament t(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        int diff = j - i;
        if (diff < half) t.set_arc(i, j);
        else if (diff > half) t.set_arc(j, i);
        else if ((mask >> i) & 1) t.set_arc(i, j);
        else t.set_arc(j, i);
      }
    seen.insert(canonical_form(t));
  }
  std::vector<Tournament> out;
  out.reserve(seen.size());
  for (const CanonicalForm& cf : seen) out.push_back(from_canonical(cf));
  return out;
}

bool is_locally_transitive_balanced(const Tournament& t) {
  int n = t.size();
  std::vector<std::uint64_t> mask(static_cast<std::size_t>(t.words()));
  Tournament rev = t.reversed();
  for (int v = 0; v < n; ++v) {
    int d = t.out_degree(v);
    if (2 * d < n - 2 || 2 * d > n) return false;
    const Tournament* hosts[2] = {&t, &rev};
    for (const Tournament* host : hosts) {
      auto row = host->out_row(v);
      // cyclic triple inside the neighborhood iff triples != sum of
      // within-neighborhood (out-degree choose 2)
      i128 sub_tt3 = 0;
      int size = popcount_words(row);
      for (std::size_t w = 0; w < row.size(); ++w) {
        std::uint64_t m = row[w];
        while (m) {
          int u = static_cast<int>(w * 64) + __builtin_ctzll(m);
          m &= m - 1;
          sub_tt3 += binomial(popcount_and(t.out_row(u), row), 2);
        }
      }
      if (sub_tt3 != binomial(size, 3)) return false;
    }
  }
  return true;
}

std::uint64_t pair_bit(std::uint64_t seed, std::uint32_t i, std::uint32_t j) {
  // splitmix64 finalizer over a per-pair counter; the pair index keys the
  // stream so generation order never matters
  std::uint64_t z = seed + ((static_cast<std::uint64_t>(i) << 32) | j) *
                               0x9E3779B97F4A7C15ULL +
                    0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z >> 63;
}

Tournament random_tournament(int n, std::uint64_t seed) {
  Tournament t(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (pair_bit(seed, static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)))
        t.set_arc(i, j);
      else
        t.set_arc(j, i);
    }
  return t;
}

double BlowupSpec::resolved_alpha() const {
  return alpha ? *alpha : static_cast<double>(blowup_alpha_closed());
}

void BlowupSpec::validate() const {
  if (n < 1) throw MalformedInputError("blowup: n must be >= 1");
  if (base_cutoff < 1) throw MalformedInputError("blowup: base_cutoff must be >= 1");
  double a = resolved_alpha();
  if (!(a >= 0.0 && a < 1.0))
    throw MalformedInputError("blowup: alpha must lie in [0, 1)");
}

namespace {
BlowupLayout make_layout(const BlowupSpec& spec) {
  spec.validate();
  double a = spec.resolved_alpha();
  BlowupLayout layout;
  int m = spec.n;
  int level = 0;
  // peel random blocks from the outside in; record them in reverse below
  std::vector<BlowupLayout::Block> peeled;
  while (m >= spec.base_cutoff) {
    int h = static_cast<int>(std::ceil(a * m));
    if (h >= m) h = m - 1;  // alpha close to 1 still has to shrink
    if (h <= 0) {
      peeled.push_back({0, m, true, level});
      m = 0;
      break;
    }
    peeled.push_back({h, m - h, true, level});
    m = h;
    ++level;
  }
  if (m > 0) peeled.push_back({0, m, false, level});
  layout.depth = peeled.back().level;
  layout.blocks.assign(peeled.rbegin(), peeled.rend());
  layout.level_of_vertex.assign(spec.n, 0);
  for (const auto& b : peeled)
    for (int v = b.start; v < b.start + b.len; ++v) layout.level_of_vertex[v] = b.level;
  return layout;
}

}  // namespace

BlowupLayout blowup_layout(const BlowupSpec& spec) { return make_layout(spec); }

Tournament iterated_blowup(const BlowupSpec& spec) {
  BlowupLayout layout = make_layout(spec);
  // the transitive default already orients every cross-block pair downward
  // (lower index = deeper block dominates) and fills the base block
  Tournament t(spec.n);
  for (const auto& b : layout.blocks) {
    if (!b.random) continue;
    for (int i = b.start; i < b.start + b.len; ++i)
      for (int j = i + 1; j < b.start + b.len; ++j) {
        if (pair_bit(spec.seed, static_cast<std::uint32_t>(i),
                     static_cast<std::uint32_t>(j)))
          t.set_arc(i, j);
        else
          t.set_arc(j, i);
      }
  }
  return t;
}

std::vector<int> blowup_levels(const BlowupSpec& spec) {
  return make_layout(spec).level_of_vertex;
}

}  // namespace tourney

#include "tourney/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "tourney/canonical.hpp"
#include "tourney/constants.hpp"

namespace tourney {

i128 c4_max_formula(int n) {
  if (n < 4) throw MalformedInputError("c4_max_formula: needs n >= 4");
  i128 nn = n;
  i128 numerator =
      n % 2 == 1 ? nn * (nn * nn - 1) * (nn - 3) : nn * (nn * nn - 4) * (nn - 3);
  if (numerator % 48 != 0)
    throw std::logic_error("c4_max_formula: numerator not divisible by 48");
  return numerator / 48;
}

namespace {

long double objective_ld(long double a) {
  long double one = 1.0L - a;
  return (a * one * one * one + one * one * one * one / 8.0L) /
         (1.0L - a * a * a * a);
}

}  // namespace

double alpha_objective(double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0))
    throw MalformedInputError("alpha_objective: alpha must lie in [0, 1)");
  return static_cast<double>(objective_ld(static_cast<long double>(alpha)));
}

AlphaResult optimize_alpha(double tol) {
  if (!(tol > 0.0)) throw MalformedInputError("optimize_alpha: tol must be positive");
  constexpr int kScanPoints = 10000;
  const long double lo_end = 0.0L, hi_end = 1.0L - 1e-7L;

  // unimodality scan: exactly one rise-to-fall sign change
  int peak = 0;
  long double peak_val = objective_ld(lo_end);
  std::vector<long double> vals(kScanPoints + 1);
  for (int i = 0; i <= kScanPoints; ++i) {
    long double x = lo_end + (hi_end - lo_end) * i / kScanPoints;
    vals[static_cast<std::size_t>(i)] = objective_ld(x);
    if (vals[static_cast<std::size_t>(i)] > peak_val) {
      peak_val = vals[static_cast<std::size_t>(i)];
      peak = i;
    }
  }
  for (int i = 1; i <= kScanPoints; ++i) {
    bool rising_expected = i <= peak;
    long double diff = vals[static_cast<std::size_t>(i)] - vals[static_cast<std::size_t>(i - 1)];
    if (rising_expected ? diff < 0 : diff > 0)
      throw std::logic_error("optimize_alpha: unimodality scan failed");
  }

  long double lo = lo_end + (hi_end - lo_end) * std::max(0, peak - 1) / kScanPoints;
  long double hi = lo_end + (hi_end - lo_end) * std::min(kScanPoints, peak + 1) / kScanPoints;
  const long double inv_phi = 0.6180339887498948482L;
  long double x1 = hi - (hi - lo) * inv_phi;
  long double x2 = lo + (hi - lo) * inv_phi;
  long double f1 = objective_ld(x1), f2 = objective_ld(x2);
  int iterations = 0;
  while (hi - lo > static_cast<long double>(tol) / 2) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + (hi - lo) * inv_phi;
      f2 = objective_ld(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - (hi - lo) * inv_phi;
      f1 = objective_ld(x1);
    }
    ++iterations;
  }

  AlphaResult r;
  long double mid = (lo + hi) / 2;
  r.alpha_star = static_cast<double>(mid);
  r.value = static_cast<double>(objective_ld(mid));
  r.closed_alpha = static_cast<double>(blowup_alpha_closed());
  r.closed_value = static_cast<double>(c3plus_limit_closed());
  r.iterations = iterations;
  r.bracket_width = static_cast<double>(hi - lo);
  return r;
}

double construction_density_prediction(const BlowupSpec& spec) {
  BlowupLayout layout = blowup_layout(spec);
  long double expected = 0.0L;
  auto choose = [](long double m, int k) {
    long double r = 1.0L;
    for (int i = 0; i < k; ++i) r *= (m - i) / (i + 1);
    return m >= k ? r : 0.0L;
  };
  for (const auto& b : layout.blocks) {
    if (!b.random) continue;  // the transitive base holds no cycles
    long double len = b.len;
    long double deeper = b.start;  // every lower index dominates the block
    expected += choose(len, 4) / 8.0L + deeper * choose(len, 3) / 4.0L;
  }
  long double quads = choose(static_cast<long double>(spec.n), 4);
  return quads > 0 ? static_cast<double>(expected / quads) : 0.0;
}

std::vector<Theorem1Row> theorem1_verify(int n_max, int threads) {
  if (n_max < 4 || n_max > kMaxEnumerationSize)
    throw UnsupportedSizeError("theorem1_verify: needs 4 <= n_max <= 9");
  std::vector<Theorem1Row> rows;
  for (int n = 4; n <= n_max; ++n) {
    SearchResult r = exhaustive_max(PatternId::c4(), n, threads);
    Theorem1Row row;
    row.n = n;
    row.formula = c4_max_formula(n);
    row.best_count = r.best_count;
    row.count_match = row.formula == row.best_count;
    std::vector<CanonicalForm> expected;
    for (const Tournament& t : carousel_class(n)) expected.push_back(canonical_form(t));
    std::sort(expected.begin(), expected.end());
    row.set_match = expected == r.maximizers;
    row.maximizer_count = r.maximizers.size();
    row.class_size = expected.size();
    rows.push_back(row);
  }
  return rows;
}

}  // namespace tourney

#include "tourney/diagnostics.hpp"

#include <algorithm>
#include <cmath>

#include "tourney/parallel.hpp"

namespace tourney {

double default_audit_tol(int n) { return 4.0 / std::sqrt(static_cast<double>(n)); }

DegreeHistogram degree_report(const Tournament& t, double bin_width) {
  if (!(bin_width > 0.0 && bin_width <= 1.0))
    throw MalformedInputError("degree_report: bin width must be in (0, 1]");
  int n = t.size();
  DegreeHistogram h;
  h.n = n;
  h.bin_width = bin_width;
  h.out_degrees.resize(n);
  h.bin_counts.assign(static_cast<std::size_t>(std::floor(1.0 / bin_width)) + 1, 0);
  Rational low = band_low_edge(), mid = band_mid_edge(), high = band_high_edge();
  for (int v = 0; v < n; ++v) {
    int d = t.out_degree(v);
    h.out_degrees[v] = d;
    double x = static_cast<double>(d) / n;
    std::size_t bin = static_cast<std::size_t>(x / bin_width);
    if (bin >= h.bin_counts.size()) bin = h.bin_counts.size() - 1;
    ++h.bin_counts[bin];
    Rational deg(d, n);
    int band;
    if (deg <= low) band = 0;
    else if (deg < mid) band = 1;
    else if (deg <= high) band = 2;
    else band = 3;
    ++h.band_counts[static_cast<std::size_t>(band)];
    if (band == 0 || band == 2) h.forbidden_vertices.push_back(v);
  }
  return h;
}

Partition detect_cut(const Tournament& t, Rational threshold) {
  int n = t.size();
  Partition p;
  p.threshold = threshold;
  std::vector<bool> is_high(n, false);
  for (int v = 0; v < n; ++v) {
    if (Rational(t.out_degree(v), n) > threshold) {
      is_high[v] = true;
      p.high.push_back(v);
    } else {
      p.low.push_back(v);
    }
  }
  for (int x : p.low)
    for (int y : p.high)
      if (t.arc(x, y)) p.cut_violations.emplace_back(x, y);
  p.low_fraction = Rational(static_cast<i128>(p.low.size()), n);
  return p;
}

QRScore qr_score(const Tournament& t, std::optional<double> tol, int threads) {
  if (t.size() < 4) throw UnsupportedSizeError("qr_score: needs n >= 4");
  Census c = census_fast(t, threads);
  QRScore s;
  i128 triples = binomial(c.n, 3), quads = binomial(c.n, 4);
  s.c3_dev = (Rational(c.c3, triples) - Rational(1, 4)).abs();
  s.c3plus_dev = (Rational(c.c3plus, quads) - Rational(1, 8)).abs();
  s.c4_dev = (Rational(c.c4, quads) - Rational(3, 8)).abs();
  s.c3minus_dev = (Rational(c.c3minus, quads) - Rational(1, 8)).abs();
  s.tol = tol.value_or(default_audit_tol(c.n));
  s.quasirandom = s.c3_dev.approx() <= s.tol && s.c3plus_dev.approx() <= s.tol &&
                  s.c4_dev.approx() <= s.tol && s.c3minus_dev.approx() <= s.tol;
  return s;
}

InequalityAudit audit_inequalities(const Tournament& t, std::optional<double> tol,
                                   int threads) {
  if (t.size() < 4) throw UnsupportedSizeError("audit_inequalities: needs n >= 4");
  Census c = census_fast(t, threads);
  InequalityAudit a;
  a.tol = tol.value_or(default_audit_tol(c.n));
  Rational dc3(c.c3, binomial(c.n, 3));
  Rational dc3plus(c.c3plus, binomial(c.n, 4));
  a.main_combo = Rational(3, 1) * dc3plus + Rational(2, 1) * dc3;
  a.main_margin = a.main_combo - Rational(7, 8);
  a.main_within = a.main_margin.approx() <= a.tol;
  a.c3plus_density = dc3plus;
  a.upper_margin = dc3plus - Rational(157500672, 1000000000);
  a.upper_within = a.upper_margin.approx() <= a.tol;
  return a;
}

SymmetrizationGap symmetrization_gaps(const Tournament& t, int threads) {
  int n = t.size();
  if (n < 4) throw UnsupportedSizeError("symmetrization_gaps: needs n >= 4");
  VertexLoads loads = vertex_loads_c3plus(t, false, threads);
  SymmetrizationGap g;
  bool have = false;
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w) {
      if (v == w) continue;
      i128 upper = loads.by_vertex[w] - loads.by_vertex[v];
      if (have && upper <= g.max_gain) continue;  // the pair count only lowers it
      i128 gain = upper - pair_count_c3plus(t, v, w);
      if (!have || gain > g.max_gain) {
        have = true;
        g.max_gain = gain;
        g.delete_vertex = v;
        g.copy_vertex = w;
      }
    }
  return g;
}

}  // namespace tourney

#pragma once

#include <array>
#include <optional>
#include <vector>

#include "tourney/census.hpp"
#include "tourney/numeric.hpp"
#include "tourney/tournament.hpp"

namespace tourney {

// Band endpoints and thresholds are stored as exact rationals built from the
// literal decimal constants, so membership tests are integer comparisons.
inline Rational band_low_edge() { return Rational(416, 1000); }
inline Rational band_mid_edge() { return Rational(44057, 100000); }
inline Rational band_high_edge() { return Rational(8849, 10000); }

/// Default tolerance for asymptotic-claim audits at finite n: the binomial
/// fluctuation scale of the random parts.
double default_audit_tol(int n);

/// Normalized out-degree distribution split into the four bands
/// [0, 0.416], (0.416, 0.44057), [0.44057, 0.8849], (0.8849, 1].
/// The first and third are forbidden for extremal hosts.
struct DegreeHistogram {
  int n = 0;
  double bin_width = 0.01;
  std::vector<int> out_degrees;
  std::vector<int> bin_counts;  // histogram of d/n, floor(x / bin_width)
  std::array<int, 4> band_counts{};
  std::vector<int> forbidden_vertices;  // members of bands 0 and 2

  double outside_forbidden_fraction() const {
    return n == 0 ? 0.0
                  : 1.0 - static_cast<double>(band_counts[0] + band_counts[2]) / n;
  }
};

DegreeHistogram degree_report(const Tournament& t, double bin_width = 0.01);

/// Degree-threshold split with the full list of arcs violating high -> low.
struct Partition {
  Rational threshold;
  std::vector<int> high, low;
  std::vector<std::pair<int, int>> cut_violations;  // arcs x->y, x in L, y in H
  Rational low_fraction;

  bool low_fraction_below_six_sevenths() const {
    return low_fraction < Rational(6, 7);
  }
};

Partition detect_cut(const Tournament& t, Rational threshold = band_high_edge());

/// Deviations of the 3/4-vertex densities from the random-tournament values
/// (1/4, 1/8, 3/8, 1/8); the quasi-randomness verdict is at the caller's
/// tolerance.
struct QRScore {
  Rational c3_dev, c3plus_dev, c4_dev, c3minus_dev;
  double tol = 0.0;
  bool quasirandom = false;
};

QRScore qr_score(const Tournament& t, std::optional<double> tol = std::nullopt,
                 int threads = 0);

/// Margins against the asymptotic inequalities; pure report, exact rationals,
/// never clamped. Positive margins at small n are expected output, not
/// errors.
struct InequalityAudit {
  Rational main_combo;     // 3 i(C3+) + 2 i(C3)
  Rational main_margin;    // main_combo - 7/8
  bool main_within = false;
  Rational c3plus_density;
  Rational upper_margin;   // i(C3+) - 0.157500672
  bool upper_within = false;
  double tol = 0.0;
};

InequalityAudit audit_inequalities(const Tournament& t,
                                   std::optional<double> tol = std::nullopt,
                                   int threads = 0);

/// Exact maximum over ordered pairs (v, w) of the delete-v / copy-w gain
/// C3+(w) - C3+(v) - C3+(v,w); non-positive on tournaments extremal for C3+
/// at their size.
struct SymmetrizationGap {
  i128 max_gain = 0;
  int delete_vertex = -1;
  int copy_vertex = -1;
};

SymmetrizationGap symmetrization_gaps(const Tournament& t, int threads = 0);

}  // namespace tourney

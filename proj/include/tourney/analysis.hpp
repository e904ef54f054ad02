#pragma once

#include <vector>

#include "tourney/constructions.hpp"
#include "tourney/numeric.hpp"
#include "tourney/search.hpp"

namespace tourney {

/// Exact maximum number of induced C4 on n vertices:
/// n(n^2-1)(n-3)/48 for odd n, n(n^2-4)(n-3)/48 for even n. n >= 4.
i128 c4_max_formula(int n);

/// The limiting C3+ density of the two-block construction at mix alpha:
/// (alpha(1-alpha)^3 + (1-alpha)^4/8) / (1 - alpha^4), on [0, 1).
double alpha_objective(double alpha);

struct AlphaResult {
  double alpha_star = 0.0;
  double value = 0.0;
  double closed_alpha = 0.0;
  double closed_value = 0.0;
  int iterations = 0;
  double bracket_width = 0.0;
};

/// Golden-section maximization of alpha_objective on [0, 1). Unimodality is
/// verified first by a 10^4-point scan (a guard against implementation bugs,
/// not an assumption). The result lands within tol of the closed form.
AlphaResult optimize_alpha(double tol);

/// Expected C3+ density of the construction, from its exact integer block
/// sizes: random blocks contribute (l choose 4)/8 internally plus
/// deeper * (l choose 3)/4 for dominated triangles. Matches the measured
/// census up to random fluctuation, and tends to alpha_objective(alpha)
/// as n grows.
double construction_density_prediction(const BlowupSpec& spec);

struct Theorem1Row {
  int n = 0;
  i128 formula = 0;
  i128 best_count = 0;
  bool count_match = false;
  bool set_match = false;
  std::size_t maximizer_count = 0;
  std::size_t class_size = 0;
};

/// For each n in 4..n_max: the exhaustive C4 maximum equals the closed form
/// and the maximizer set equals the carousel class. 4 <= n_max <= 9.
std::vector<Theorem1Row> theorem1_verify(int n_max, int threads = 0);

}  // namespace tourney

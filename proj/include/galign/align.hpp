#pragma once

#include <cstddef>
#include <vector>

#include "galign/eig.hpp"
#include "galign/rotor.hpp"
#include "galign/vec.hpp"

namespace galign {

struct WeightedPair {
  Vec3 u;  // target-frame point
  Vec3 v;  // source-frame point
  double w = 1.0;
};

// Direct measurement of the rotor (a prior on the rotation).
struct RotorMeasurement {
  ga::Rotor s;
  double w = 1.0;
};

struct AlignmentProblem {
  std::vector<WeightedPair> pairs;
  std::vector<RotorMeasurement> priors;
};

// Weighted centroids and the mixed second moment of a problem, plus the
// prior accumulators: sum_j w_j reverse(S_j)^2 = g - I h.
struct Summary {
  Vec3 u_bar{};
  Vec3 v_bar{};
  double w_total = 0.0;
  Mat3 z{};  // sum_i w_i (v_i - v_bar)(u_i - u_bar)^T
  double g = 0.0;
  Vec3 h{};
  std::size_t n_pairs = 0;
  std::size_t n_priors = 0;
};

struct SummarizeOptions {
  // 0 = one thread per hardware core. GA_ALIGN_THREADS, when set to a
  // positive integer, caps the count either way.
  int threads = 0;
  // Pairs per reduction leaf. Partial sums are combined over a fixed binary
  // tree of chunk indices, so results are bitwise-stable across thread
  // counts for a given chunk size.
  std::size_t chunk = 8192;
};

struct RotationSolution {
  ga::Rotor rotor;
  double lambda = 0.0;
  double gap = 0.0;
};

struct PriorOnlySolution {
  ga::Rotor rotor;
  double lambda = 0.0;
};

struct AlignmentSolution {
  ga::Rotor rotor;
  Vec3 translation{};
  double lambda_max = 0.0;
  double cost = 0.0;
  double eigen_gap = 0.0;
  bool ambiguous = false;
  std::size_t n_pairs = 0;
  std::size_t n_priors = 0;
};

// Single linear pass over the data. Throws EmptyProblem when there are
// neither pairs nor priors, NonPositiveWeight on any w <= 0.
Summary summarize(const AlignmentProblem& problem, const SummarizeOptions& options = {});

// The symmetric 4x4 data matrix
//   [ tr(Z)+g   (x+h)^T            ]
//   [ x+h       Z+Z^T-(tr(Z)+g) 1  ]
// with x = (z32-z23, z13-z31, z21-z12) in 1-based index notation.
eig::Sym4 build_k(const Summary& s);

// Same matrix, but the point part is assembled columnwise from geometric
// products of the centered vectors with the unit bivectors. Slower; kept as
// an independent construction of build_k.
eig::Sym4 build_k_ga(const AlignmentProblem& problem);

// Dominant eigenpair of K as a rotor plus diagnostics.
RotationSolution solve_rotation(const eig::Sym4& k);

// t = v_bar - reverse(R) u_bar R. Throws NoPointData when the summary was
// built without pairs.
Vec3 solve_translation(const ga::Rotor& rotor, const Summary& s);

// Closed form for the prior-only eigenproblem [[g, h^T], [h, -g 1]].
// Throws ZeroPrior when (g, h) = (0, 0) and DegeneratePrior when h = 0 with
// g < 0 (every 180-degree rotor is then optimal).
PriorOnlySolution solve_prior_only(double g, const Vec3& h);

// sum_i w_i |u_i - R (v_i - t) R~|^2
double cost(const ga::Rotor& rotor, const Vec3& t, const std::vector<WeightedPair>& pairs);

AlignmentSolution solve(const AlignmentProblem& problem, const SummarizeOptions& options = {});

}  // namespace galign

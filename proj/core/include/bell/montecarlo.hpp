#pragma once

#include <array>
#include <cstdint>

#include "bell/determinize.hpp"
#include "bell/inequality.hpp"
#include "bell/model.hpp"

namespace bell {

// Default seed for bare runs, so unseeded invocations are still reproducible.
inline constexpr std::uint64_t kDefaultSeed = 0xB311;

// Monte Carlo execution plan. worker_hint is advisory only: every trial draws
// from a counter-based stream keyed by (seed, stream, trial index) and workers
// accumulate exact integer counts, so results are bit-identical for any
// worker count or partitioning.
struct MCPlan {
  std::uint64_t trials = 1'000'000;
  std::uint64_t seed = kDefaultSeed;
  unsigned worker_hint = 1;
};

// A Bernoulli proportion estimate with its plug-in standard error.
struct Estimate {
  double value = 0.0;
  double std_error = 0.0;  // sqrt(p(1-p)/n)
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};

enum class Wing { One = 1, Two = 2 };

// Lambda-model estimators. Outcomes are drawn per trial from the lambda-level
// four-cell joint distribution (see draw_pair_outcome), which realizes
// non-factorable joints; for factorable models this coincides in distribution
// with two independent Bernoulli draws.
Estimate estimate_singles(const Model& m, Wing wing, const Setting& s, const MCPlan& plan);
Estimate estimate_joint(const Model& m, const Setting& a, const Setting& b,
                        const MCPlan& plan);

struct CHEstimate {
  // satisfied is judged with tolerance = std_error around the bounds.
  CHVerdict verdict;
  double std_error = 0.0;          // six term errors combined in quadrature
  std::array<Estimate, 6> terms;   // p12 at (a,b) (a,b') (a',b) (a',b') (a',inf) (inf,b)
};

// Estimates the six CH probabilities on independent substreams, each with
// plan.trials trials, and combines them into the statistic.
CHEstimate estimate_ch(const Model& m, const Setting& a, const Setting& a_prime,
                       const Setting& b, const Setting& b_prime, const MCPlan& plan);

// Ensemble-level Monte Carlo for predictions without a lambda space (the
// quantum oracle): each CH term is a Bernoulli draw at its ensemble
// probability.
CHEstimate estimate_ch(const EnsemblePrediction& pred, const Setting& a,
                       const Setting& a_prime, const Setting& b,
                       const Setting& b_prime, const MCPlan& plan);

// Determinized-model estimators: identical contracts, outcomes produced by
// the binary responses.
Estimate estimate_singles(const DeterminizedModel& det, Wing wing, const Setting& s,
                          const MCPlan& plan);
Estimate estimate_joint(const DeterminizedModel& det, const Setting& a,
                        const Setting& b, const MCPlan& plan);
CHEstimate estimate_ch(const DeterminizedModel& det, const Setting& a,
                       const Setting& a_prime, const Setting& b,
                       const Setting& b_prime, const MCPlan& plan);

}  // namespace bell

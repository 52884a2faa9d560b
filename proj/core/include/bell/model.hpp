#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bell/errors.hpp"
#include "bell/philox.hpp"
#include "bell/quadrature.hpp"
#include "bell/setting.hpp"

namespace bell {

// A draw from the hidden-variable space: a row index for discrete spaces,
// a coordinate for continuous ones. Weights live in the sampler, not here.
struct HiddenSample {
  std::size_t index = 0;
  double value = 0.0;
};

// The distribution rho(lambda) of the hidden state: either a finite list of
// weighted values (exact summation) or a polarization angle uniform on
// [0, pi) (sampling plus quadrature).
class LambdaSpace {
 public:
  static LambdaSpace discrete(std::vector<double> weights);
  static LambdaSpace uniform_angle();

  bool is_discrete() const { return discrete_; }
  std::size_t size() const;              // discrete only
  double weight(std::size_t row) const;  // discrete only

  HiddenSample sample(TrialStream& rng) const;

  // E[g(lambda)]: exact weighted sum for discrete spaces, composite midpoint
  // quadrature over [0, pi) for the continuous one.
  double expect(const std::function<double(const HiddenSample&)>& g,
                const IntegrationPlan& plan) const;

 private:
  LambdaSpace() = default;
  bool discrete_ = false;
  std::vector<double> weights_;
  std::vector<double> cumulative_;
};

// The settings a model wing answers for: an explicit list (labels or fixed
// angles) or any polarizer angle. Removed is always accepted.
class SettingDomain {
 public:
  static SettingDomain of(std::vector<Setting> settings);
  static SettingDomain any_angle();

  bool contains(const Setting& s) const;
  bool is_enumerable() const { return !any_angle_; }
  const std::vector<Setting>& listed() const { return settings_; }

  // Settings used by sampling-based checks and as CLI defaults: the explicit
  // list, or four spread-out polarizer angles for continuous domains.
  std::vector<Setting> probes() const;

 private:
  SettingDomain() = default;
  bool any_angle_ = false;
  std::vector<Setting> settings_;
};

// A local hidden-variable model: lambda sampler plus per-lambda detection
// probabilities. The lambda-level joint defaults to the factorable product
// p1*p2 but may be supplied explicitly; whether a model factors is then a
// checkable property, not a structural assumption.
//
// Removed settings are handled here: a removed polarizer detects with
// probability `efficiency` regardless of lambda, independently of the other
// wing, so joints involving Removed factor through the singles.
//
// Models are immutable after construction and safe to share across threads;
// sampling takes an explicit TrialStream, never internal state.
class Model {
 public:
  using SinglesFn = std::function<double(const HiddenSample&, const Setting&)>;
  using JointFn = std::function<double(const HiddenSample&, const Setting&, const Setting&)>;

  // Factorable model: joint is the product of the singles.
  Model(LambdaSpace space, SettingDomain wing1, SettingDomain wing2,
        SinglesFn p1, SinglesFn p2, double efficiency = 1.0);

  // Model with an explicit lambda-level joint for registered setting pairs.
  Model(LambdaSpace space, SettingDomain wing1, SettingDomain wing2,
        SinglesFn p1, SinglesFn p2, JointFn joint, double efficiency = 1.0);

  double p1(const HiddenSample& lam, const Setting& s) const;
  double p2(const HiddenSample& lam, const Setting& s) const;
  double joint(const HiddenSample& lam, const Setting& a, const Setting& b) const;

  bool is_factorable() const { return !joint_; }
  double efficiency() const { return efficiency_; }
  const LambdaSpace& lambda_space() const { return space_; }
  const SettingDomain& wing1() const { return wing1_; }
  const SettingDomain& wing2() const { return wing2_; }

 private:
  LambdaSpace space_;
  SettingDomain wing1_;
  SettingDomain wing2_;
  SinglesFn p1_;
  SinglesFn p2_;
  JointFn joint_;  // empty for factorable models
  double efficiency_ = 1.0;
};

// Ensemble-level probabilities with no lambda exposed: what an experiment
// measures, and the level the CH inequality is stated at.
class EnsemblePrediction {
 public:
  using SinglesFn = std::function<double(const Setting&)>;
  using JointFn = std::function<double(const Setting&, const Setting&)>;

  EnsemblePrediction(SinglesFn p1, SinglesFn p2, JointFn p12)
      : p1_(std::move(p1)), p2_(std::move(p2)), p12_(std::move(p12)) {}

  double p1(const Setting& a) const { return p1_(a); }
  double p2(const Setting& b) const { return p2_(b); }
  double p12(const Setting& a, const Setting& b) const { return p12_(a, b); }

 private:
  SinglesFn p1_;
  SinglesFn p2_;
  JointFn p12_;
};

// Perfectly correlated stochastic pair source: one lambda, outcomes "up"/
// "down" per wing, only up-up and down-down fire (1/2 each). Each wing alone
// detects with probability 1/2, so the lambda-level joint does not factor.
Model counterexample_model();

// Factorable polarizer model: lambda is a polarization angle uniform on
// [0, pi); each wing detects with Malus-law probability cos^2(setting - lambda).
Model malus_model();

// Absolutely deterministic single-lambda model built from explicit 0/1
// responses per setting. Queries outside the assignment raise
// UnknownSettingError.
Model deterministic_model(const std::map<Setting, int>& wing1_assignment,
                          const std::map<Setting, int>& wing2_assignment);

// Quantum ensemble prediction for a polarization-entangled photon pair with
// detector efficiency eta: singles eta/2, joint (eta^2/2) cos^2(a - b).
EnsemblePrediction quantum_prediction(double eta);

// Sampled invariant check: draws lambda values and verifies probability
// ranges and Frechet coherence at every probe setting pair. Violations are
// report content, not exceptions.
struct ValidationReport {
  struct Violation {
    std::string check;     // "p1-range", "p2-range", "joint-range", "frechet"
    std::string lambda;    // row index or sampled coordinate, formatted
    std::string setting_a;
    std::string setting_b;  // empty for singles checks
    double p1 = 0.0;
    double p2 = 0.0;
    double joint = 0.0;
  };

  std::uint64_t samples = 0;
  std::uint64_t total_violations = 0;
  std::vector<Violation> violations;  // capped; total_violations has the full count

  bool ok() const { return total_violations == 0; }
};

ValidationReport validate_model(const Model& model, std::uint64_t sample_count,
                                std::uint64_t seed);

// Draws a correlated pair of detections from the four-cell lambda-level joint
// distribution (j, p1-j, p2-j, 1-p1-p2+j) using one uniform. Cell boundaries
// are closed on the left, matching the mu-threshold convention. The same
// partition realizes the coupled determinization.
inline std::pair<int, int> draw_pair_outcome(double p1, double p2, double j, double u) {
  const double c1 = j;
  const double c2 = std::max(c1, p1);
  const double c3 = std::min(1.0, std::max(c2, p1 + p2 - j));
  if (u <= c1) return {1, 1};
  if (u <= c2) return {1, 0};
  if (u <= c3) return {0, 1};
  return {0, 0};
}

}  // namespace bell

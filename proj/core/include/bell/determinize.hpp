#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bell/inequality.hpp"
#include "bell/model.hpp"

namespace bell {

struct MCPlan;  // montecarlo.hpp

// How the auxiliary uniform hidden variables are attached.
//
// Independent: each wing gets its own mu uniform on [0,1]; the response is
// 1 iff mu <= p(lambda, setting). Marginals are reproduced exactly; the
// induced joint is the factorable product.
//
// Coupled: one shared mu drives both wings through the four-interval
// partition of [0,1] with lengths (j, p1-j, p2-j, 1-p1-p2+j) mapped to
// outcomes (1,1), (1,0), (0,1), (0,0). Pair queries use the queried pair's
// own partition, so each queried joint is reproduced exactly; single-wing
// responses anchor the partition at the built pair's wing-1 setting. One mu
// cannot in general reproduce every pair of a non-factorable model at once.
enum class DetMode { Independent, Coupled };

// Auxiliary draws: mu1 drives wing 1, mu2 wing 2. Coupled mode reads mu1 only.
struct MuSample {
  double mu1 = 0.0;
  double mu2 = 0.0;
};

// A model over the extended hidden state (lambda, mu...) whose responses
// take only the values 0 and 1. Thresholds are closed on the left:
// mu == p responds 1.
class DeterminizedModel {
 public:
  int response1(const HiddenSample& lam, double mu, const Setting& a) const;
  int response2(const HiddenSample& lam, double mu, const Setting& b) const;
  std::pair<int, int> pair_response(const HiddenSample& lam, const MuSample& mu,
                                    const Setting& a, const Setting& b) const;

  // Exact mu-measure of {response = 1} at fixed lambda: the integral of an
  // indicator over [0,1] is the total interval length.
  double mu_integral1(const HiddenSample& lam, const Setting& a) const;
  double mu_integral2(const HiddenSample& lam, const Setting& b) const;
  // Exact mu-measure of {both responses = 1} at fixed lambda.
  double mu_integral_joint(const HiddenSample& lam, const Setting& a,
                           const Setting& b) const;

  DetMode mode() const { return mode_; }
  const Model& base() const { return base_; }
  // Coupled mode only: the setting pair the construction was built for.
  const std::pair<Setting, Setting>& coupled_pair() const;

 private:
  friend DeterminizedModel determinize(Model, DetMode,
                                       std::optional<std::pair<Setting, Setting>>);
  DeterminizedModel(Model base, DetMode mode,
                    std::optional<std::pair<Setting, Setting>> pair)
      : base_(std::move(base)), mode_(mode), pair_(std::move(pair)) {}

  Model base_;
  DetMode mode_;
  std::optional<std::pair<Setting, Setting>> pair_;
};

// Coupled mode requires a built pair; its settings must be registered in the
// base model. (Frechet coherence of the base joint, enforced by model
// validation, is what makes the four intervals non-negative.)
DeterminizedModel determinize(Model base, DetMode mode,
                              std::optional<std::pair<Setting, Setting>> coupled_pair =
                                  std::nullopt);

// Statistical-equivalence report between a determinized model and its base.
struct EquivalenceReport {
  struct MarginalCheck {
    int wing = 0;
    Setting setting;
    double determinized = 0.0;  // ensemble marginal of the binary responses
    double base = 0.0;          // base model ensemble marginal
    double deviation = 0.0;
    double allowed = 0.0;  // tolerance, or 4*stderr for Monte Carlo checks
  };

  struct JointCheck {
    Setting a;
    Setting b;
    double determinized = 0.0;
    double target = 0.0;  // independent: factorable product; coupled: base joint
    double deviation = 0.0;
    double allowed = 0.0;
    double base_joint = 0.0;      // ensemble base joint, for reference
    double defect_vs_base = 0.0;  // |determinized - base_joint|
  };

  DetMode mode = DetMode::Independent;
  std::string method;  // "exact-sum", "midpoint(n)", "mc(trials=...,seed=...)"
  double tolerance = 0.0;
  // Closed-form per-lambda indicator-integral deviation from the threshold,
  // maximal over lambda probes and settings. Zero by construction.
  double per_lambda_max_deviation = 0.0;
  std::vector<MarginalCheck> marginals;
  std::vector<JointCheck> joints;
  bool pass = false;
  // Set in independent mode when the base joint is not factorable: the joint
  // deviation vs the base model is expected there, not an equivalence failure.
  std::string note;
};

// Deterministic verification: exact sums for discrete lambda spaces,
// midpoint quadrature otherwise.
EquivalenceReport verify_marginals(const DeterminizedModel& det,
                                   std::span<const Setting> wing1_settings,
                                   std::span<const Setting> wing2_settings,
                                   const IntegrationPlan& plan);

// Monte Carlo verification: marginals and joints estimated from binary
// responses; gates are 4 standard errors.
EquivalenceReport verify_marginals(const DeterminizedModel& det,
                                   std::span<const Setting> wing1_settings,
                                   std::span<const Setting> wing2_settings,
                                   const MCPlan& plan);

// Samples (lambda, mu...) and evaluates U on the four binary responses.
// Every sample must land in {-1, 0}; count_other is a bug detector.
struct UAudit {
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t count_minus_one = 0;
  std::uint64_t count_zero = 0;
  std::uint64_t count_other = 0;

  bool binary_support() const { return count_other == 0; }
};

UAudit u_audit(const DeterminizedModel& det, const Setting& a,
               const Setting& a_prime, const Setting& b, const Setting& b_prime,
               std::uint64_t samples, std::uint64_t seed);

}  // namespace bell

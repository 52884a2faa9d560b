#pragma once

#include <array>
#include <span>

#include "bell/model.hpp"

namespace bell {

// The six-term combination of detection probabilities at a fixed lambda:
//   U = p1a*p2b - p1a*p2b' + p1a'*p2b + p1a'*p2b' - p1a' - p2b.
// For any inputs in [0,1]^4 it lies in [-1, 0]; U is multilinear, so its
// extrema sit on the hypercube vertices, where it is -1 or 0.
// Throws DomainError for inputs outside [0, 1].
double u_value(double p1a, double p1a_prime, double p2b, double p2b_prime);

// One of the sixteen deterministic response assignments and its U value.
struct UCase {
  int x;        // p1(lambda, a)
  int x_prime;  // p1(lambda, a')
  int y;        // p2(lambda, b)
  int y_prime;  // p2(lambda, b')
  int u;        // always -1 or 0
};

// All sixteen 0/1 assignments in lexicographic (x, x', y, y') order.
// Exactly eight give U = -1 and eight give U = 0.
std::array<UCase, 16> enumerate_u_cases();

// joint(lambda,a,b) - p1(lambda,a)*p2(lambda,b): zero exactly when the
// factorability condition holds at this point.
double factorability_defect(const Model& model, const HiddenSample& lam,
                            const Setting& a, const Setting& b);

// True iff -1 <= U <= 0 at this lambda (up to 1e-12 at the boundaries).
// This holds for every model by the universal bound; a false return is an
// implementation bug detector, not a model property.
bool u_bounds_check(const Model& model, const HiddenSample& lam,
                    const Setting& a, const Setting& a_prime,
                    const Setting& b, const Setting& b_prime);

// Verdict on the ensemble CH statistic
//   S = p12(a,b) - p12(a,b') + p12(a',b) + p12(a',b') - p12(a',inf) - p12(inf,b)
// against -p12(inf,inf) <= S <= 0.
struct CHVerdict {
  double statistic = 0.0;
  double lower_bound = 0.0;  // -p12(removed, removed)
  double upper_bound = 0.0;
  bool satisfied = false;
  double margin = 0.0;  // distance to the nearest bound; negative if outside
};

CHVerdict make_ch_verdict(double statistic, double lower_bound, double tolerance);

CHVerdict ch_statistic(const EnsemblePrediction& pred, const Setting& a,
                       const Setting& a_prime, const Setting& b,
                       const Setting& b_prime, double tolerance = 1e-12);

// Ensemble probabilities of a lambda model. The plan-less overload is exact
// summation and throws PlanError for continuous lambda spaces.
EnsemblePrediction ensemble_prediction(const Model& model);
EnsemblePrediction ensemble_prediction(const Model& model, const IntegrationPlan& plan);

// True iff inserting a polarizer never increases the detection probability:
// p(lambda, s) <= p(lambda, removed) for every listed setting, both wings.
bool no_enhancement_check(const Model& model, const HiddenSample& lam,
                          std::span<const Setting> settings);

}  // namespace bell

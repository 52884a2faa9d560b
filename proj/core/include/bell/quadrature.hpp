#pragma once

#include <cstddef>

#include "bell/errors.hpp"

namespace bell {

// Deterministic integration plan for continuous lambda spaces: composite
// midpoint rule. The integrands here are smooth and pi-periodic, for which
// the midpoint rule converges spectrally.
struct IntegrationPlan {
  std::size_t panels = 4096;
};

template <class F>
double midpoint_integral(F&& f, double lo, double hi, std::size_t panels) {
  if (panels == 0) {
    throw DomainError("midpoint_integral: panel count must be at least 1");
  }
  const double h = (hi - lo) / static_cast<double>(panels);
  double sum = 0.0;
  for (std::size_t k = 0; k < panels; ++k) {
    sum += f(lo + (static_cast<double>(k) + 0.5) * h);
  }
  return h * sum;
}

}  // namespace bell

#pragma once

#include <cmath>
#include <optional>

namespace stieltjes {

// Aitken delta-squared on three successive terms. Declines when the
// denominator is tiny or the differences do not contract.
template <class T>
std::optional<T> aitken(const T& x0, const T& x1, const T& x2, double floor = 1e-14) {
  const T d1 = x1 - x0;
  const T d2 = x2 - x1;
  const T den = d2 - d1;
  if (std::abs(den) < floor) return std::nullopt;
  if (!(std::abs(d2) < std::abs(d1))) return std::nullopt;
  return x2 - d2 * d2 / den;
}

}  // namespace stieltjes

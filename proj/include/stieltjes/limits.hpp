#pragma once

#include <functional>
#include <string>
#include <type_traits>
#include <vector>

#include "stieltjes/core.hpp"
#include "stieltjes/singular.hpp"
#include "stieltjes/transforms.hpp"

namespace stieltjes {

using DiskField = std::function<double(const DiskPoint&)>;
using DiskFieldC = std::function<Complex(const DiskPoint&)>;

// Aitken over the last `window` trace entries; residual is the spread of
// the accelerated values.
LimitEstimate angular_limit(const DiskField& field, const ApproachPath& path, double tol = 1e-3,
                            int window = 5);
LimitEstimateC angular_limit(const DiskFieldC& field, const ApproachPath& path, double tol = 1e-3,
                             int window = 5);

// Lambdas: pick the real or complex overload from the return type.
template <class F, class R = std::invoke_result_t<const F&, const DiskPoint&>>
  requires(!std::is_same_v<F, DiskField> && !std::is_same_v<F, DiskFieldC>)
auto angular_limit(const F& field, const ApproachPath& path, double tol = 1e-3, int window = 5) {
  if constexpr (std::is_same_v<R, Complex>)
    return angular_limit(DiskFieldC(field), path, tol, window);
  else
    return angular_limit(DiskField(field), path, tol, window);
}

enum class Grade { Pass, Marginal, Fail };
const char* to_string(Grade g);
Grade grade_of(double residual, double tol);
Grade worst(Grade a, Grade b);

struct LimitOptions {
  double tol = 1e-3;
  int window = 5;
  int k_min = 4;
  int k_max = 14;
  std::vector<double> apertures = {0.0, kPi / 6, -kPi / 6, kPi / 3, -kPi / 3};
  TransformOptions transform;
  PVOptions pv;
};

struct CheckRow {
  std::string quantity;  // U, V, S or C
  double angle = 0.0;
  std::string approach;
  Complex expected;
  LimitEstimateC estimate;
  double residual = 0.0;
  Grade grade = Grade::Pass;
};

struct ApertureSpread {
  std::string quantity;
  double angle = 0.0;
  double spread = 0.0;
  Grade grade = Grade::Pass;  // against 3x tol
};

struct CheckReport {
  std::string check;
  double tol = 0.0;
  std::vector<CheckRow> rows;
  std::vector<ApertureSpread> spreads;
  Grade overall() const;
};

CheckReport theorem1_check(const BoundaryFunction& phi, const std::vector<double>& t0s,
                           const LimitOptions& opts = {});
CheckReport theorem2_check(const BoundaryFunction& phi, const std::vector<double>& taus,
                           const LimitOptions& opts = {});
CheckReport corollary8_check(const BoundaryFunction& phi, const std::vector<double>& angles,
                             const LimitOptions& opts = {});

}  // namespace stieltjes

#pragma once

#include <utility>
#include <vector>

#include "stieltjes/core.hpp"
#include "stieltjes/quadrature.hpp"
#include "stieltjes/transforms.hpp"

namespace stieltjes {

struct JumpAtEvaluationPoint : DomainError {
  using DomainError::DomainError;
};

// 2^-3, ..., 2^-16
std::vector<double> default_eps_schedule();

struct PVOptions {
  std::vector<double> eps = default_eps_schedule();
  RSOptions quadrature = [] {
    RSOptions o;
    o.rel_tol = 1e-7;
    o.abs_tol = 1e-10;
    return o;
  }();
  double stabilization_tol = 1e-6;
};

template <class T>
struct PVResultT {
  T value{};
  std::vector<std::pair<double, T>> eps_trace;
  bool extrapolated = false;
  double est_error = 0.0;
  double quadrature_error = 0.0;  // summed certificates of the pieces
  bool converged = false;
  Status quadrature_status = Status::Converged;
};

using PVResult = PVResultT<double>;
using PVResultC = PVResultT<Complex>;

// (1/2pi) int_{eps <= |tau - t| <= pi} dPhi(t) / tan((tau - t)/2)
RSResult truncated_hilbert(const BoundaryFunction& phi, double tau, double eps,
                           const RSOptions& opts = PVOptions{}.quadrature);
PVResult hilbert_stieltjes(const BoundaryFunction& phi, double tau, const PVOptions& opts = {});

double lemma2_truncation(const BoundaryFunction& phi, double t0, double r,
                         const RSOptions& opts = PVOptions{}.quadrature);

struct Lemma2Entry {
  double r;
  double v;
  double truncation;
  double difference;
};
std::vector<Lemma2Entry> lemma2_difference_trace(const BoundaryFunction& phi, double t0,
                                                 const std::vector<double>& r_schedule,
                                                 const TransformOptions& topts = {},
                                                 const RSOptions& popts = PVOptions{}.quadrature);

// Arc exclusion uses the chord |zeta - zeta0| < eps.
PVResultC singular_cauchy_stieltjes(const BoundaryFunction& phi, double tau, const PVOptions& opts = {});

struct Corollary10Report {
  PVResult h;
  PVResultC i;
  double residual = 0.0;  // |H - 2 Im I|
  double real_gap = 0.0;  // |Re I - rise/(4 pi)|
};

Corollary10Report corollary10_report(const BoundaryFunction& phi, double tau, const PVOptions& opts = {});
double corollary10_residual(const BoundaryFunction& phi, double tau, const PVOptions& opts = {});

}  // namespace stieltjes

#include "stieltjes/kernels.hpp"

#include <cmath>

namespace stieltjes {

namespace {

double denom(double r, double Theta) {
  double s = std::sin(0.5 * Theta);
  return (1.0 - r) * (1.0 - r) + 4.0 * r * s * s;
}

void require_open(double r, const char* who) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError(std::string(who) + ": need 0 <= r < 1");
}

}  // namespace

double poisson(double r, double Theta) {
  require_open(r, "poisson");
  return (1.0 - r * r) / denom(r, Theta);
}

double poisson_dtheta(double r, double Theta) {
  require_open(r, "poisson_dtheta");
  double d = denom(r, Theta);
  return -2.0 * r * (1.0 - r * r) * std::sin(Theta) / (d * d);
}

double conj_poisson(double r, double Theta) {
  if (!(r >= 0.0 && r <= 1.0)) throw DomainError("conj_poisson: need 0 <= r <= 1");
  if (r == 1.0) {
    if (std::abs(reduce_angle(Theta)) < 1e-14) throw SingularityError("conj_poisson: r = 1 at Theta = 0");
    return 1.0 / std::tan(0.5 * Theta);
  }
  return 2.0 * r * std::sin(Theta) / denom(r, Theta);
}

double conj_poisson_dt(double r, double Theta) {
  require_open(r, "conj_poisson_dt");
  double d = denom(r, Theta);
  return 2.0 * r * ((1.0 + r * r) * std::cos(Theta) - 2.0 * r) / (d * d);
}

Complex analytic_kernel(double t, const DiskPoint& z) {
  const double Theta = z.theta - t;
  const double d = denom(z.r, Theta);
  return {(1.0 - z.r * z.r) / d, 2.0 * z.r * std::sin(Theta) / d};
}

Complex cauchy_kernel(double t, const DiskPoint& z) {
  const Complex zeta = std::polar(1.0, t);
  return zeta / (zeta - z.z());
}

double boundary_cot_kernel(double tau, double t) {
  double d = reduce_angle(tau - t);
  if (std::abs(d) < 1e-14) throw SingularityError("boundary_cot_kernel: tau = t");
  return 1.0 / std::tan(0.5 * d);
}

}  // namespace stieltjes

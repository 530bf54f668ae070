#include "stieltjes/transforms.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

#include "stieltjes/kernels.hpp"

namespace stieltjes {

namespace {

RSOptions window_options(const BoundaryFunction& phi, const DiskPoint& z, const TransformOptions& opts) {
  if (!phi.periodic()) throw DomainError("transforms need a periodic boundary function");
  RSOptions o = opts.quadrature;
  if (!o.schedule) o.schedule = poisson_schedule(z.theta, z.r);
  o.discontinuities.integrator = phi.jumps_in(z.theta - kPi, z.theta + kPi);
  return o;
}

template <class T>
RSResultT<T> window_integral(const BoundaryFunction& phi, const DiskPoint& z,
                             const TransformOptions& opts, std::function<T(double)> kernel) {
  return rs_integral<T>(kernel, phi.unwrapped_evaluator(), z.theta - kPi, z.theta + kPi,
                        window_options(phi, z, opts));
}

constexpr double kInv2Pi = 1.0 / kTwoPi;

RSResultC to_complex(const RSResult& r) {
  RSResultC c;
  c.value = r.value;
  c.levels = r.levels;
  c.est_error = r.est_error;
  c.status = r.status;
  return c;
}

Status worse(Status a, Status b) {
  if (a == Status::Diverged || b == Status::Diverged) return Status::Diverged;
  if (a == Status::Inconclusive || b == Status::Inconclusive) return Status::Inconclusive;
  return Status::Converged;
}

RSResultC combine(const RSResultC& re, const RSResultC& im) {
  RSResultC out;
  out.value = re.value + Complex(0.0, 1.0) * im.value;
  out.levels = re.levels.size() >= im.levels.size() ? re.levels : im.levels;
  out.est_error = re.est_error + im.est_error;
  out.status = worse(re.status, im.status);
  return out;
}

}  // namespace

RSResult poisson_stieltjes(const BoundaryFunction& phi, const DiskPoint& z, const TransformOptions& opts) {
  const double r = z.r, th = z.theta;
  return window_integral<double>(phi, z, opts,
                                 [r, th](double t) { return poisson(r, th - t) * kInv2Pi; });
}

RSResult conj_poisson_stieltjes(const BoundaryFunction& phi, const DiskPoint& z,
                                const TransformOptions& opts) {
  const double r = z.r, th = z.theta;
  return window_integral<double>(phi, z, opts,
                                 [r, th](double t) { return conj_poisson(r, th - t) * kInv2Pi; });
}

RSResultC schwartz_stieltjes(const BoundaryFunction& phi, const DiskPoint& z, const TransformOptions& opts) {
  return window_integral<Complex>(phi, z, opts,
                                  [z](double t) { return analytic_kernel(t, z) * kInv2Pi; });
}

RSResultC cauchy_stieltjes(const BoundaryFunction& phi, const DiskPoint& z, const TransformOptions& opts) {
  return window_integral<Complex>(phi, z, opts,
                                  [z](double t) { return cauchy_kernel(t, z) * kInv2Pi; });
}

RSResultC schwartz_stieltjes(const BoundaryFunction& re, const BoundaryFunction& im, const DiskPoint& z,
                             const TransformOptions& opts) {
  return combine(schwartz_stieltjes(re, z, opts), schwartz_stieltjes(im, z, opts));
}

RSResultC cauchy_stieltjes(const BoundaryFunction& re, const BoundaryFunction& im, const DiskPoint& z,
                           const TransformOptions& opts) {
  return combine(cauchy_stieltjes(re, z, opts), cauchy_stieltjes(im, z, opts));
}

TransformValue transform_value(const BoundaryFunction& phi, const DiskPoint& z, const TransformOptions& opts) {
  TransformValue tv;
  tv.u_cert = poisson_stieltjes(phi, z, opts);
  tv.v_cert = conj_poisson_stieltjes(phi, z, opts);
  tv.u = tv.u_cert.value;
  tv.v = tv.v_cert.value;
  tv.s = {tv.u, tv.v};
  tv.c = 0.5 * tv.s + phi.rise() / (2.0 * kTwoPi);
  return tv;
}

Which parse_which(const std::string& s) {
  if (s == "U" || s == "u") return Which::U;
  if (s == "V" || s == "v") return Which::V;
  if (s == "S" || s == "s") return Which::S;
  if (s == "C" || s == "c") return Which::C;
  throw DomainError("unknown transform '" + s + "' (expected U, V, S or C)");
}

const char* to_string(Which w) {
  switch (w) {
    case Which::U:
      return "U";
    case Which::V:
      return "V";
    case Which::S:
      return "S";
    case Which::C:
      return "C";
  }
  return "?";
}

RSResultC transform(const BoundaryFunction& phi, Which which, const DiskPoint& z, const TransformOptions& opts) {
  switch (which) {
    case Which::U:
      return to_complex(poisson_stieltjes(phi, z, opts));
    case Which::V:
      return to_complex(conj_poisson_stieltjes(phi, z, opts));
    case Which::S:
      return schwartz_stieltjes(phi, z, opts);
    case Which::C:
      return cauchy_stieltjes(phi, z, opts);
  }
  throw DomainError("unknown transform");
}

TransformOptions tight_transform_options() {
  TransformOptions o;
  o.quadrature.rel_tol = 1e-10;
  o.quadrature.abs_tol = 1e-13;
  return o;
}

DualityReport duality_report(const BoundaryFunction& phi, const DiskPoint& z, const TransformOptions& opts) {
  if (!phi.jumps().empty()) throw DomainError("duality: boundary function must be continuous");
  DualityReport rep;
  rep.certificate = poisson_stieltjes(phi, z, opts);
  rep.rs_side = rep.certificate.value * kTwoPi;

  const double r = z.r, th = z.theta;
  auto integrand = [&](double t) { return phi.unwrapped(t) * poisson_dtheta(r, th - t); };
  // Split at the kernel peak; each half is smooth apart from Phi itself.
  using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
  double err = 0.0;
  double left = GK::integrate(integrand, th - kPi, th, 18, 1e-13, &err);
  double right = GK::integrate(integrand, th, th + kPi, 18, 1e-13, &err);
  rep.classical_side = left + right + poisson(r, kPi) * phi.rise();
  rep.residual = std::abs(rep.rs_side - rep.classical_side);
  return rep;
}

double duality_residual(const BoundaryFunction& phi, const DiskPoint& z, const TransformOptions& opts) {
  return duality_report(phi, z, opts).residual;
}

double harmonicity_diagnostics(const Field& field, Complex z, double h) {
  if (!(h > 0.0) || std::abs(z) + 2.0 * h >= 1.0) throw DomainError("harmonicity: step too large for the disk");
  const double f0 = field(z);
  const Complex I(0.0, 1.0);
  double lap = field(z + h) + field(z - h) + field(z + I * h) + field(z - I * h) - 4.0 * f0;
  constexpr int kCircle = 64;
  double mean = 0.0;
  for (int j = 0; j < kCircle; ++j) mean += field(z + std::polar(h, kTwoPi * j / kCircle));
  mean /= kCircle;
  return std::max(std::abs(lap), std::abs(mean - f0));
}

double conjugacy_residual(const BoundaryFunction& phi, const DiskPoint& z, double h,
                          const TransformOptions& opts) {
  if (z.r < 0.1) throw DomainError("conjugacy: need r >= 0.1");
  if (!(h > 0.0) || z.r + 2.0 * h >= 1.0 || z.r - 2.0 * h < 0.0)
    throw DomainError("conjugacy: step too large for the disk");
  auto U = [&](double r, double th) { return poisson_stieltjes(phi, DiskPoint(r, th), opts).value; };
  auto V = [&](double r, double th) { return conj_poisson_stieltjes(phi, DiskPoint(r, th), opts).value; };
  // Fourth-order centred differences.
  auto d = [h](auto&& f) {
    return (f(-2.0 * h) - 8.0 * f(-h) + 8.0 * f(h) - f(2.0 * h)) / (12.0 * h);
  };
  const double r = z.r, th = z.theta;
  double Ur = d([&](double e) { return U(r + e, th); });
  double Ut = d([&](double e) { return U(r, th + e); });
  double Vr = d([&](double e) { return V(r + e, th); });
  double Vt = d([&](double e) { return V(r, th + e); });
  return std::abs(Ur - Vt / r) + std::abs(Ut / r + Vr);
}

}  // namespace stieltjes

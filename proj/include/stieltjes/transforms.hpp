#pragma once

#include <functional>

#include "stieltjes/core.hpp"
#include "stieltjes/quadrature.hpp"

namespace stieltjes {

struct TransformOptions {
  RSOptions quadrature = [] {
    RSOptions o;
    o.rel_tol = 1e-6;
    o.abs_tol = 1e-10;
    return o;
  }();
};

// Each returns the normalized transform in `value`; the certificate fields
// describe the integral of kernel/(2 pi) against dPhi over [theta-pi, theta+pi].
RSResult poisson_stieltjes(const BoundaryFunction& phi, const DiskPoint& z,
                           const TransformOptions& opts = {});
RSResult conj_poisson_stieltjes(const BoundaryFunction& phi, const DiskPoint& z,
                                const TransformOptions& opts = {});
RSResultC schwartz_stieltjes(const BoundaryFunction& phi, const DiskPoint& z,
                             const TransformOptions& opts = {});
RSResultC cauchy_stieltjes(const BoundaryFunction& phi, const DiskPoint& z,
                           const TransformOptions& opts = {});

// Complex Phi = re + i*im, done componentwise.
RSResultC schwartz_stieltjes(const BoundaryFunction& re, const BoundaryFunction& im,
                             const DiskPoint& z, const TransformOptions& opts = {});
RSResultC cauchy_stieltjes(const BoundaryFunction& re, const BoundaryFunction& im,
                           const DiskPoint& z, const TransformOptions& opts = {});

struct TransformValue {
  double u = 0.0;
  double v = 0.0;
  Complex s;
  Complex c;  // s/2 + rise/(4 pi)
  RSResult u_cert;
  RSResult v_cert;
};

TransformValue transform_value(const BoundaryFunction& phi, const DiskPoint& z,
                               const TransformOptions& opts = {});

enum class Which { U, V, S, C };
Which parse_which(const std::string& s);
const char* to_string(Which w);
RSResultC transform(const BoundaryFunction& phi, Which which, const DiskPoint& z,
                    const TransformOptions& opts = {});

// Options used by the duality check: run the RS side through the full schedule.
TransformOptions tight_transform_options();

struct DualityReport {
  double rs_side = 0.0;         // int P dPhi over the window
  double classical_side = 0.0;  // int Phi dP/dtheta dt + P_r(pi)*rise
  double residual = 0.0;
  RSResult certificate;
};

DualityReport duality_report(const BoundaryFunction& phi, const DiskPoint& z,
                             const TransformOptions& opts = tight_transform_options());
double duality_residual(const BoundaryFunction& phi, const DiskPoint& z,
                        const TransformOptions& opts = tight_transform_options());

using Field = std::function<double(Complex)>;
double harmonicity_diagnostics(const Field& field, Complex z, double h = 1e-2);
double conjugacy_residual(const BoundaryFunction& phi, const DiskPoint& z, double h = 1e-2,
                          const TransformOptions& opts = {});

}  // namespace stieltjes

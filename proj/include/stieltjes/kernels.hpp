#pragma once

#include "stieltjes/core.hpp"

namespace stieltjes {

// All kernels use the denominator (1-r)^2 + 4r sin^2(Theta/2).
double poisson(double r, double Theta);
double poisson_dtheta(double r, double Theta);
double conj_poisson(double r, double Theta);
double conj_poisson_dt(double r, double Theta);
// (zeta + z)/(zeta - z) with zeta = e^{it}.
Complex analytic_kernel(double t, const DiskPoint& z);
// e^{it}/(e^{it} - z), the Cauchy kernel; equals (A + 1)/2.
Complex cauchy_kernel(double t, const DiskPoint& z);
double boundary_cot_kernel(double tau, double t);

}  // namespace stieltjes

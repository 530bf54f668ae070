#include <cmath>

#include "catch_amalgamated.hpp"
#include "stieltjes/kernels.hpp"

using namespace stieltjes;
using Catch::Approx;

namespace {

// Textbook forms, written independently of the library's denominator.
double poisson_ref(double r, double th) { return (1 - r * r) / (1 - 2 * r * std::cos(th) + r * r); }
double conj_ref(double r, double th) { return 2 * r * std::sin(th) / (1 - 2 * r * std::cos(th) + r * r); }

}  // namespace

TEST_CASE("analytic kernel splits into P and Q on a 64x64 grid") {
  double worst = 0;
  for (int i = 0; i < 64; ++i) {
    const double r = 0.99 * i / 63.0;
    for (int j = 0; j < 64; ++j) {
      const double theta = -kPi + kTwoPi * (j + 0.5) / 64;
      const double t = 0.3;
      const Complex a = analytic_kernel(t, DiskPoint(r, theta));
      worst = std::max(worst, std::abs(a.real() - poisson(r, theta - t)));
      worst = std::max(worst, std::abs(a.imag() - conj_poisson(r, theta - t)));
    }
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("kernels agree with the textbook closed forms") {
  for (double r : {0.0, 0.2, 0.7, 0.95}) {
    for (double th = -3.0; th <= 3.0; th += 0.25) {
      CHECK(poisson(r, th) == Approx(poisson_ref(r, th)).epsilon(1e-13));
      CHECK(conj_poisson(r, th) == Approx(conj_ref(r, th)).margin(1e-13));
    }
  }
  // Cauchy kernel is half the analytic kernel plus 1/2
  DiskPoint z(0.6, 1.0);
  for (double t : {-2.0, 0.0, 0.9, 3.0})
    CHECK(std::abs(cauchy_kernel(t, z) - 0.5 * (analytic_kernel(t, z) + 1.0)) < 1e-13);
}

TEST_CASE("derivatives against centred differences") {
  const double h = 1e-5;
  for (double r : {0.3, 0.8}) {
    for (double th : {-2.5, -0.4, 0.1, 1.9}) {
      double fd = (poisson(r, th + h) - poisson(r, th - h)) / (2 * h);
      CHECK(poisson_dtheta(r, th) == Approx(fd).epsilon(1e-7));
      double fq = (conj_poisson(r, th + h) - conj_poisson(r, th - h)) / (2 * h);
      CHECK(conj_poisson_dt(r, th) == Approx(fq).epsilon(1e-7));
    }
  }
}

TEST_CASE("mean of P_r over a turn is 1") {
  // Equally spaced rule of 8192 nodes, exact to rounding for trig polynomials of this width
  for (double r : {0.3, 0.9, 0.99}) {
    const int n = 8192;
    double s = 0;
    for (int i = 0; i < n; ++i) s += poisson(r, -kPi + kTwoPi * i / n);
    CHECK(std::abs(s / n - 1.0) < 1e-10);
  }
}

TEST_CASE("Q_r increases on the peak side of zero") {
  for (double r : {0.9, 0.99}) {
    for (int i = 0; i < 100; ++i) {
      const double th = (1 - r) * i / 99.0;
      CHECK(conj_poisson_dt(r, th) > 0);
    }
  }
}

TEST_CASE("boundary conjugate kernel blows up like 1/eps") {
  const double eps = 1e-3;
  const double ratio = eps * (conj_poisson(1.0, eps) - conj_poisson(1 - eps, eps));
  CHECK(ratio >= 0.9);
  CHECK(ratio <= 1.1);
  CHECK(conj_poisson(1.0, 0.5) == Approx(1 / std::tan(0.25)));
  CHECK(boundary_cot_kernel(0.7, 0.2) == Approx(1 / std::tan(0.25)));
}

TEST_CASE("symmetry: P even, Q odd") {
  for (double r : {0.1, 0.5, 0.97}) {
    for (double th : {0.2, 1.0, 2.9}) {
      CHECK(poisson(r, th) == Approx(poisson(r, -th)));
      CHECK(conj_poisson(r, th) == Approx(-conj_poisson(r, -th)));
      CHECK(poisson(r, th) > 0);
    }
  }
  CHECK(poisson(0.0, 1.3) == 1.0);
  CHECK(conj_poisson(0.0, 1.3) == 0.0);
  CHECK_THROWS_AS(poisson(1.0, 0.3), DomainError);
  CHECK_THROWS_AS(conj_poisson_dt(1.0, 0.3), DomainError);
  CHECK_THROWS_AS(conj_poisson(1.0, 0.0), SingularityError);
}

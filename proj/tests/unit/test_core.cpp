#include <cmath>

#include "catch_amalgamated.hpp"
#include "stieltjes/core.hpp"
#include "stieltjes/zoo.hpp"

using namespace stieltjes;
using Catch::Approx;

// Independent ternary-expansion oracle for the staircase: sum of 2^-k over
// digits 2 before the first digit 1.
static double cantor_oracle(double x, int depth) {
  if (x <= 0) return 0;
  if (x >= 1) return 1;
  double v = 0;
  for (int k = 1; k <= depth; ++k) {
    x *= 3;
    int d = static_cast<int>(std::floor(x));
    x -= d;
    if (d == 1) return v + std::ldexp(1.0, -k);
    if (d == 2) v += std::ldexp(1.0, -k);
  }
  return v + std::ldexp(1.0, -depth) * x;
}

TEST_CASE("reduce_angle lands in (-pi, pi]") {
  CHECK(reduce_angle(kPi) == kPi);
  CHECK(reduce_angle(-kPi) == kPi);
  CHECK(reduce_angle(3 * kPi) == Approx(kPi));
  CHECK(reduce_angle(0.5 + 4 * kPi) == Approx(0.5));
  for (double t = -20; t < 20; t += 0.37) {
    double r = reduce_angle(t);
    CHECK(r > -kPi);
    CHECK(r <= kPi);
    CHECK(std::abs(std::remainder(t - r, kTwoPi)) < 1e-12);
  }
}

TEST_CASE("eval_phi examples") {
  auto step = lookup("step2pi", {"0"}).fn;
  CHECK(step.eval(-1.0) == 0.0);
  CHECK(step.eval(1.0) == Approx(kTwoPi));
  CHECK(lookup("sin").fn.eval(kPi / 2) == Approx(1.0));
  // x = 1/2 maps to t = 0
  CHECK(BoundaryFunction::cantor(20).eval(0.0) == 0.5);
}

TEST_CASE("pathological function is defined on [a, b] only") {
  auto p = lookup("pathological_example1").fn;
  CHECK(p.eval(0.25) == 16.0);
  CHECK(p.eval(0.3) == 0.0);
  CHECK(p.eval(1.0) == 1.0);
  CHECK_THROWS_AS(p.eval(1.5), DomainError);
  CHECK_THROWS_AS(p.eval(-0.1), DomainError);
  CHECK_FALSE(p.periodic());
}

TEST_CASE("periodicity of every periodic zoo entry on a 1024-point grid") {
  for (const auto& e : catalog()) {
    if (!e.fn.periodic()) continue;
    INFO(e.name);
    double worst = 0.0;
    for (int i = 0; i < 1024; ++i) {
      double t = -kPi + kTwoPi * (i + 0.5) / 1024;
      worst = std::max(worst, std::abs(e.fn.eval(t + kTwoPi) - e.fn.eval(t)));
    }
    CHECK(worst <= 1e-12);
  }
}

TEST_CASE("unwrapped integrator carries one period of mass per turn") {
  for (const auto& e : catalog()) {
    if (!e.fn.periodic()) continue;
    INFO(e.name);
    for (double t : {-2.9, -0.4, 0.3, 1.7, 3.0})
      CHECK(e.fn.unwrapped(t + kTwoPi) - e.fn.unwrapped(t) == Approx(e.fn.rise()).margin(1e-12));
  }
  CHECK(lookup("linear").fn.unwrapped(5.0) == Approx(5.0));
  CHECK(lookup("step2pi", {"3.141592653589793"}).fn.unwrapped(-kPi) == Approx(0.0));
}

TEST_CASE("cantor staircase matches the ternary oracle and is monotone") {
  for (int depth : {8, 16, 24}) {
    double prev = -1;
    for (int i = 0; i <= 4096; ++i) {
      double x = i / 4096.0;
      double v = cantor_staircase(x, depth);
      CHECK(v == Approx(cantor_oracle(x, depth)).margin(1e-15));
      CHECK(v >= prev);
      prev = v;
    }
  }
}

TEST_CASE("cantor depth-d approximant is within 2^-d of depth d+1") {
  for (int d : {4, 10, 20}) {
    double worst = 0;
    for (int i = 0; i <= 20000; ++i) {
      double x = i / 20000.0;
      worst = std::max(worst, std::abs(cantor_staircase(x, d) - cantor_staircase(x, d + 1)));
    }
    CHECK(worst <= std::ldexp(1.0, -d));
  }
}

TEST_CASE("step kind is right-continuous with a finite jump list") {
  auto m = lookup("multistep").fn;
  REQUIRE(m.jumps().size() == 3);
  for (const auto& j : m.jumps()) {
    CHECK(m.eval(j.t) - m.eval(j.t - 1e-9) == Approx(j.height));
    CHECK(m.eval(j.t + 1e-9) == m.eval(j.t));
  }
  CHECK(m.rise() == Approx(0.0));
}

TEST_CASE("sawtooth has a -2pi atom at pi and zero rise") {
  auto s = lookup("sawtooth").fn;
  REQUIRE(s.jumps().size() == 1);
  CHECK(s.jumps()[0].t == kPi);
  CHECK(s.jumps()[0].height == Approx(-kTwoPi));
  CHECK(s.rise() == 0.0);
  CHECK(s.eval(kPi) == Approx(-kPi));
  CHECK(s.eval(3.0) == Approx(3.0));
}

TEST_CASE("derivatives: closed form, plateau, undefined points") {
  CHECK(*lookup("sin").fn.derivative(0.4) == Approx(std::cos(0.4)));
  auto c = BoundaryFunction::cantor();
  CHECK(*c.derivative(0.0) == 0.0);  // middle plateau
  CHECK_FALSE(c.derivative(-kPi / 2).has_value());  // x = 1/4 = 0.0202... in base 3
  auto st = lookup("step2pi", {"0"}).fn;
  CHECK_FALSE(st.derivative(0.0).has_value());
  CHECK(*st.derivative(2.0) == 0.0);
  auto k = lookup("sin").fn.with_known_derivative({{0.25, 42.0}});
  CHECK(*k.derivative(0.25) == 42.0);
}

TEST_CASE("jumps_in replicates atoms across periods") {
  auto st = lookup("step2pi", {"0.5"}).fn;
  auto js = st.jumps_in(-7.0, 7.0);
  REQUIRE(js.size() == 3);
  CHECK(js[0] == Approx(0.5 - kTwoPi));
  CHECK(js[1] == Approx(0.5));
  CHECK(js[2] == Approx(0.5 + kTwoPi));
  CHECK(st.jumps_in(0.6, 1.0).empty());
}

TEST_CASE("partition invariants") {
  auto p = Partition::uniform(0.0, 1.0, 8);
  CHECK(p.breaks.front() == 0.0);
  CHECK(p.breaks.back() == 1.0);
  CHECK(p.mesh() == Approx(0.125));
  auto q = p.bisected();
  CHECK(q.mesh() == p.mesh() / 2);
  CHECK(q.tags.size() == 16);
  Partition bad{{0.0, 1.0}, {2.0}};
  CHECK_THROWS_AS(bad.validate(), DomainError);
  auto cp = CyclicPartition::uniform(-kPi, 12);
  CHECK(cp.gap_sum() == Approx(kTwoPi));
  CHECK(cp.angles.back() - cp.angles.front() == Approx(kTwoPi));
}

TEST_CASE("disk points stay strictly inside") {
  CHECK_THROWS_AS(DiskPoint(1.0, 0.0), DomainError);
  CHECK_THROWS_AS(DiskPoint(-0.1, 0.0), DomainError);
  auto z = DiskPoint::from_complex({0.3, 0.4});
  CHECK(z.r == Approx(0.5));
}

TEST_CASE("path_points examples") {
  auto pts = path_points(ApproachPath::radial(0.0, 1, 3));
  REQUIRE(pts.size() == 3);
  CHECK(pts[0].r == 0.5);
  CHECK(pts[1].r == 0.75);
  CHECK(pts[2].r == 0.875);
  for (const auto& p : pts) CHECK(p.theta == 0.0);

  // Stolz aperture pi/4 at k = 4: angle between zeta0 - z and the inward radius
  const double t0 = 0.7, alpha = kPi / 4;
  auto s = path_points(ApproachPath::stolz(t0, alpha, 4, 4));
  REQUIRE(s.size() == 1);
  Complex zeta0 = std::polar(1.0, t0);
  Complex d = s[0].z() - zeta0;
  double ang = std::abs(std::arg(d / (-zeta0)));
  CHECK(ang <= alpha + 1e-12);

  auto zero = path_points(ApproachPath::stolz(t0, 0.0, 1, 6));
  auto rad = path_points(ApproachPath::radial(t0, 1, 6));
  REQUIRE(zero.size() == rad.size());
  for (std::size_t i = 0; i < rad.size(); ++i) CHECK(std::abs(zero[i].z() - rad[i].z()) < 1e-15);

  CHECK_THROWS_AS(path_points(ApproachPath::stolz(0.0, kPi / 2, 1, 4)), DomainError);
  CHECK_THROWS_AS(path_points(ApproachPath::radial(0.0, 0, 4)), DomainError);
  CHECK_THROWS_AS(path_points(ApproachPath::radial(0.0, 5, 4)), DomainError);
}

TEST_CASE("Stolz paths: monotone radius, inside the cone, never on the boundary") {
  for (double alpha : {kPi / 6, -kPi / 6, kPi / 3, -kPi / 3, 1.4}) {
    auto path = ApproachPath::stolz(-2.0, alpha, 1, 14);
    auto pts = path.points();
    double prev = 0;
    for (const auto& p : pts) {
      CHECK(p.z.r < 1.0);
      CHECK(p.z.r > prev);
      prev = p.z.r;
      Complex zeta0 = std::polar(1.0, -2.0);
      double ang = std::abs(std::arg((p.z.z() - zeta0) / (-zeta0)));
      CHECK(ang <= std::abs(alpha) + 1e-9);
    }
    // 1 - |z_k| is proportional to 2^-k at the deep end
    double s = std::ldexp(1.0, -14);
    CHECK((1 - pts.back().z.r) / s == Approx(std::cos(alpha)).epsilon(1e-3));
  }
}

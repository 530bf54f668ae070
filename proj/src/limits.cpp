#include "stieltjes/limits.hpp"

#include <algorithm>
#include <cmath>

#include "stieltjes/extrapolation.hpp"

namespace stieltjes {

namespace {

template <class T, class F>
LimitEstimateT<T> limit_impl(const F& field, const ApproachPath& path, double tol, int window) {
  if (window < 1) throw DomainError("angular_limit: window must be positive");
  LimitEstimateT<T> est;
  for (const auto& p : path.points()) est.trace.emplace_back(p.k, field(p.z));
  const auto& tr = est.trace;
  const std::size_t n = tr.size();
  const std::size_t w = std::min<std::size_t>(n, static_cast<std::size_t>(window));
  const std::size_t first = n - w;
  std::vector<T> acc;
  for (std::size_t i = first + 2; i < n; ++i) {
    auto a = aitken(tr[i - 2].second, tr[i - 1].second, tr[i].second);
    acc.push_back(a ? *a : tr[i].second);
  }
  if (acc.empty()) {
    est.extrapolated = tr.back().second;
    est.residual = n >= 2 ? std::abs(tr[n - 1].second - tr[n - 2].second) : 0.0;
  } else {
    est.extrapolated = acc.back();
    for (const auto& a : acc) est.residual = std::max(est.residual, std::abs(a - est.extrapolated));
  }
  bool finite = std::isfinite(std::abs(est.extrapolated)) && std::isfinite(est.residual);
  est.converged = finite && est.residual < tol;
  return est;
}

std::vector<ApproachPath> approaches(double angle, const LimitOptions& o) {
  std::vector<ApproachPath> out;
  for (double a : o.apertures)
    out.push_back(a == 0.0 ? ApproachPath::radial(angle, o.k_min, o.k_max)
                           : ApproachPath::stolz(angle, a, o.k_min, o.k_max));
  return out;
}

void add_rows(CheckReport& rep, const std::string& quantity, double angle, Complex expected,
              const DiskFieldC& field, const LimitOptions& o) {
  std::vector<Complex> values;
  for (const auto& path : approaches(angle, o)) {
    CheckRow row;
    row.quantity = quantity;
    row.angle = angle;
    row.approach = path.label();
    row.expected = expected;
    row.estimate = limit_impl<Complex>(field, path, o.tol, o.window);
    row.residual = std::abs(row.estimate.extrapolated - expected);
    row.grade = grade_of(row.residual, o.tol);
    if (!row.estimate.converged && row.grade == Grade::Pass) row.grade = Grade::Marginal;
    values.push_back(row.estimate.extrapolated);
    rep.rows.push_back(std::move(row));
  }
  double spread = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j) spread = std::max(spread, std::abs(values[i] - values[j]));
  rep.spreads.push_back({quantity, angle, spread, spread <= 3.0 * o.tol ? Grade::Pass : Grade::Fail});
}

double exact_derivative(const BoundaryFunction& phi, double t0) {
  auto d = phi.derivative(t0);
  if (!d) throw DomainError("no exact derivative known at t0");
  return *d;
}

double hilbert_value(const BoundaryFunction& phi, double tau, const PVOptions& pv) {
  return hilbert_stieltjes(phi, tau, pv).value;
}

}  // namespace

LimitEstimate angular_limit(const DiskField& field, const ApproachPath& path, double tol, int window) {
  return limit_impl<double>(field, path, tol, window);
}

LimitEstimateC angular_limit(const DiskFieldC& field, const ApproachPath& path, double tol, int window) {
  return limit_impl<Complex>(field, path, tol, window);
}

const char* to_string(Grade g) {
  switch (g) {
    case Grade::Pass:
      return "pass";
    case Grade::Marginal:
      return "marginal";
    case Grade::Fail:
      return "fail";
  }
  return "?";
}

Grade grade_of(double residual, double tol) {
  if (!(residual <= 3.0 * tol)) return Grade::Fail;
  return residual <= tol ? Grade::Pass : Grade::Marginal;
}

Grade worst(Grade a, Grade b) { return static_cast<int>(a) >= static_cast<int>(b) ? a : b; }

Grade CheckReport::overall() const {
  Grade g = Grade::Pass;
  for (const auto& r : rows) g = worst(g, r.grade);
  for (const auto& s : spreads) g = worst(g, s.grade);
  return g;
}

CheckReport theorem1_check(const BoundaryFunction& phi, const std::vector<double>& t0s, const LimitOptions& o) {
  CheckReport rep{"theorem1", o.tol, {}, {}};
  for (double t0 : t0s) {
    const double expected = exact_derivative(phi, t0);
    add_rows(rep, "U", t0, expected,
             [&](const DiskPoint& z) { return Complex(poisson_stieltjes(phi, z, o.transform).value); }, o);
  }
  return rep;
}

CheckReport theorem2_check(const BoundaryFunction& phi, const std::vector<double>& taus, const LimitOptions& o) {
  CheckReport rep{"theorem2", o.tol, {}, {}};
  for (double tau : taus) {
    const double expected = hilbert_value(phi, tau, o.pv);
    add_rows(rep, "V", tau, expected,
             [&](const DiskPoint& z) { return Complex(conj_poisson_stieltjes(phi, z, o.transform).value); }, o);
  }
  return rep;
}

CheckReport corollary8_check(const BoundaryFunction& phi, const std::vector<double>& angles, const LimitOptions& o) {
  CheckReport rep{"corollary8", o.tol, {}, {}};
  for (double a : angles) {
    const Complex target(exact_derivative(phi, a), hilbert_value(phi, a, o.pv));
    add_rows(rep, "S", a, target, [&](const DiskPoint& z) { return schwartz_stieltjes(phi, z, o.transform).value; }, o);
    add_rows(rep, "C", a, 0.5 * target + phi.rise() / (2.0 * kTwoPi),
             [&](const DiskPoint& z) { return cauchy_stieltjes(phi, z, o.transform).value; }, o);
  }
  return rep;
}

}  // namespace stieltjes

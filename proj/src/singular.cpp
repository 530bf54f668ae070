#include "stieltjes/singular.hpp"

#include <algorithm>
#include <cmath>

#include "stieltjes/extrapolation.hpp"
#include "stieltjes/kernels.hpp"

namespace stieltjes {

std::vector<double> default_eps_schedule() {
  std::vector<double> e;
  for (int j = 3; j <= 16; ++j) e.push_back(std::ldexp(1.0, -j));
  return e;
}

namespace {

constexpr double kInv2Pi = 1.0 / kTwoPi;

void check_schedule(const std::vector<double>& eps) {
  if (eps.empty()) throw DomainError("eps schedule is empty");
  for (std::size_t i = 0; i < eps.size(); ++i) {
    if (!(eps[i] > 0.0 && eps[i] < kPi)) throw DomainError("eps must lie in (0, pi)");
    if (i > 0 && !(eps[i] < eps[i - 1])) throw DomainError("eps schedule must be strictly decreasing");
  }
}

void check_tau(const BoundaryFunction& phi, double tau) {
  if (!phi.periodic()) throw DomainError("principal values need a periodic boundary function");
  if (phi.is_jump(tau)) throw JumpAtEvaluationPoint("tau coincides with a declared jump");
}

Status worse(Status a, Status b) {
  if (a == Status::Diverged || b == Status::Diverged) return Status::Diverged;
  if (a == Status::Inconclusive || b == Status::Inconclusive) return Status::Inconclusive;
  return Status::Converged;
}

// Folded integrator psi(u) = Phi(tau + u) + Phi(tau - u) on [lo, hi] in u.
RSResult folded_piece(const BoundaryFunction& phi, double tau, double lo, double hi, const RSOptions& base) {
  RSOptions o = base;
  if (!o.schedule) o.schedule = graded_schedule(0.0);
  for (double t : phi.jumps_in(tau - kPi, tau + kPi)) {
    double u = std::abs(t - tau);
    if (u >= lo && u <= hi) o.discontinuities.integrator.push_back(u);
  }
  auto psi = [&phi, tau](double u) { return phi.unwrapped(tau + u) + phi.unwrapped(tau - u); };
  auto g = [](double u) { return -kInv2Pi / std::tan(0.5 * u); };
  return rs_integral<double>(g, psi, lo, hi, o);
}

template <class T>
void finalize(PVResultT<T>& res, double stabilization_tol) {
  const auto& tr = res.eps_trace;
  const std::size_t n = tr.size();
  auto acc = [&](std::size_t i, bool& used) -> T {
    used = false;
    if (i >= 2) {
      if (auto a = aitken(tr[i - 2].second, tr[i - 1].second, tr[i].second)) {
        used = true;
        return *a;
      }
    }
    return tr[i].second;
  };
  bool used = false;
  res.value = acc(n - 1, used);
  res.extrapolated = used;
  if (n >= 2) {
    bool dummy = false;
    res.est_error = std::abs(res.value - acc(n - 2, dummy));
  } else {
    res.est_error = std::numeric_limits<double>::infinity();
  }
  res.converged = std::isfinite(res.est_error) && res.est_error <= stabilization_tol &&
                  res.quadrature_status != Status::Diverged;
  res.est_error += res.quadrature_error;
}

}  // namespace

RSResult truncated_hilbert(const BoundaryFunction& phi, double tau, double eps, const RSOptions& opts) {
  check_tau(phi, tau);
  if (!(eps > 0.0 && eps < kPi)) throw DomainError("eps must lie in (0, pi)");
  return folded_piece(phi, tau, eps, kPi, opts);
}

PVResult hilbert_stieltjes(const BoundaryFunction& phi, double tau, const PVOptions& opts) {
  check_tau(phi, tau);
  check_schedule(opts.eps);
  PVResult res;
  double acc = 0.0, prev_eps = kPi;
  for (double e : opts.eps) {
    auto piece = folded_piece(phi, tau, e, prev_eps, opts.quadrature);
    acc += piece.value;
    res.quadrature_error += piece.est_error;
    res.quadrature_status = worse(res.quadrature_status, piece.status);
    res.eps_trace.emplace_back(e, acc);
    prev_eps = e;
  }
  finalize(res, opts.stabilization_tol);
  return res;
}

double lemma2_truncation(const BoundaryFunction& phi, double t0, double r, const RSOptions& opts) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("lemma2_truncation: need 0 < r < 1");
  return truncated_hilbert(phi, t0, 1.0 - r, opts).value;
}

std::vector<Lemma2Entry> lemma2_difference_trace(const BoundaryFunction& phi, double t0,
                                                 const std::vector<double>& r_schedule,
                                                 const TransformOptions& topts, const RSOptions& popts) {
  if (!phi.derivative(t0)) throw DomainError("lemma2: boundary function not differentiable at t0");
  std::vector<Lemma2Entry> out;
  for (double r : r_schedule) {
    double v = conj_poisson_stieltjes(phi, DiskPoint(r, t0), topts).value;
    double tr = lemma2_truncation(phi, t0, r, popts);
    out.push_back({r, v, tr, std::abs(v - tr)});
  }
  return out;
}

PVResultC singular_cauchy_stieltjes(const BoundaryFunction& phi, double tau, const PVOptions& opts) {
  check_tau(phi, tau);
  check_schedule(opts.eps);
  for (double e : opts.eps)
    if (e >= 2.0) throw DomainError("chord exclusion must be below 2");
  const Complex zeta0 = std::polar(1.0, tau);
  auto g = [zeta0](double t) {
    const Complex zeta = std::polar(1.0, t);
    return zeta / (zeta - zeta0) * kInv2Pi;
  };
  const auto jumps = phi.jumps_in(tau - kPi, tau + kPi);
  auto f = phi.unwrapped_evaluator();
  auto piece = [&](double a, double b) {
    RSOptions o = opts.quadrature;
    if (!o.schedule) o.schedule = graded_schedule(tau);
    for (double t : jumps)
      if (t >= a && t <= b) o.discontinuities.integrator.push_back(t);
    return rs_integral<Complex>(g, f, a, b, o);
  };

  PVResultC res;
  Complex acc = 0.0;
  double prev = kPi;
  for (double e : opts.eps) {
    const double w = 2.0 * std::asin(0.5 * e);
    for (auto&& p : {piece(tau + w, tau + prev), piece(tau - prev, tau - w)}) {
      acc += p.value;
      res.quadrature_error += p.est_error;
      res.quadrature_status = worse(res.quadrature_status, p.status);
    }
    res.eps_trace.emplace_back(e, acc);
    prev = w;
  }
  finalize(res, opts.stabilization_tol);
  return res;
}

Corollary10Report corollary10_report(const BoundaryFunction& phi, double tau, const PVOptions& opts) {
  Corollary10Report rep;
  rep.h = hilbert_stieltjes(phi, tau, opts);
  rep.i = singular_cauchy_stieltjes(phi, tau, opts);
  rep.residual = std::abs(rep.h.value - 2.0 * rep.i.value.imag());
  rep.real_gap = std::abs(rep.i.value.real() - phi.rise() / (2.0 * kTwoPi));
  return rep;
}

double corollary10_residual(const BoundaryFunction& phi, double tau, const PVOptions& opts) {
  return corollary10_report(phi, tau, opts).residual;
}

}  // namespace stieltjes

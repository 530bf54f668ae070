#include "stieltjes/core.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace stieltjes {

double reduce_angle(double t) {
  double r = t - kTwoPi * std::nearbyint(t / kTwoPi);
  if (r <= -kPi) r += kTwoPi;
  if (r > kPi) r -= kTwoPi;
  return r;
}

double cantor_staircase(double x, int depth) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  double acc = 0.0, scale = 1.0;
  for (int i = 0; i < depth; ++i) {
    x *= 3.0;
    if (x < 1.0) {
      scale *= 0.5;
    } else if (x < 2.0) {
      return acc + scale * 0.5;
    } else {
      acc += scale * 0.5;
      scale *= 0.5;
      x -= 2.0;
    }
  }
  return acc + scale * x;
}

BoundaryFunction BoundaryFunction::closed_form(std::string name, RealFn value, RealFn derivative,
                                               double bound) {
  BoundaryFunction f;
  f.kind_ = Kind::ClosedForm;
  f.name_ = std::move(name);
  f.closed_ = {std::move(value), std::move(derivative)};
  f.bound_ = bound;
  f.collect_atoms();
  return f;
}

BoundaryFunction BoundaryFunction::step(std::string name, std::vector<Jump> jumps, double base) {
  BoundaryFunction f;
  f.kind_ = Kind::Step;
  f.name_ = std::move(name);
  for (auto& j : jumps) j.t = reduce_angle(j.t);
  std::sort(jumps.begin(), jumps.end(), [](const Jump& x, const Jump& y) { return x.t < y.t; });
  f.step_ = {std::move(jumps), base};
  double acc = base, sup = std::abs(base);
  for (const auto& j : f.step_.jumps) {
    acc += j.height;
    sup = std::max(sup, std::abs(acc));
  }
  f.bound_ = sup;
  f.collect_atoms();
  return f;
}

BoundaryFunction BoundaryFunction::piecewise(std::string name, std::vector<double> breaks,
                                             std::vector<ClosedForm> pieces, double bound) {
  if (pieces.size() != breaks.size() + 1)
    throw DomainError("piecewise: need one more piece than breakpoints");
  if (!std::is_sorted(breaks.begin(), breaks.end()))
    throw DomainError("piecewise: breakpoints must be increasing");
  for (double b : breaks)
    if (!(b > -kPi && b < kPi)) throw DomainError("piecewise: breakpoints must lie in (-pi, pi)");
  BoundaryFunction f;
  f.kind_ = Kind::Piecewise;
  f.name_ = std::move(name);
  f.piecewise_ = {std::move(breaks), std::move(pieces)};
  f.bound_ = bound;
  f.collect_atoms();
  return f;
}

BoundaryFunction BoundaryFunction::cantor(int depth) {
  if (depth < 1 || depth > 60) throw DomainError("cantor: depth must be in [1, 60]");
  BoundaryFunction f;
  f.kind_ = Kind::CantorLike;
  f.name_ = "cantor";
  f.cantor_.depth = depth;
  f.bound_ = 1.0;
  f.collect_atoms();
  return f;
}

BoundaryFunction BoundaryFunction::pathological(PathologicalData data) {
  if (!(data.a < data.b)) throw DomainError("pathological: need a < b");
  BoundaryFunction f;
  f.kind_ = Kind::Pathological;
  f.name_ = "pathological_example1";
  f.patho_ = data;
  return f;
}

BoundaryFunction BoundaryFunction::with_known_derivative(std::map<double, double> known) const {
  BoundaryFunction f = *this;
  for (const auto& [t, d] : known) f.known_[t] = d;
  return f;
}

double BoundaryFunction::window(double t) const {
  switch (kind_) {
    case Kind::ClosedForm:
      return closed_.value(t);
    case Kind::Step: {
      double acc = step_.base;
      for (const auto& j : step_.jumps) {
        if (j.t > t) break;
        acc += j.height;
      }
      return acc;
    }
    case Kind::Piecewise: {
      if (t >= kPi) return piecewise_.pieces.front().value(-kPi);
      auto it = std::upper_bound(piecewise_.breaks.begin(), piecewise_.breaks.end(), t);
      return piecewise_.pieces[it - piecewise_.breaks.begin()].value(t);
    }
    case Kind::CantorLike:
      return cantor_staircase((t + kPi) / kTwoPi, cantor_.depth);
    case Kind::Pathological:
      break;
  }
  return 0.0;
}

double BoundaryFunction::eval(double t) const {
  if (!std::isfinite(t)) throw DomainError("eval: non-finite angle");
  if (kind_ == Kind::Pathological) {
    if (t < patho_.a || t > patho_.b) throw DomainError("pathological: t outside [a, b]");
    if (t <= 0.0) return 0.0;
    double n = std::nearbyint(1.0 / t);
    if (n >= 1.0 && n <= static_cast<double>(patho_.n_max) && 1.0 / n == t) return n * n;
    return 0.0;
  }
  return window(reduce_angle(t));
}

double BoundaryFunction::unwrapped(double t) const {
  if (kind_ == Kind::Pathological) return eval(t);
  if (!std::isfinite(t)) throw DomainError("eval: non-finite angle");
  double tr = reduce_angle(t);
  double m = std::nearbyint((t - tr) / kTwoPi);
  return window(tr) + m * rise_;
}

double BoundaryFunction::rise() const { return rise_; }

void BoundaryFunction::collect_atoms() {
  atoms_.clear();
  switch (kind_) {
    case Kind::ClosedForm:
      rise_ = closed_.value(kPi) - closed_.value(-kPi);
      // sin(pi) - sin(-pi) is round-off, not mass
      if (std::abs(rise_) <= 1e-13 * std::max(1.0, bound_.value_or(1.0))) rise_ = 0.0;
      break;
    case Kind::Step:
      rise_ = 0.0;
      for (const auto& j : step_.jumps) {
        rise_ += j.height;
        if (j.height != 0.0) atoms_.push_back(j);
      }
      break;
    case Kind::Piecewise: {
      const auto& br = piecewise_.breaks;
      const auto& pc = piecewise_.pieces;
      for (std::size_t i = 0; i < br.size(); ++i) {
        double h = pc[i + 1].value(br[i]) - pc[i].value(br[i]);
        if (h != 0.0) atoms_.push_back({br[i], h});
      }
      double seam = pc.front().value(-kPi) - pc.back().value(kPi);
      if (seam != 0.0) atoms_.push_back({kPi, seam});
      rise_ = 0.0;
      break;
    }
    case Kind::CantorLike:
      rise_ = 1.0;
      break;
    case Kind::Pathological:
      rise_ = 0.0;
      break;
  }
}

std::vector<double> BoundaryFunction::jumps_in(double a, double b) const {
  std::vector<double> out;
  for (const auto& j : atoms_) {
    double m0 = std::ceil((a - j.t) / kTwoPi);
    double m1 = std::floor((b - j.t) / kTwoPi);
    for (double m = m0; m <= m1; m += 1.0) {
      double t = j.t + kTwoPi * m;
      if (t >= a && t <= b) out.push_back(t);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool BoundaryFunction::is_jump(double t, double tol) const {
  double tr = reduce_angle(t);
  for (const auto& j : atoms_)
    if (std::abs(reduce_angle(tr - j.t)) < tol) return true;
  return false;
}

std::optional<double> BoundaryFunction::derivative(double t) const {
  if (auto it = known_.find(t); it != known_.end()) return it->second;
  if (kind_ == Kind::Pathological) return std::nullopt;
  double tr = reduce_angle(t);
  if (auto it = known_.find(tr); it != known_.end()) return it->second;
  if (is_jump(tr)) return std::nullopt;
  switch (kind_) {
    case Kind::ClosedForm:
      if (closed_.derivative) return closed_.derivative(tr);
      return std::nullopt;
    case Kind::Step:
      return 0.0;
    case Kind::Piecewise: {
      for (double b : piecewise_.breaks)
        if (std::abs(tr - b) < 1e-12) return std::nullopt;
      if (kPi - std::abs(tr) < 1e-12) return std::nullopt;
      auto it = std::upper_bound(piecewise_.breaks.begin(), piecewise_.breaks.end(), tr);
      const auto& piece = piecewise_.pieces[it - piecewise_.breaks.begin()];
      if (piece.derivative) return piece.derivative(tr);
      return std::nullopt;
    }
    case Kind::CantorLike: {
      // Zero inside a removed middle third, undefined on the Cantor set.
      double x = (tr + kPi) / kTwoPi;
      if (x <= 0.0 || x >= 1.0) return std::nullopt;
      for (int i = 0; i < cantor_.depth; ++i) {
        x *= 3.0;
        if (x > 1.0 && x < 2.0) return 0.0;
        if (x >= 2.0) x -= 2.0;
      }
      return std::nullopt;
    }
    case Kind::Pathological:
      break;
  }
  return std::nullopt;
}

RealFn BoundaryFunction::evaluator() const {
  return [self = *this](double t) { return self.eval(t); };
}

RealFn BoundaryFunction::unwrapped_evaluator() const {
  return [self = *this](double t) { return self.unwrapped(t); };
}

Partition Partition::uniform(double a, double b, std::size_t n) {
  if (n == 0) throw DomainError("partition: need at least one cell");
  std::vector<double> br(n + 1);
  for (std::size_t i = 0; i <= n; ++i) br[i] = a + (b - a) * static_cast<double>(i) / n;
  br[n] = b;
  return midpoint(std::move(br));
}

Partition Partition::midpoint(std::vector<double> breaks) {
  Partition p;
  p.breaks = std::move(breaks);
  for (std::size_t i = 1; i < p.breaks.size(); ++i)
    p.tags.push_back(0.5 * (p.breaks[i - 1] + p.breaks[i]));
  p.validate();
  return p;
}

double Partition::mesh() const {
  double m = 0.0;
  for (std::size_t i = 1; i < breaks.size(); ++i) m = std::max(m, breaks[i] - breaks[i - 1]);
  return m;
}

Partition Partition::bisected() const {
  std::vector<double> br;
  br.reserve(2 * breaks.size());
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    br.push_back(breaks[i]);
    br.push_back(0.5 * (breaks[i] + breaks[i + 1]));
  }
  br.push_back(breaks.back());
  return midpoint(std::move(br));
}

void Partition::validate() const {
  if (breaks.size() < 2) throw DomainError("partition: need at least two breakpoints");
  if (tags.size() + 1 != breaks.size()) throw DomainError("partition: one tag per cell");
  for (std::size_t i = 1; i < breaks.size(); ++i) {
    if (breaks[i] < breaks[i - 1]) throw DomainError("partition: breakpoints must be nondecreasing");
    if (tags[i - 1] < breaks[i - 1] || tags[i - 1] > breaks[i])
      throw DomainError("partition: tag outside its cell");
  }
}

CyclicPartition CyclicPartition::uniform(double start, std::size_t n) {
  if (n == 0) throw DomainError("cyclic partition: need at least one cell");
  CyclicPartition p;
  for (std::size_t i = 0; i <= n; ++i) p.angles.push_back(start + kTwoPi * static_cast<double>(i) / n);
  p.angles[n] = start + kTwoPi;
  for (std::size_t i = 1; i <= n; ++i) p.tags.push_back(0.5 * (p.angles[i - 1] + p.angles[i]));
  return p;
}

double CyclicPartition::gap_sum() const {
  double s = 0.0;
  for (std::size_t i = 1; i < angles.size(); ++i) s += angles[i] - angles[i - 1];
  return s;
}

DiskPoint::DiskPoint(double r_, double theta_) : r(r_), theta(theta_) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("disk point: need 0 <= r < 1");
}

DiskPoint DiskPoint::from_complex(Complex z) { return DiskPoint(std::abs(z), std::arg(z)); }

ApproachPath ApproachPath::radial(double t0, int k_min, int k_max) {
  return ApproachPath{t0, PathMode::Radial, 0.0, k_min, k_max};
}

ApproachPath ApproachPath::stolz(double t0, double alpha, int k_min, int k_max) {
  return ApproachPath{t0, PathMode::Stolz, alpha, k_min, k_max};
}

std::vector<ApproachPath::Point> ApproachPath::points() const {
  if (k_min < 1 || k_max < k_min) throw DomainError("approach path: need 1 <= k_min <= k_max");
  double a = mode == PathMode::Radial ? 0.0 : alpha;
  if (!(std::abs(a) < kPi / 2)) throw DomainError("approach path: opening angle must satisfy |alpha| < pi/2");
  const Complex zeta(std::cos(target), std::sin(target));
  const Complex dir = std::polar(1.0, a);
  const double c = std::cos(a);
  std::vector<Point> out;
  for (int k = k_min; k <= k_max; ++k) {
    double s = std::ldexp(1.0, -k);
    if (s >= c) continue;  // clip: |z_k| must increase
    Complex z = zeta * (1.0 - s * dir);
    if (a == 0.0)
      out.push_back({k, DiskPoint(1.0 - s, target)});
    else
      out.push_back({k, DiskPoint::from_complex(z)});
  }
  if (out.empty()) throw DomainError("approach path: no points survive clipping");
  return out;
}

std::string ApproachPath::label() const {
  if (mode == PathMode::Radial || alpha == 0.0) return "radial";
  char buf[48];
  std::snprintf(buf, sizeof buf, "stolz%+.6f", alpha);
  return buf;
}

std::vector<DiskPoint> path_points(const ApproachPath& path) {
  std::vector<DiskPoint> out;
  for (const auto& p : path.points()) out.push_back(p.z);
  return out;
}

const char* to_string(Status s) {
  switch (s) {
    case Status::Converged:
      return "Converged";
    case Status::Diverged:
      return "Diverged";
    case Status::Inconclusive:
      return "Inconclusive";
  }
  return "?";
}

}  // namespace stieltjes

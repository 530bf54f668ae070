#include "stieltjes/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace stieltjes {

std::vector<double> merge_grids(std::vector<double> x, std::vector<double> y) {
  std::vector<double> out;
  out.reserve(x.size() + y.size());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  std::merge(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

std::vector<double> uniform_grid(double a, double b, std::size_t n) {
  std::vector<double> g(n + 1);
  for (std::size_t i = 0; i <= n; ++i) g[i] = a + (b - a) * static_cast<double>(i) / n;
  g[0] = a;
  g[n] = b;
  return g;
}

std::vector<double> clip(std::vector<double> g, double a, double b) {
  g.erase(std::remove_if(g.begin(), g.end(), [&](double x) { return x < a || x > b; }), g.end());
  return g;
}

}  // namespace

MeshSchedule uniform_schedule() {
  return [](double a, double b, int k) { return uniform_grid(a, b, std::size_t{1} << k); };
}

MeshSchedule graded_schedule(double point) {
  return [point](double a, double b, int k) {
    const std::size_t n = std::size_t{1} << k;
    auto g = uniform_grid(a, b, n);
    double d0 = std::abs(a - point), d1 = std::abs(b - point);
    if (d0 == 0.0 || d1 == 0.0) return g;
    const double sgn = (a + b) / 2 > point ? 1.0 : -1.0;
    const double l0 = std::log(std::min(d0, d1)), l1 = std::log(std::max(d0, d1));
    std::vector<double> geo(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
      geo[i] = point + sgn * std::exp(l0 + (l1 - l0) * static_cast<double>(i) / n);
    return merge_grids(std::move(g), clip(std::move(geo), a, b));
  };
}

MeshSchedule poisson_schedule(double center, double r) {
  return [center, r](double a, double b, int k) {
    const std::size_t n = std::size_t{1} << k;
    auto g = uniform_grid(a, b, n);
    if (r <= 0.5) return g;
    const double c = (1.0 - r) / (1.0 + r);
    std::vector<double> mob;
    mob.reserve(n + 1);
    for (std::size_t i = 1; i < n; ++i) {
      double s = -kPi + kTwoPi * static_cast<double>(i) / n;
      mob.push_back(center + 2.0 * std::atan(c * std::tan(0.5 * s)));
    }
    return merge_grids(std::move(g), clip(std::move(mob), a, b));
  };
}

namespace {

template <class T>
double diameter(const std::vector<T>& v) {
  double d = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) d = std::max(d, std::abs(v[i] - v[j]));
  return d;
}

bool finite(double x) { return std::isfinite(x); }
bool finite(Complex x) { return std::isfinite(x.real()) && std::isfinite(x.imag()); }

std::vector<double> sorted_inside(std::vector<double> v, double a, double b) {
  v = clip(std::move(v), a, b);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

template <class T>
RSResultT<T> rs_forward(const std::function<T(double)>& g, const RealFn& f, double a, double b,
                        const RSOptions& opts) {
  if (opts.min_level < 0 || opts.max_level < opts.min_level || opts.max_level > 26)
    throw DomainError("rs_integral: bad level range");
  if (opts.replicas < 0) throw DomainError("rs_integral: negative replica count");
  const MeshSchedule schedule = opts.schedule ? opts.schedule : uniform_schedule();

  auto f_jumps = sorted_inside(opts.discontinuities.integrator, a, b);
  auto g_jumps = sorted_inside(opts.discontinuities.integrand, a, b);
  // Integrator jumps where g is continuous may serve as tags for both
  // neighbouring cells; that makes the jump term exact.
  std::vector<double> pinned;
  std::set_difference(f_jumps.begin(), f_jumps.end(), g_jumps.begin(), g_jumps.end(),
                      std::back_inserter(pinned));
  const auto extra = merge_grids(f_jumps, g_jumps);

  RSResultT<T> res;
  T prev{};
  double prev_spread = -1.0;
  int growth = 0;
  std::vector<T> sums(opts.replicas + 1);

  for (int k = opts.min_level; k <= opts.max_level; ++k) {
    auto grid = merge_grids(schedule(a, b, k), extra);
    if (grid.front() != a || grid.back() != b)
      throw DomainError("rs_integral: schedule must span [a, b]");
    const std::size_t n = grid.size() - 1;

    std::vector<double> df(n);
    std::vector<double> pin_tag(n, std::nan(""));
    {
      double f0 = f(grid[0]);
      for (std::size_t i = 0; i < n; ++i) {
        double f1 = f(grid[i + 1]);
        df[i] = f1 - f0;
        f0 = f1;
      }
    }
    if (!pinned.empty()) {
      for (std::size_t i = 0; i < n; ++i) {
        if (std::binary_search(pinned.begin(), pinned.end(), grid[i + 1]))
          pin_tag[i] = grid[i + 1];
        else if (std::binary_search(pinned.begin(), pinned.end(), grid[i]))
          pin_tag[i] = grid[i];
      }
    }

    T mid{};
    for (std::size_t i = 0; i < n; ++i) {
      if (df[i] == 0.0) continue;
      double tag = std::isnan(pin_tag[i]) ? 0.5 * (grid[i] + grid[i + 1]) : pin_tag[i];
      mid += g(tag) * df[i];
    }
    sums[0] = mid;
    for (int rep = 0; rep < opts.replicas; ++rep) {
      std::seed_seq seq{static_cast<std::uint32_t>(opts.seed), static_cast<std::uint32_t>(opts.seed >> 32),
                        static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(rep)};
      std::mt19937_64 rng(seq);
      T s{};
      for (std::size_t i = 0; i < n; ++i) {
        // One draw per cell keeps streams aligned across integrands.
        double u = (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
        if (df[i] == 0.0) continue;
        double tag = std::isnan(pin_tag[i]) ? grid[i] + u * (grid[i + 1] - grid[i]) : pin_tag[i];
        s += g(tag) * df[i];
      }
      sums[rep + 1] = s;
    }

    double mesh = 0.0;
    for (std::size_t i = 0; i < n; ++i) mesh = std::max(mesh, grid[i + 1] - grid[i]);
    const double spread = diameter(sums);
    res.levels.push_back({k, mesh, n, Complex(mid), spread});
    res.value = mid;

    bool bad = !finite(mid) || !std::isfinite(spread);
    for (const auto& s : sums) bad = bad || !finite(s);
    if (bad) {
      res.status = Status::Diverged;
      res.est_error = std::numeric_limits<double>::infinity();
      return res;
    }

    if (prev_spread > 0.0 && spread >= opts.divergence_factor * prev_spread)
      ++growth;
    else
      growth = 0;
    prev_spread = spread;

    if (k > opts.min_level) {
      res.est_error = std::max(std::abs(mid - prev), spread);
      const double tol = std::max(opts.rel_tol * std::abs(mid), opts.abs_tol);
      if (growth >= opts.divergence_levels) {
        res.status = Status::Diverged;
        return res;
      }
      if (res.est_error <= tol) {
        res.status = Status::Converged;
        return res;
      }
    } else {
      res.est_error = spread;
    }
    prev = mid;
  }
  res.status = Status::Inconclusive;
  return res;
}

}  // namespace

template <class T>
RSResultT<T> rs_integral(const std::function<T(double)>& g, const RealFn& f, double a, double b,
                         const RSOptions& opts) {
  if (!std::isfinite(a) || !std::isfinite(b)) throw DomainError("rs_integral: interval must be finite");
  if (a == b) {
    RSResultT<T> res;
    res.levels.push_back({opts.min_level, 0.0, 0, Complex(0.0), 0.0});
    res.status = Status::Converged;
    return res;
  }
  if (a < b) return rs_forward<T>(g, f, a, b, opts);
  auto res = rs_forward<T>(g, f, b, a, opts);
  res.value = -res.value;
  for (auto& l : res.levels) l.sum = -l.sum;
  return res;
}

template RSResultT<double> rs_integral<double>(const std::function<double(double)>&, const RealFn&,
                                               double, double, const RSOptions&);
template RSResultT<Complex> rs_integral<Complex>(const std::function<Complex(double)>&,
                                                 const RealFn&, double, double, const RSOptions&);

double by_parts_residual(const RealFn& g, const RealFn& f, double a, double b,
                         const RSOptions& opts) {
  auto i1 = rs_integral<double>(g, f, a, b, opts);
  if (!i1.converged()) throw QuadratureFailure("by_parts: int g df did not converge", i1.status);
  RSOptions swapped = opts;
  std::swap(swapped.discontinuities.integrand, swapped.discontinuities.integrator);
  auto i2 = rs_integral<double>(f, g, a, b, swapped);
  if (!i2.converged()) throw QuadratureFailure("by_parts: int f dg did not converge", i2.status);
  return std::abs(i1.value + i2.value - (g(b) * f(b) - g(a) * f(a)));
}

double CyclicPair::residual() const { return std::abs(g_df.value + f_dg.value); }

CyclicPair cyclic_rs_integral(const RealFn& g, const RealFn& f, const RSOptions& opts,
                              double start) {
  const double end = start + kTwoPi;
  auto replicate = [&](const std::vector<double>& ts) {
    std::vector<double> out;
    for (double t : ts) {
      for (double m = std::ceil((start - t) / kTwoPi); t + kTwoPi * m <= end; m += 1.0)
        out.push_back(t + kTwoPi * m);
    }
    return out;
  };
  RSOptions o1 = opts;
  o1.discontinuities.integrand = replicate(opts.discontinuities.integrand);
  o1.discontinuities.integrator = replicate(opts.discontinuities.integrator);
  RSOptions o2 = o1;
  std::swap(o2.discontinuities.integrand, o2.discontinuities.integrator);
  return {rs_integral<double>(g, f, start, end, o1), rs_integral<double>(f, g, start, end, o2)};
}

}  // namespace stieltjes

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "stieltjes/core.hpp"

namespace stieltjes {

using ComplexFn = std::function<Complex(double)>;

// Breakpoints for level k on [a, b]; must start at a and end at b.
using MeshSchedule = std::function<std::vector<double>(double a, double b, int k)>;

MeshSchedule uniform_schedule();
// Uniform grid merged with a geometric grid clustered toward `point`
// (either a or b).
MeshSchedule graded_schedule(double point);
// Uniform grid merged with the image of a uniform grid under the Mobius map
// that spreads a Poisson peak of radius r centred at `center`. Meant for
// windows [center - pi, center + pi].
MeshSchedule poisson_schedule(double center, double r);

std::vector<double> merge_grids(std::vector<double> x, std::vector<double> y);

struct Discontinuities {
  std::vector<double> integrand;
  std::vector<double> integrator;
};

struct RSOptions {
  int min_level = 4;
  int max_level = 18;
  MeshSchedule schedule;  // empty: uniform 2^k cells
  int replicas = 8;
  std::uint64_t seed = 0;
  double rel_tol = 1e-8;
  double abs_tol = 1e-12;
  double divergence_factor = 2.0;
  int divergence_levels = 3;
  Discontinuities discontinuities;
};

// The finite tagged sum over p; g may be real or complex valued.
template <class G, class F>
auto rs_sum(const G& g, const F& f, const Partition& p) {
  p.validate();
  decltype(g(0.0) * 1.0) s{};
  for (std::size_t i = 0; i < p.tags.size(); ++i) s += g(p.tags[i]) * (f(p.breaks[i + 1]) - f(p.breaks[i]));
  return s;
}

template <class T>
RSResultT<T> rs_integral(const std::function<T(double)>& g, const RealFn& f, double a, double b,
                         const RSOptions& opts = {});

extern template RSResultT<double> rs_integral<double>(const std::function<double(double)>&,
                                                      const RealFn&, double, double,
                                                      const RSOptions&);
extern template RSResultT<Complex> rs_integral<Complex>(const std::function<Complex(double)>&,
                                                        const RealFn&, double, double,
                                                        const RSOptions&);

struct QuadratureFailure : std::runtime_error {
  Status status;
  QuadratureFailure(const std::string& what, Status s) : std::runtime_error(what), status(s) {}
};

// |int g df + int f dg - (g(b)f(b) - g(a)f(a))|. The discontinuity lists in
// opts are read for int g df and swapped for int f dg.
double by_parts_residual(const RealFn& g, const RealFn& f, double a, double b,
                         const RSOptions& opts = {});

struct CyclicPair {
  RSResult g_df;
  RSResult f_dg;
  double residual() const;
};

// Both integrals over one turn [start, start + 2 pi]. Jump lists are angles
// (any representative); they are replicated into the window.
CyclicPair cyclic_rs_integral(const RealFn& g, const RealFn& f, const RSOptions& opts = {},
                              double start = -kPi);

}  // namespace stieltjes

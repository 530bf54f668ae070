#include "stieltjes/zoo.hpp"

#include <cmath>

namespace stieltjes {

namespace {

double param(const std::vector<std::string>& p, std::size_t i, double fallback) {
  if (i >= p.size() || p[i].empty()) return fallback;
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(p[i], &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != p[i].size()) throw DomainError("bad numeric parameter '" + p[i] + "'");
  return v;
}

void max_params(const std::string& name, const std::vector<std::string>& p, std::size_t n) {
  if (p.size() > n) throw DomainError("too many parameters for zoo entry '" + name + "'");
}

BoundaryFunction cbv_demo() {
  std::vector<ClosedForm> pieces{
      {[](double t) { return std::cos(t); }, [](double t) { return -std::sin(t); }},
      {[](double t) { return 0.3 + 0.25 * (t + 1.5) * (t + 1.5); }, [](double t) { return 0.5 * (t + 1.5); }},
      {[](double t) { return std::sqrt(std::max(t, 0.0)); }, [](double t) { return 0.5 / std::sqrt(t); }},
      {[](double t) { return 1.0 - 0.5 * (t - 1.2); }, [](double) { return -0.5; }},
  };
  return BoundaryFunction::piecewise("cbv_demo", {-1.5, 0.0, 1.2}, std::move(pieces), 1.1);
}

}  // namespace

ZooEntry lookup(const std::string& name, const std::vector<std::string>& p) {
  if (name == "constant" || name == "const") {
    max_params(name, p, 1);
    const double c = param(p, 0, 1.0);
    return {"constant", "smooth", "Phi(t) = c (default 1); dPhi = 0",
            BoundaryFunction::closed_form("constant", [c](double) { return c; }, [](double) { return 0.0; },
                                          std::abs(c))};
  }
  if (name == "linear") {
    max_params(name, p, 0);
    return {"linear", "smooth", "Phi(t) = t on (-pi, pi]; dPhi = dt, rise 2pi",
            BoundaryFunction::closed_form("linear", [](double t) { return t; }, [](double) { return 1.0; }, kPi)};
  }
  if (name == "sin") {
    max_params(name, p, 0);
    return {"sin", "smooth", "Phi(t) = sin t",
            BoundaryFunction::closed_form("sin", [](double t) { return std::sin(t); },
                                          [](double t) { return std::cos(t); }, 1.0)};
  }
  if (name == "cos") {
    max_params(name, p, 0);
    return {"cos", "smooth", "Phi(t) = cos t",
            BoundaryFunction::closed_form("cos", [](double t) { return std::cos(t); },
                                          [](double t) { return -std::sin(t); }, 1.0)};
  }
  if (name == "step2pi") {
    max_params(name, p, 1);
    const double t0 = param(p, 0, 0.0);
    return {"step2pi", "bv", "unit point mass: jump 2pi at t0 (default 0)",
            BoundaryFunction::step("step2pi", {{t0, kTwoPi}})};
  }
  if (name == "multistep") {
    max_params(name, p, 0);
    return {"multistep", "bv", "jumps +1.5 at -2, -2.5 at 0.5, +1 at 2.2",
            BoundaryFunction::step("multistep", {{-2.0, 1.5}, {0.5, -2.5}, {2.2, 1.0}})};
  }
  if (name == "cantor") {
    max_params(name, p, 1);
    const double d = param(p, 0, 24.0);
    if (d != std::floor(d)) throw DomainError("cantor depth must be an integer");
    return {"cantor", "singular", "Cantor staircase phi((t+pi)/2pi), rise 1",
            BoundaryFunction::cantor(static_cast<int>(d))};
  }
  if (name == "sawtooth") {
    max_params(name, p, 0);
    return {"sawtooth", "bv", "Phi(t) = t on [-pi, pi), jump -2pi at pi",
            BoundaryFunction::piecewise("sawtooth", {},
                                        {{[](double t) { return t; }, [](double) { return 1.0; }}}, kPi)};
  }
  if (name == "cbv_demo") {
    max_params(name, p, 0);
    return {"cbv_demo", "cbv", "four smooth pieces, jumps at -1.5, 0, 1.2, pi; sqrt cusp at 0+", cbv_demo()};
  }
  if (name == "pathological_example1") {
    max_params(name, p, 1);
    PathologicalData d;
    d.n_max = static_cast<long>(param(p, 0, 1e4));
    return {"pathological_example1", "non-integrable",
            "g(1/n) = n^2 on [0,1], else 0; expected Diverged against f(t) = t",
            BoundaryFunction::pathological(d)};
  }
  throw DomainError("unknown zoo entry '" + name + "'");
}

std::vector<ZooEntry> catalog() {
  std::vector<ZooEntry> out;
  for (const char* n : {"constant", "linear", "sin", "cos", "step2pi", "multistep", "cantor", "sawtooth",
                        "cbv_demo", "pathological_example1"})
    out.push_back(lookup(n));
  return out;
}

}  // namespace stieltjes

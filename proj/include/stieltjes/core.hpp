#pragma once

#include <complex>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace stieltjes {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

using RealFn = std::function<double(double)>;
using Complex = std::complex<double>;

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

struct SingularityError : std::domain_error {
  using std::domain_error::domain_error;
};

// Reduce t into (-pi, pi].
double reduce_angle(double t);

struct Jump {
  double t;
  double height;
};

struct ClosedForm {
  RealFn value;
  RealFn derivative;  // may be empty
};

struct StepData {
  std::vector<Jump> jumps;  // locations in (-pi, pi]
  double base = 0.0;
};

// Pieces live on [-pi, b_1), [b_1, b_2), ..., [b_m, pi]. The value at pi is
// taken from the first piece at -pi so that the periodic extension stays
// right-continuous.
struct PiecewiseData {
  std::vector<double> breaks;
  std::vector<ClosedForm> pieces;
};

struct CantorData {
  int depth = 24;
};

// Example-1 style integrand on [a, b]: g(1/n) = n^2 for n <= n_max, 0 elsewhere.
struct PathologicalData {
  double a = 0.0;
  double b = 1.0;
  long n_max = 10000;
};

enum class Kind { ClosedForm, Step, Piecewise, CantorLike, Pathological };

class BoundaryFunction {
 public:
  static BoundaryFunction closed_form(std::string name, RealFn value, RealFn derivative,
                                      double bound);
  static BoundaryFunction step(std::string name, std::vector<Jump> jumps, double base = 0.0);
  static BoundaryFunction piecewise(std::string name, std::vector<double> breaks,
                                    std::vector<ClosedForm> pieces, double bound);
  static BoundaryFunction cantor(int depth = 24);
  static BoundaryFunction pathological(PathologicalData data = {});

  BoundaryFunction with_known_derivative(std::map<double, double> known) const;

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  bool periodic() const { return kind_ != Kind::Pathological; }
  std::optional<double> bound() const { return bound_; }
  const std::map<double, double>& known_derivatives() const { return known_; }
  const PathologicalData& pathological_data() const { return patho_; }
  int cantor_depth() const { return cantor_.depth; }

  // Phi(t), periodically reduced.
  double eval(double t) const;
  // Phi(t') + m*rise where t = t' + 2 pi m; the integrator used by all
  // transforms, so that dPhi is a genuine periodic measure.
  double unwrapped(double t) const;
  // Phi(pi) - Phi(-pi+): mass of dPhi over one period.
  double rise() const;
  // Atoms of dPhi in (-pi, pi], zero-height atoms dropped.
  const std::vector<Jump>& jumps() const { return atoms_; }
  // Atom locations (all periodic copies) inside [a, b].
  std::vector<double> jumps_in(double a, double b) const;
  bool is_jump(double t, double tol = 1e-12) const;
  std::optional<double> derivative(double t) const;
  RealFn evaluator() const;
  RealFn unwrapped_evaluator() const;

 private:
  double window(double t) const;  // t in (-pi, pi]
  void collect_atoms();

  Kind kind_ = Kind::ClosedForm;
  std::string name_;
  ClosedForm closed_;
  StepData step_;
  PiecewiseData piecewise_;
  CantorData cantor_;
  PathologicalData patho_;
  std::optional<double> bound_;
  std::map<double, double> known_;
  std::vector<Jump> atoms_;
  double rise_ = 0.0;
};

// Standard Cantor staircase on [0,1] evaluated through `depth` ternary digits.
double cantor_staircase(double x, int depth);

struct Partition {
  std::vector<double> breaks;
  std::vector<double> tags;

  static Partition uniform(double a, double b, std::size_t n);
  static Partition midpoint(std::vector<double> breaks);
  double mesh() const;
  Partition bisected() const;
  void validate() const;
};

// Angles zeta_0 < ... < zeta_p = zeta_0 + 2 pi, unrolled.
struct CyclicPartition {
  std::vector<double> angles;
  std::vector<double> tags;

  static CyclicPartition uniform(double start, std::size_t n);
  double gap_sum() const;
};

struct DiskPoint {
  double r = 0.0;
  double theta = 0.0;

  DiskPoint() = default;
  DiskPoint(double r_, double theta_);
  static DiskPoint from_complex(Complex z);
  Complex z() const { return std::polar(r, theta); }
};

enum class PathMode { Radial, Stolz };

struct ApproachPath {
  double target = 0.0;
  PathMode mode = PathMode::Radial;
  double alpha = 0.0;  // signed: side of the inward radius
  int k_min = 1;
  int k_max = 14;

  static ApproachPath radial(double t0, int k_min = 1, int k_max = 14);
  static ApproachPath stolz(double t0, double alpha, int k_min = 1, int k_max = 14);

  struct Point {
    int k;
    DiskPoint z;
  };
  std::vector<Point> points() const;
  std::string label() const;
};

std::vector<DiskPoint> path_points(const ApproachPath& path);

enum class Status { Converged, Diverged, Inconclusive };
const char* to_string(Status s);

struct Level {
  int k;
  double mesh;
  std::size_t cells;
  Complex sum;  // midpoint-tag sum
  double spread;
};

template <class T>
struct RSResultT {
  T value{};
  std::vector<Level> levels;
  double est_error = 0.0;
  Status status = Status::Inconclusive;

  bool converged() const { return status == Status::Converged; }
};

using RSResult = RSResultT<double>;
using RSResultC = RSResultT<Complex>;

template <class T>
struct LimitEstimateT {
  std::vector<std::pair<int, T>> trace;
  T extrapolated{};
  double residual = 0.0;
  bool converged = false;
};

using LimitEstimate = LimitEstimateT<double>;
using LimitEstimateC = LimitEstimateT<Complex>;

}  // namespace stieltjes

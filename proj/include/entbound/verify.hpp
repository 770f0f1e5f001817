#pragma once

// Randomized verification of the scalar inequalities and the weighted
// monogamy/polygamy bounds, plus the parameter sweeps behind the two
// worked examples (concurrence of a generalized Schmidt state and SCRENoA of
// a W-class state).
//
// All routines are deterministic functions of their arguments: the same seed
// and options give identical reports and byte-identical CSV.

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "entbound/bounds.hpp"
#include "entbound/states.hpp"

namespace entbound {

inline constexpr std::size_t kMaxFailureSamples = 100;
inline constexpr std::size_t kMaxGridCells = 1'000'000;

struct FailureSample {
  std::string inputs;
  double margin = 0.0;
};

/// Tally for one inequality family checked at one tolerance.
struct FamilyReport {
  std::string name;
  double tolerance = 0.0;
  bool relative = false;
  std::uint64_t total = 0;
  std::uint64_t failures = 0;
  std::uint64_t skipped = 0;
  double worst_margin = std::numeric_limits<double>::infinity();
};

/// Aggregate over one or more families. Within a family,
/// failures == 0 exactly when worst_margin >= -tolerance.
struct VerificationReport {
  std::uint64_t total = 0;
  std::uint64_t failures = 0;
  std::uint64_t skipped = 0;
  double worst_margin = std::numeric_limits<double>::infinity();
  std::vector<FailureSample> failure_samples;  // at most kMaxFailureSamples
  std::vector<FamilyReport> families;

  bool passed() const noexcept { return failures == 0; }

  /// Appends a family and returns its index for record()/skip().
  std::size_t add_family(std::string name, double tolerance, bool relative = false);
  /// Counts one check; margin < -tolerance is a failure.
  void record(std::size_t family, double margin, const std::function<std::string()>& describe);
  void skip(std::size_t family, std::uint64_t count = 1);
  void merge(const VerificationReport& other);
};

// ---------------------------------------------------------------------------
// Scalar inequalities on (1+t)^x

struct ScalarTolerance {
  double absolute = 1e-12;  // lower-bound families
  double relative = 1e-9;   // upper-bound families, scaled by max(1, (1+t)^x)
};

struct ScalarSample {
  double t = 0.0;
  double x = 0.0;
  double a = 0.0;
  double param = 0.0;  // p or q where a family needs one
};

struct ScalarCheck {
  std::string name;
  double x_lo = 0.0;
  double x_hi = 1.0;
  bool x_lo_open = true;
  double param_lo = 0.5;
  double param_hi = 1.0;
  bool relative = false;
  /// Returns the (possibly scaled) margin; negative means violated.
  std::function<double(const ScalarSample&)> margin;
};

/// Scalar inequalities and dominance over the three prior families:
/// lower bounds for x in (0, 1] and upper bounds for x in [1, 8], with
/// a in [1, 10] and t in [a, 100].
std::vector<ScalarCheck> default_scalar_checks();

/// n samples per check.
VerificationReport run_scalar_checks(const std::vector<ScalarCheck>& checks, std::uint64_t n,
                                     std::uint64_t seed, ScalarTolerance tol = {});
VerificationReport verify_scalar(std::uint64_t n, std::uint64_t seed, ScalarTolerance tol = {});

// ---------------------------------------------------------------------------
// State-level checks

struct MonogamyOptions {
  std::uint64_t three_qubit_samples = 10'000;
  std::uint64_t four_qubit_samples = 1'000;
  double r = 2.0;
  std::vector<double> alpha_grid = {0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 1.75, 2.0};
  double tolerance = 1e-8;
};

/// Haar-random states, concurrence, a = max(1, max_admissible_a).
VerificationReport verify_monogamy_states(const MonogamyOptions& options, std::uint64_t seed);

/// Checks one measure vector over an alpha grid; `a` defaults as in BoundSpec.
VerificationReport verify_monogamy_fixture(const MeasureVector& mv, double r, std::optional<double> a,
                                           const std::vector<double>& alpha_grid, double tolerance);

/// Exponents smaller than this are not sampled per state; such samples are
/// counted as skipped.
inline constexpr double kMinSampledPolygamyExponent = 0.05;

struct PolygamyOptions {
  std::uint64_t samples = 10'000;
  /// Fixed s; when empty each sample uses s = min(1, log2(largest/smallest)).
  std::optional<double> s;
  /// Fixed a; when empty a = max(1, max_admissible_a) at the sample's s.
  std::optional<double> a;
  /// Explicit beta values; when empty, beta_points values evenly spaced on
  /// [s, beta_max].
  std::vector<double> beta_grid;
  std::size_t beta_points = 8;
  double beta_max = 3.0;
  double tolerance = 1e-8;
};

/// Random W-class states, SCRENoA. Samples whose ratio condition fails at a
/// fixed (a, s) are skipped, not failed.
VerificationReport verify_polygamy_states(const PolygamyOptions& options, std::uint64_t seed);

VerificationReport verify_polygamy_fixture(const MeasureVector& mv, double s, std::optional<double> a,
                                           const std::vector<double>& beta_grid, double tolerance);

/// Base relations the bounds assume: squared-concurrence monogamy on Haar
/// 3-qubit states and SCRENoA polygamy (s = 1) on W-class states.
VerificationReport verify_base_relations(std::uint64_t n, std::uint64_t seed, double tolerance = 1e-8);

/// Uniformly random nonnegative (a, b, c) on the unit sphere.
PureState random_w_class_state(Rng& rng);

// ---------------------------------------------------------------------------
// Example sweeps

struct Axis {
  std::string name;
  double lo = 0.0;
  double hi = 0.0;
  double step = 1.0;

  std::size_t count() const;
  std::size_t count_from(double start) const;
  double at(double start, std::size_t i) const { return start + static_cast<double>(i) * step; }
};

/// Two-axis grid. When axis1_starts_at_axis2 is set, axis1 runs from the
/// current axis2 value to axis1.hi (beta in [s, 3]) and axis2 is the outer
/// loop; otherwise axis1 is the outer loop.
struct SweepGrid {
  Axis axis1;
  Axis axis2;
  bool axis1_starts_at_axis2 = false;

  void validate() const;
};

enum class Example { Example1, Example2 };

std::string_view to_string(Example example);
std::optional<Example> parse_example(std::string_view name);

/// alpha in [0, 1] step 0.02, r in [2, 5] step 0.05 (example1);
/// beta in [s, 3] step 0.05, s in [0.6, 1] step 0.01 (example2).
SweepGrid default_grid(Example example);

struct DominanceRow {
  double axis1 = 0.0;  // alpha or beta
  double axis2 = 0.0;  // r or s
  double ours = 0.0;   // Z3 / W3
  double jfq = 0.0;    // Z1 / W1
  std::optional<double> zjz;  // Z2 / W2; empty where out of domain
  /// Signed so that >= 0 means ours is at least as tight.
  double advantage_jfq = 0.0;
  std::optional<double> advantage_zjz;
  /// Whether the ordering claim is asserted for this cell.
  bool asserted = true;
};

struct DominanceTable {
  Example example = Example::Example1;
  std::vector<DominanceRow> rows;
};

/// example1 uses the concurrence vector of the Schmidt state with
/// l = (1/2, sqrt6/6, sqrt6/6, 1/2, sqrt6/6) and a = sqrt6/2; zjz values are
/// produced only where alpha/r <= 1/2 and alpha = 0 cells are not asserted.
/// example2 uses the SCRENoA vector of the default W-class state,
/// a = 2^0.6 and the q = 1/2 prior variant.
DominanceTable dominance_scan(Example example, const SweepGrid& grid);

/// Counts ordering violations in a table (asserted cells only).
VerificationReport check_dominance(const DominanceTable& table, double tolerance = 1e-12);

/// Both examples on their default grids.
VerificationReport verify_dominance(double tolerance = 1e-12);

/// example1: alpha,r,Z1,Z2,Z3 (Z2 blank out of domain);
/// example2: beta,s,W1,W2,W3,W1_minus_W3,W2_minus_W3.
void write_dominance_csv(const DominanceTable& table, std::ostream& out);

/// 12 significant digits, C locale.
std::string format_number(double value);

}  // namespace entbound

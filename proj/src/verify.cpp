#include "entbound/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "entbound/error.hpp"
#include "entbound/measures.hpp"

namespace entbound {

namespace {

std::string describe_values(const std::vector<double>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += format_number(values[i]);
  }
  return out + "]";
}

std::string describe_vector(const MeasureVector& mv) {
  return "one_vs_rest=" + format_number(mv.one_vs_rest) + " pairwise=" + describe_values(mv.pairwise);
}

std::vector<double> evenly_spaced(double lo, double hi, std::size_t points) {
  if (points == 0) return {};
  if (points == 1 || hi == lo) return {lo};
  std::vector<double> out(points);
  for (std::size_t k = 0; k < points; ++k)
    out[k] = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(points - 1);
  out.back() = hi;
  return out;
}

void check_monogamy_vector(const MeasureVector& mv, double r, std::optional<double> a,
                           const std::vector<double>& alpha_grid, VerificationReport& report,
                           std::size_t family, const std::string& label) {
  BoundSpec spec;
  spec.mode = BoundMode::Monogamy;
  spec.base_exp = r;
  spec.a = a.value_or(std::max(1.0, max_admissible_a(mv.pairwise, r)));
  if (!ratio_condition(mv.pairwise, *spec.a, r)) {
    report.skip(family);
    return;
  }
  for (double alpha : alpha_grid) {
    spec.target_exp = alpha;
    const BoundReport br = monogamy_bound(mv, spec);
    report.record(family, br.margin, [&] {
      return label + " alpha=" + format_number(alpha) + " r=" + format_number(r) + " a=" + format_number(br.a_used) +
             " " + describe_vector(mv) + " bound=" + format_number(br.bound_value);
    });
  }
}

void check_polygamy_vector(const MeasureVector& mv, double s, std::optional<double> a,
                           const std::vector<double>& beta_grid, VerificationReport& report,
                           std::size_t family, const std::string& label) {
  BoundSpec spec;
  spec.mode = BoundMode::Polygamy;
  spec.base_exp = s;
  spec.a = a.value_or(std::max(1.0, max_admissible_a(mv.pairwise, s)));
  if (!ratio_condition(mv.pairwise, *spec.a, s)) {
    report.skip(family);
    return;
  }
  for (double beta : beta_grid) {
    spec.target_exp = beta;
    const BoundReport br = polygamy_bound(mv, spec);
    report.record(family, br.margin, [&] {
      return label + " beta=" + format_number(beta) + " s=" + format_number(s) + " a=" + format_number(br.a_used) +
             " " + describe_vector(mv) + " bound=" + format_number(br.bound_value);
    });
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// VerificationReport

std::size_t VerificationReport::add_family(std::string name, double tolerance, bool relative) {
  FamilyReport family;
  family.name = std::move(name);
  family.tolerance = tolerance;
  family.relative = relative;
  families.push_back(std::move(family));
  return families.size() - 1;
}

void VerificationReport::record(std::size_t family, double margin, const std::function<std::string()>& describe) {
  FamilyReport& f = families.at(family);
  ++f.total;
  ++total;
  // NaN margins count as failures.
  const bool failed = !(margin >= -f.tolerance);
  f.worst_margin = std::isnan(margin) ? margin : std::min(f.worst_margin, margin);
  worst_margin = std::isnan(margin) ? margin : std::min(worst_margin, margin);
  if (failed) {
    ++f.failures;
    ++failures;
    if (failure_samples.size() < kMaxFailureSamples)
      failure_samples.push_back({f.name + ": " + (describe ? describe() : std::string()), margin});
  }
}

void VerificationReport::skip(std::size_t family, std::uint64_t count) {
  families.at(family).skipped += count;
  skipped += count;
}

void VerificationReport::merge(const VerificationReport& other) {
  total += other.total;
  failures += other.failures;
  skipped += other.skipped;
  worst_margin = std::min(worst_margin, other.worst_margin);
  for (const FailureSample& s : other.failure_samples) {
    if (failure_samples.size() >= kMaxFailureSamples) break;
    failure_samples.push_back(s);
  }
  families.insert(families.end(), other.families.begin(), other.families.end());
}

// ---------------------------------------------------------------------------
// Scalar checks

std::vector<ScalarCheck> default_scalar_checks() {
  auto exact = [](const ScalarSample& s) { return std::pow(1.0 + s.t, s.x); };
  auto scale = [exact](const ScalarSample& s) { return std::max(1.0, exact(s)); };
  const VariantSpec ours{Variant::Ours, 0.0};
  const VariantSpec jfq{Variant::Jfq, 0.0};
  const VariantSpec zjz2{Variant::Zjz2, 0.5};

  std::vector<ScalarCheck> checks;
  checks.push_back({"lower_bound", 0.0, 1.0, true, 0.5, 1.0, false, [=](const ScalarSample& s) {
                      return exact(s) - scalar_lower_bound(s.t, s.x, s.a, ours);
                    }});
  checks.push_back({"upper_bound", 1.0, 8.0, false, 0.5, 1.0, true, [=](const ScalarSample& s) {
                      return (scalar_upper_bound(s.t, s.x, s.a, ours) - exact(s)) / scale(s);
                    }});
  checks.push_back({"lower_dominates_jfq", 0.0, 1.0, true, 0.5, 1.0, false, [=](const ScalarSample& s) {
                      return scalar_lower_bound(s.t, s.x, s.a, ours) - scalar_lower_bound(s.t, s.x, s.a, jfq);
                    }});
  // ours >= zjz1(p) >= jfq
  checks.push_back({"lower_dominates_zjz1", 0.0, 0.5, true, 0.5, 1.0, false, [=](const ScalarSample& s) {
                      const double z = scalar_lower_bound(s.t, s.x, s.a, {Variant::Zjz1, s.param});
                      return std::min(scalar_lower_bound(s.t, s.x, s.a, ours) - z,
                                      z - scalar_lower_bound(s.t, s.x, s.a, jfq));
                    }});
  checks.push_back({"lower_dominates_zjz2", 0.0, 0.5, true, 0.5, 1.0, false, [=](const ScalarSample& s) {
                      return scalar_lower_bound(s.t, s.x, s.a, ours) - scalar_lower_bound(s.t, s.x, s.a, zjz2);
                    }});
  checks.push_back({"upper_dominates_jfq", 1.0, 8.0, false, 0.5, 1.0, true, [=](const ScalarSample& s) {
                      return (scalar_upper_bound(s.t, s.x, s.a, jfq) - scalar_upper_bound(s.t, s.x, s.a, ours)) /
                             scale(s);
                    }});
  // ours <= jfq <= zjz1(q): an offset f below 1 loosens the upper bound.
  checks.push_back({"upper_dominates_zjz1", 1.0, 8.0, false, 0.0, 1.0, true, [=](const ScalarSample& s) {
                      const double z = scalar_upper_bound(s.t, s.x, s.a, {Variant::Zjz1, s.param});
                      return std::min(z - scalar_upper_bound(s.t, s.x, s.a, ours),
                                      z - scalar_upper_bound(s.t, s.x, s.a, jfq)) /
                             scale(s);
                    }});
  checks.push_back({"upper_dominates_zjz2", 1.0, 8.0, false, 0.5, 1.0, true, [=](const ScalarSample& s) {
                      return (scalar_upper_bound(s.t, s.x, s.a, zjz2) - scalar_upper_bound(s.t, s.x, s.a, ours)) /
                             scale(s);
                    }});
  return checks;
}

VerificationReport run_scalar_checks(const std::vector<ScalarCheck>& checks, std::uint64_t n, std::uint64_t seed,
                                     ScalarTolerance tol) {
  VerificationReport report;
  Rng rng(seed);
  for (const ScalarCheck& check : checks) {
    const std::size_t family =
        report.add_family(check.name, check.relative ? tol.relative : tol.absolute, check.relative);
    for (std::uint64_t i = 0; i < n; ++i) {
      ScalarSample s;
      s.a = rng.uniform(1.0, 10.0);
      s.t = rng.uniform(s.a, 100.0);
      // uniform() is in [0, 1): mirror it for a half-open (lo, hi] range.
      const double u = rng.uniform();
      s.x = check.x_lo_open ? check.x_hi - u * (check.x_hi - check.x_lo) : check.x_lo + u * (check.x_hi - check.x_lo);
      // Parameter ranges are (lo, hi] when lo is 0, otherwise [lo, hi].
      const double v = rng.uniform();
      s.param = check.param_lo == 0.0 ? check.param_hi - v * (check.param_hi - check.param_lo)
                                      : check.param_lo + v * (check.param_hi - check.param_lo);
      report.record(family, check.margin(s), [&] {
        return "t=" + format_number(s.t) + " x=" + format_number(s.x) + " a=" + format_number(s.a) +
               " param=" + format_number(s.param);
      });
    }
  }
  return report;
}

VerificationReport verify_scalar(std::uint64_t n, std::uint64_t seed, ScalarTolerance tol) {
  return run_scalar_checks(default_scalar_checks(), n, seed, tol);
}

// ---------------------------------------------------------------------------
// State-level checks

VerificationReport verify_monogamy_states(const MonogamyOptions& options, std::uint64_t seed) {
  VerificationReport report;
  const std::size_t f3 = report.add_family("monogamy_three_qubit", options.tolerance);
  const std::size_t f4 = report.add_family("monogamy_four_qubit", options.tolerance);
  Rng rng(seed);
  for (std::uint64_t i = 0; i < options.three_qubit_samples; ++i) {
    const MeasureVector mv = measure_vector(haar_random_pure({2, 2, 2}, rng), MeasureKind::Concurrence);
    check_monogamy_vector(mv, options.r, std::nullopt, options.alpha_grid, report, f3, "sample=" + std::to_string(i));
  }
  for (std::uint64_t i = 0; i < options.four_qubit_samples; ++i) {
    const MeasureVector mv = measure_vector(haar_random_pure({2, 2, 2, 2}, rng), MeasureKind::Concurrence);
    check_monogamy_vector(mv, options.r, std::nullopt, options.alpha_grid, report, f4, "sample=" + std::to_string(i));
  }
  return report;
}

VerificationReport verify_monogamy_fixture(const MeasureVector& mv, double r, std::optional<double> a,
                                           const std::vector<double>& alpha_grid, double tolerance) {
  VerificationReport report;
  const std::size_t family = report.add_family("monogamy_fixture", tolerance);
  check_monogamy_vector(mv, r, a, alpha_grid, report, family, "fixture");
  return report;
}

PureState random_w_class_state(Rng& rng) {
  double a = 0.0, b = 0.0, c = 0.0, n2 = 0.0;
  do {
    a = std::abs(rng.normal());
    b = std::abs(rng.normal());
    c = std::abs(rng.normal());
    n2 = a * a + b * b + c * c;
  } while (n2 == 0.0);
  const double scale = 1.0 / std::sqrt(n2);
  return w_class_state(a * scale, b * scale, c * scale);
}

VerificationReport verify_polygamy_states(const PolygamyOptions& options, std::uint64_t seed) {
  if (options.s && !(*options.s > 0.0 && *options.s <= 1.0))
    throw Error(ErrorCode::Domain, "polygamy verification needs 0 < s <= 1");
  VerificationReport report;
  const std::size_t family = report.add_family("polygamy_w_class", options.tolerance);
  Rng rng(seed);
  for (std::uint64_t i = 0; i < options.samples; ++i) {
    const MeasureVector mv = measure_vector(random_w_class_state(rng), MeasureKind::Screnoa);
    double s = 1.0;
    if (options.s) {
      s = *options.s;
    } else {
      const double ratio = max_admissible_a(mv.pairwise, 1.0);  // smallest consecutive ratio
      s = std::min(1.0, std::log2(ratio));
      if (!(s >= kMinSampledPolygamyExponent)) {
        report.skip(family);
        continue;
      }
    }
    const std::vector<double> grid = options.beta_grid.empty()
                                         ? evenly_spaced(s, std::max(s, options.beta_max), options.beta_points)
                                         : options.beta_grid;
    check_polygamy_vector(mv, s, options.a, grid, report, family, "sample=" + std::to_string(i));
  }
  return report;
}

VerificationReport verify_polygamy_fixture(const MeasureVector& mv, double s, std::optional<double> a,
                                           const std::vector<double>& beta_grid, double tolerance) {
  VerificationReport report;
  const std::size_t family = report.add_family("polygamy_fixture", tolerance);
  check_polygamy_vector(mv, s, a, beta_grid, report, family, "fixture");
  return report;
}

VerificationReport verify_base_relations(std::uint64_t n, std::uint64_t seed, double tolerance) {
  VerificationReport report;
  const std::size_t ckw = report.add_family("ckw_squared_concurrence", tolerance);
  const std::size_t poly = report.add_family("screnoa_polygamy_s1", tolerance);
  Rng rng(seed);
  for (std::uint64_t i = 0; i < n; ++i) {
    const MeasureVector mv = measure_vector(haar_random_pure({2, 2, 2}, rng), MeasureKind::Concurrence);
    double margin = mv.one_vs_rest * mv.one_vs_rest;
    for (double c : mv.pairwise) margin -= c * c;
    report.record(ckw, margin, [&] { return "sample=" + std::to_string(i) + " " + describe_vector(mv); });
  }
  for (std::uint64_t i = 0; i < n; ++i) {
    const MeasureVector mv = measure_vector(random_w_class_state(rng), MeasureKind::Screnoa);
    double margin = -mv.one_vs_rest;
    for (double v : mv.pairwise) margin += v;
    report.record(poly, margin, [&] { return "sample=" + std::to_string(i) + " " + describe_vector(mv); });
  }
  return report;
}

// ---------------------------------------------------------------------------
// Sweeps

std::size_t Axis::count() const { return count_from(lo); }

std::size_t Axis::count_from(double start) const {
  if (!(step > 0.0) || !std::isfinite(step) || !std::isfinite(start) || !std::isfinite(hi)) return 0;
  const double span = hi - start;
  if (span < -1e-9 * step) return 0;
  return static_cast<std::size_t>(std::floor(std::max(0.0, span) / step + 1e-9)) + 1;
}

void SweepGrid::validate() const {
  for (const Axis* axis : {&axis1, &axis2}) {
    if (!(axis->step > 0.0) || !std::isfinite(axis->step))
      throw Error(ErrorCode::InvalidArgument, "axis '" + axis->name + "' needs a positive step");
    if (!std::isfinite(axis->lo) || !std::isfinite(axis->hi) || axis->hi < axis->lo)
      throw Error(ErrorCode::InvalidArgument, "axis '" + axis->name + "' has an empty range");
  }
  std::size_t cells = 0;
  if (axis1_starts_at_axis2) {
    for (std::size_t j = 0; j < axis2.count(); ++j) cells += axis1.count_from(axis2.at(axis2.lo, j));
  } else {
    cells = axis1.count() * axis2.count();
  }
  if (cells == 0) throw Error(ErrorCode::InvalidArgument, "grid has no cells");
  if (cells > kMaxGridCells) throw Error(ErrorCode::InvalidArgument, "grid exceeds 10^6 cells");
}

std::string_view to_string(Example example) {
  return example == Example::Example1 ? "example1" : "example2";
}

std::optional<Example> parse_example(std::string_view name) {
  if (name == "example1") return Example::Example1;
  if (name == "example2") return Example::Example2;
  return std::nullopt;
}

SweepGrid default_grid(Example example) {
  if (example == Example::Example1) return {{"alpha", 0.0, 1.0, 0.02}, {"r", 2.0, 5.0, 0.05}, false};
  return {{"beta", 0.6, 3.0, 0.05}, {"s", 0.6, 1.0, 0.01}, true};
}

DominanceTable dominance_scan(Example example, const SweepGrid& grid) {
  grid.validate();
  DominanceTable table;
  table.example = example;

  if (example == Example::Example1) {
    const double l = std::sqrt(6.0) / 6.0;
    const MeasureVector mv = measure_vector(schmidt3_state({0.5, l, l, 0.5, l}), MeasureKind::Concurrence);
    BoundSpec spec;
    spec.mode = BoundMode::Monogamy;
    spec.a = std::sqrt(6.0) / 2.0;
    for (std::size_t i = 0; i < grid.axis1.count(); ++i) {
      const double alpha = grid.axis1.at(grid.axis1.lo, i);
      for (std::size_t j = 0; j < grid.axis2.count(); ++j) {
        const double r = grid.axis2.at(grid.axis2.lo, j);
        spec.base_exp = r;
        spec.target_exp = alpha;
        DominanceRow row;
        row.axis1 = alpha;
        row.axis2 = r;
        spec.variant = {Variant::Ours, 0.0};
        row.ours = monogamy_bound(mv, spec).bound_value;
        spec.variant = {Variant::Jfq, 0.0};
        row.jfq = monogamy_bound(mv, spec).bound_value;
        row.advantage_jfq = row.ours - row.jfq;
        if (alpha / r <= 0.5) {
          spec.variant = {Variant::Zjz2, 0.5};
          row.zjz = monogamy_bound(mv, spec).bound_value;
          row.advantage_zjz = row.ours - *row.zjz;
        }
        row.asserted = alpha > 0.0;
        table.rows.push_back(row);
      }
    }
    return table;
  }

  const MeasureVector mv = measure_vector(w_class_state(), MeasureKind::Screnoa);
  BoundSpec spec;
  spec.mode = BoundMode::Polygamy;
  spec.a = std::pow(2.0, 0.6);
  for (std::size_t j = 0; j < grid.axis2.count(); ++j) {
    const double s = grid.axis2.at(grid.axis2.lo, j);
    const double start = grid.axis1_starts_at_axis2 ? s : grid.axis1.lo;
    for (std::size_t i = 0; i < grid.axis1.count_from(start); ++i) {
      const double beta = grid.axis1.at(start, i);
      spec.base_exp = s;
      spec.target_exp = beta;
      DominanceRow row;
      row.axis1 = beta;
      row.axis2 = s;
      spec.variant = {Variant::Ours, 0.0};
      row.ours = polygamy_bound(mv, spec).bound_value;
      spec.variant = {Variant::Jfq, 0.0};
      row.jfq = polygamy_bound(mv, spec).bound_value;
      spec.variant = {Variant::Zjz2, 0.5};
      row.zjz = polygamy_bound(mv, spec).bound_value;
      row.advantage_jfq = row.jfq - row.ours;
      row.advantage_zjz = *row.zjz - row.ours;
      table.rows.push_back(row);
    }
  }
  return table;
}

VerificationReport check_dominance(const DominanceTable& table, double tolerance) {
  VerificationReport report;
  const std::string prefix(to_string(table.example));
  const std::size_t fj = report.add_family(prefix + "_over_jfq", tolerance);
  const std::size_t fz = report.add_family(prefix + "_over_zjz", tolerance);
  for (const DominanceRow& row : table.rows) {
    auto describe = [&] { return "axis1=" + format_number(row.axis1) + " axis2=" + format_number(row.axis2); };
    if (!row.asserted) {
      report.skip(fj);
      if (row.advantage_zjz) report.skip(fz);
      continue;
    }
    report.record(fj, row.advantage_jfq, describe);
    if (row.advantage_zjz) report.record(fz, *row.advantage_zjz, describe);
  }
  return report;
}

VerificationReport verify_dominance(double tolerance) {
  VerificationReport report;
  for (Example e : {Example::Example1, Example::Example2})
    report.merge(check_dominance(dominance_scan(e, default_grid(e)), tolerance));
  return report;
}

std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

void write_dominance_csv(const DominanceTable& table, std::ostream& out) {
  if (table.example == Example::Example1) {
    out << "alpha,r,Z1,Z2,Z3\n";
    for (const DominanceRow& row : table.rows) {
      out << format_number(row.axis1) << ',' << format_number(row.axis2) << ',' << format_number(row.jfq) << ','
          << (row.zjz ? format_number(*row.zjz) : std::string()) << ',' << format_number(row.ours) << '\n';
    }
    return;
  }
  out << "beta,s,W1,W2,W3,W1_minus_W3,W2_minus_W3\n";
  for (const DominanceRow& row : table.rows) {
    out << format_number(row.axis1) << ',' << format_number(row.axis2) << ',' << format_number(row.jfq) << ','
        << format_number(*row.zjz) << ',' << format_number(row.ours) << ',' << format_number(row.advantage_jfq)
        << ',' << format_number(*row.advantage_zjz) << '\n';
  }
}

}  // namespace entbound

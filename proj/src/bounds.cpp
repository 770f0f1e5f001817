#include "entbound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "entbound/error.hpp"

namespace entbound {

namespace {

[[noreturn]] void domain_fail(const std::string& what) { throw Error(ErrorCode::Domain, what); }

double power(double base, double exponent) {
  if (base > kLogSpaceThreshold && std::isfinite(base)) return std::exp(exponent * std::log(base));
  return std::pow(base, exponent);
}

void check_scalar_args(double t, double a) {
  if (!std::isfinite(t) || !std::isfinite(a)) domain_fail("t and a must be finite");
  if (a < 1.0) domain_fail("a must be >= 1");
  if (t < a) domain_fail("t must be >= a");
}

void check_values(std::span<const double> values) {
  for (double v : values)
    if (!(v >= 0.0) || !std::isfinite(v)) throw Error(ErrorCode::InvalidArgument, "values must be finite and nonnegative");
}

// f(x) for the prior families.
double prior_offset(VariantSpec variant, double x) {
  switch (variant.kind) {
    case Variant::Jfq: return 1.0;
    case Variant::Zjz1: return std::pow(variant.param, x);
    case Variant::Zjz2: return std::pow(0.5, x);
    case Variant::Ours: break;
  }
  return 0.0;
}

// ((1+a)^x - f) / a^x written so that a = +inf stays finite.
double affine_slope(double x, double a, double f) {
  return power(1.0 + 1.0 / a, x) - f * power(a, -x);
}

double affine_bound_at(double t, double x, double a, double f) {
  return f + (power(1.0 + a, x) - f) * power(t / a, x);
}

double ours_at(double t, double x, double a) {
  return power(1.0 + a, x - 1.0) + power(1.0 + 1.0 / a, x - 1.0) * power(t, x);
}

bool known_monogamy(MeasureKind kind, double r) {
  return r >= 2.0 && (kind == MeasureKind::Concurrence || kind == MeasureKind::NegativityScren);
}

bool known_polygamy(MeasureKind kind, double s) {
  return s > 0.0 && s <= 1.0 && (kind == MeasureKind::Screnoa || kind == MeasureKind::ConcurrenceAssistance);
}

struct Prepared {
  std::vector<double> sorted;
  double max_a = 0.0;
  double a = 1.0;
  bool ok = false;
};

Prepared prepare(const MeasureVector& mv, const BoundSpec& spec, double base_exp, ConditionPolicy policy) {
  if (mv.pairwise.empty()) throw Error(ErrorCode::InvalidArgument, "measure vector has no pairwise values");
  check_values(mv.pairwise);
  if (!(mv.one_vs_rest >= 0.0) || !std::isfinite(mv.one_vs_rest))
    throw Error(ErrorCode::InvalidArgument, "one-vs-rest value must be finite and nonnegative");

  Prepared p;
  p.sorted = sorted_descending(mv.pairwise);
  p.max_a = max_admissible_a(p.sorted, base_exp);
  p.a = spec.a.value_or(std::max(1.0, p.max_a));
  if (!(p.a >= 1.0)) domain_fail("a must be >= 1");
  p.ok = ratio_condition(p.sorted, p.a, base_exp);
  if (!p.ok && policy == ConditionPolicy::Enforce)
    domain_fail("ratio condition fails: a = " + std::to_string(p.a) + " exceeds the admissible maximum " +
                std::to_string(p.max_a));
  return p;
}

double prior_pair_bound(const Prepared& p, const BoundSpec& spec, double x) {
  if (p.sorted.size() != 2) domain_fail("prior bound variants are defined for tripartite states only");
  return affine_pair_bound(p.sorted[1], p.sorted[0], spec.target_exp, x, p.a, prior_offset(spec.variant, x));
}

std::vector<double> powered(const std::vector<double>& values, double e) {
  std::vector<double> out;
  out.reserve(values.size());
  for (double v : values) out.push_back(std::pow(v, e));
  return out;
}

}  // namespace

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::Ours: return "ours";
    case Variant::Jfq: return "jfq";
    case Variant::Zjz1: return "zjz1";
    case Variant::Zjz2: return "zjz2";
  }
  return "unknown";
}

std::optional<Variant> parse_variant(std::string_view name) {
  if (name == "ours") return Variant::Ours;
  if (name == "jfq") return Variant::Jfq;
  if (name == "zjz1") return Variant::Zjz1;
  if (name == "zjz2") return Variant::Zjz2;
  return std::nullopt;
}

double scalar_lower_bound(double t, double x, double a, VariantSpec variant) {
  check_scalar_args(t, a);
  switch (variant.kind) {
    case Variant::Ours:
    case Variant::Jfq:
      if (!(x > 0.0 && x <= 1.0)) domain_fail("lower bound needs 0 < x <= 1");
      break;
    case Variant::Zjz1:
      if (!(variant.param >= 0.5 && variant.param <= 1.0)) domain_fail("zjz1 lower bound needs 1/2 <= p <= 1");
      [[fallthrough]];
    case Variant::Zjz2:
      if (!(x >= 0.0 && x <= 0.5)) domain_fail("zjz lower bounds need 0 <= x <= 1/2");
      break;
  }
  if (variant.kind == Variant::Ours) return ours_at(t, x, a);
  return affine_bound_at(t, x, a, prior_offset(variant, x));
}

double scalar_upper_bound(double t, double x, double a, VariantSpec variant) {
  check_scalar_args(t, a);
  if (!(x >= 1.0) || !std::isfinite(x)) domain_fail("upper bound needs x >= 1");
  if (variant.kind == Variant::Zjz1 && !(variant.param > 0.0 && variant.param <= 1.0))
    domain_fail("zjz1 upper bound needs 0 < q <= 1");
  if (variant.kind == Variant::Ours) return ours_at(t, x, a);
  return affine_bound_at(t, x, a, prior_offset(variant, x));
}

std::vector<double> sorted_descending(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return values[i] > values[j]; });
  std::vector<double> out;
  out.reserve(values.size());
  for (std::size_t i : order) out.push_back(values[i]);
  return out;
}

double ordered_weighted_sum(std::span<const double> values, double x, double a) {
  check_values(values);
  if (!std::is_sorted(values.begin(), values.end(), std::greater<>()))
    throw Error(ErrorCode::InvalidArgument, "values must be sorted in descending order");
  if (!(x >= 0.0) || !std::isfinite(x)) domain_fail("exponent ratio must be finite and >= 0");
  if (!(a >= 1.0)) domain_fail("a must be >= 1");

  const std::size_t m = values.size();
  if (m == 0) return 0.0;
  if (x == 1.0) return std::accumulate(values.begin(), values.end(), 0.0);

  const bool log_space = !(1.0 + a <= kLogSpaceThreshold) || values.front() > kLogSpaceThreshold;
  double sum = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double v = values[i];
    if (v == 0.0 && x > 0.0) continue;  // 0^x = 0
    // Position i (0-based) carries ((1+1/a)^(x-1))^(m-1-i), and every entry
    // except the largest also carries (1+a)^(x-1).
    const double steps = static_cast<double>(m - 1 - i);
    if (log_space) {
      double log_term = steps * (x - 1.0) * std::log1p(1.0 / a);
      if (i > 0) log_term += (x - 1.0) * std::log1p(a);
      if (v > 0.0) log_term += x * std::log(v);
      sum += std::exp(log_term);
    } else {
      double term = std::pow(1.0 + 1.0 / a, steps * (x - 1.0)) * std::pow(v, x);
      if (i > 0) term *= std::pow(1.0 + a, x - 1.0);
      sum += term;
    }
  }
  return sum;
}

bool ratio_condition(std::span<const double> values, double a, double exponent) {
  check_values(values);
  if (!(a >= 1.0)) domain_fail("a must be >= 1");
  if (!(exponent > 0.0)) domain_fail("exponent must be positive");
  const std::vector<double> sorted = sorted_descending(values);
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    if (sorted[i + 1] == 0.0) continue;
    const double lhs = std::pow(sorted[i], exponent);
    const double rhs = a * std::pow(sorted[i + 1], exponent);
    if (lhs < rhs * (1.0 - kRatioRelTolerance)) return false;
  }
  return true;
}

double max_admissible_a(std::span<const double> values, double exponent) {
  check_values(values);
  if (!(exponent > 0.0)) domain_fail("exponent must be positive");
  const std::vector<double> sorted = sorted_descending(values);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    if (sorted[i + 1] == 0.0) continue;
    best = std::min(best, std::pow(sorted[i] / sorted[i + 1], exponent));
  }
  return best;
}

double affine_pair_bound(double smaller, double larger, double target_exp, double x, double a, double f) {
  return f * std::pow(smaller, target_exp) + affine_slope(x, a, f) * std::pow(larger, target_exp);
}

BoundReport monogamy_bound(const MeasureVector& mv, const BoundSpec& spec, ConditionPolicy policy) {
  if (spec.mode != BoundMode::Monogamy) throw Error(ErrorCode::InvalidArgument, "spec is not in monogamy mode");
  const double r = spec.base_exp;
  const double alpha = spec.target_exp;
  if (!(r >= 2.0) || !std::isfinite(r)) domain_fail("monogamy needs r >= 2");
  if (!(alpha >= 0.0 && alpha <= r)) domain_fail("monogamy needs 0 <= alpha <= r");
  const double x = alpha / r;
  if (spec.variant.kind == Variant::Zjz1 || spec.variant.kind == Variant::Zjz2) {
    if (x > 0.5) domain_fail("zjz monogamy variants need alpha / r <= 1/2");
    if (spec.variant.kind == Variant::Zjz1 && !(spec.variant.param >= 0.5 && spec.variant.param <= 1.0))
      domain_fail("zjz1 monogamy needs 1/2 <= p <= 1");
  }

  const Prepared p = prepare(mv, spec, r, policy);
  BoundReport report;
  report.max_admissible_a = p.max_a;
  report.a_used = p.a;
  report.ratio_condition_ok = p.ok;
  report.base_relation_assumed = !known_monogamy(mv.kind, r);
  report.bound_value = spec.variant.kind == Variant::Ours ? ordered_weighted_sum(powered(p.sorted, r), x, p.a)
                                                          : prior_pair_bound(p, spec, x);
  report.measured_value = std::pow(mv.one_vs_rest, alpha);
  report.margin = *report.measured_value - report.bound_value;
  return report;
}

BoundReport polygamy_bound(const MeasureVector& mv, const BoundSpec& spec, ConditionPolicy policy) {
  if (spec.mode != BoundMode::Polygamy) throw Error(ErrorCode::InvalidArgument, "spec is not in polygamy mode");
  const double s = spec.base_exp;
  const double beta = spec.target_exp;
  if (!(s > 0.0 && s <= 1.0)) domain_fail("polygamy needs 0 < s <= 1");
  if (!(beta >= s) || !std::isfinite(beta)) domain_fail("polygamy needs beta >= s");
  if (spec.variant.kind == Variant::Zjz1 && !(spec.variant.param > 0.0 && spec.variant.param <= 1.0))
    domain_fail("zjz1 polygamy needs 0 < q <= 1");
  const double x = beta / s;

  const Prepared p = prepare(mv, spec, s, policy);
  BoundReport report;
  report.max_admissible_a = p.max_a;
  report.a_used = p.a;
  report.ratio_condition_ok = p.ok;
  report.base_relation_assumed = !known_polygamy(mv.kind, s);
  report.bound_value = spec.variant.kind == Variant::Ours ? ordered_weighted_sum(powered(p.sorted, s), x, p.a)
                                                          : prior_pair_bound(p, spec, x);
  report.measured_value = std::pow(mv.one_vs_rest, beta);
  report.margin = report.bound_value - *report.measured_value;
  return report;
}

BoundReport evaluate_bound(const MeasureVector& mv, const BoundSpec& spec, ConditionPolicy policy) {
  return spec.mode == BoundMode::Monogamy ? monogamy_bound(mv, spec, policy) : polygamy_bound(mv, spec, policy);
}

}  // namespace entbound

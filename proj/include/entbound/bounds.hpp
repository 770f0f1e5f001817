#pragma once

// Weighted monogamy and polygamy bounds for powers of a bipartite
// correlation measure Q.
//
// Given a base relation Q^r_{A1|rest} >= sum_i Q^r_{A1Ai} (monogamy, r >= 2)
// or Q^s_{A1|rest} <= sum_i Q^s_{A1Ai} (polygamy, 0 < s <= 1), and
// descending-sorted pairwise values satisfying the ratio condition
// Q^r_(i) >= a Q^r_(i+1), the target power obeys
//
//   Q^alpha_{A1|rest}  >=  W(x) ,   x = alpha / r in [0, 1]
//   Q^beta_{A1|rest}   <=  W(x) ,   x = beta / s >= 1
//
// with the ordered weighted sum over p_(i) = Q^r_(i) (resp. Q^s_(i)):
//
//   W = ((1+1/a)^(x-1))^(m-1) p_(1)^x
//       + (1+a)^(x-1) * sum_{i=2..m} ((1+1/a)^(x-1))^(m-i) p_(i)^x .
//
// For two pairwise values this is (1+a)^(x-1) Q_small^alpha
// + (1+1/a)^(x-1) Q_large^alpha.
//
// The three earlier bound families are of the affine form
// f + ((1+a)^x - f) (t/a)^x with f = 1 (Jfq), p^x (Zjz1) and (1/2)^x (Zjz2).

#include <limits>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "entbound/measures.hpp"

namespace entbound {

enum class Variant { Ours, Jfq, Zjz1, Zjz2 };

struct VariantSpec {
  Variant kind = Variant::Ours;
  /// p for Zjz1 lower bounds (1/2 <= p <= 1) or q for Zjz1 upper bounds
  /// (0 < q <= 1). Ignored by the other variants.
  double param = 0.5;
};

std::string_view to_string(Variant v);
std::optional<Variant> parse_variant(std::string_view name);

enum class BoundMode { Monogamy, Polygamy };

struct BoundSpec {
  BoundMode mode = BoundMode::Monogamy;
  /// Ratio parameter; when empty, max(1, max_admissible_a) is used.
  std::optional<double> a;
  double base_exp = 2.0;    // r (monogamy) or s (polygamy)
  double target_exp = 1.0;  // alpha or beta
  VariantSpec variant;
};

struct BoundReport {
  double bound_value = 0.0;
  std::optional<double> measured_value;
  /// measured - bound (monogamy) or bound - measured (polygamy).
  double margin = 0.0;
  bool ratio_condition_ok = false;
  double max_admissible_a = std::numeric_limits<double>::infinity();
  double a_used = 1.0;
  /// True when no proven base relation is known for this measure and mode.
  bool base_relation_assumed = true;
};

/// What to do when the ratio condition fails at the chosen a.
enum class ConditionPolicy { Enforce, Report };

/// Relative slack in the ratio condition so that a = max_admissible_a is
/// always accepted despite rounding.
inline constexpr double kRatioRelTolerance = 1e-12;
/// Above this magnitude, powers are evaluated in log space.
inline constexpr double kLogSpaceThreshold = 1e8;

/// Lower bound on (1+t)^x for t >= a >= 1; 0 < x <= 1 (Ours, Jfq) or
/// 0 <= x <= 1/2 (Zjz1, Zjz2).
double scalar_lower_bound(double t, double x, double a, VariantSpec variant = {});

/// Upper bound on (1+t)^x for t >= a >= 1, x >= 1.
double scalar_upper_bound(double t, double x, double a, VariantSpec variant = {});

/// W above. `values` must be nonnegative and sorted descending.
double ordered_weighted_sum(std::span<const double> values, double x, double a);

/// v_(i)^e >= a v_(i+1)^e for consecutive descending-sorted values; a zero
/// successor passes.
bool ratio_condition(std::span<const double> values, double a, double exponent);

/// Largest a passing ratio_condition; +infinity when every trailing value is 0.
double max_admissible_a(std::span<const double> values, double exponent);

/// Descending copy, ties kept in original index order.
std::vector<double> sorted_descending(std::span<const double> values);

/// Lower bound on mv.one_vs_rest^alpha. Prior variants need exactly two
/// pairwise values. Throws Domain for parameter violations and, under
/// ConditionPolicy::Enforce, when the ratio condition fails.
BoundReport monogamy_bound(const MeasureVector& mv, const BoundSpec& spec,
                           ConditionPolicy policy = ConditionPolicy::Enforce);

/// Upper bound on mv.one_vs_rest^beta; same conventions.
BoundReport polygamy_bound(const MeasureVector& mv, const BoundSpec& spec,
                           ConditionPolicy policy = ConditionPolicy::Enforce);

/// Dispatches on spec.mode.
BoundReport evaluate_bound(const MeasureVector& mv, const BoundSpec& spec,
                           ConditionPolicy policy = ConditionPolicy::Enforce);

/// Two-value affine bound f * smaller^target + ((1+a)^x - f)/a^x * larger^target,
/// the form taken by the Jfq/Zjz1/Zjz2 families.
double affine_pair_bound(double smaller, double larger, double target_exp, double x, double a, double f);

}  // namespace entbound

#include "entbound/entbound.h"

#include <cmath>
#include <cstring>
#include <fstream>
#include <iostream>
#include <limits>
#include <new>
#include <sstream>
#include <string>
#include <string_view>

#include "entbound/bounds.hpp"
#include "entbound/error.hpp"
#include "entbound/measures.hpp"
#include "entbound/state_spec.hpp"
#include "entbound/states.hpp"
#include "entbound/verify.hpp"

struct eb_state {
  entbound::PureState psi;
};

struct eb_report {
  entbound::VerificationReport report;
};

namespace {

thread_local std::string g_last_error;

eb_status fail(eb_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

eb_status status_of(entbound::ErrorCode code) {
  switch (code) {
    case entbound::ErrorCode::InvalidArgument: return EB_ERR_INVALID_ARGUMENT;
    case entbound::ErrorCode::Parse: return EB_ERR_PARSE;
    case entbound::ErrorCode::Domain: return EB_ERR_DOMAIN;
    case entbound::ErrorCode::Io: return EB_ERR_IO;
    case entbound::ErrorCode::Numeric: return EB_ERR_NUMERIC;
  }
  return EB_ERR_INTERNAL;
}

// Runs body and converts exceptions into status codes.
template <class F>
eb_status guarded(F&& body) {
  try {
    g_last_error.clear();
    body();
    return EB_OK;
  } catch (const entbound::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(EB_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(EB_ERR_INTERNAL, e.what());
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw entbound::Error(entbound::ErrorCode::InvalidArgument, what);
}

entbound::MeasureKind to_kind(eb_measure_kind kind) {
  switch (kind) {
    case EB_MEASURE_CONCURRENCE: return entbound::MeasureKind::Concurrence;
    case EB_MEASURE_SCREN: return entbound::MeasureKind::NegativityScren;
    case EB_MEASURE_SCRENOA: return entbound::MeasureKind::Screnoa;
    case EB_MEASURE_COA: return entbound::MeasureKind::ConcurrenceAssistance;
  }
  throw entbound::Error(entbound::ErrorCode::InvalidArgument, "unknown measure kind");
}

eb_measure_kind from_kind(entbound::MeasureKind kind) {
  switch (kind) {
    case entbound::MeasureKind::Concurrence: return EB_MEASURE_CONCURRENCE;
    case entbound::MeasureKind::NegativityScren: return EB_MEASURE_SCREN;
    case entbound::MeasureKind::Screnoa: return EB_MEASURE_SCRENOA;
    case entbound::MeasureKind::ConcurrenceAssistance: return EB_MEASURE_COA;
  }
  return EB_MEASURE_CONCURRENCE;
}

entbound::VariantSpec to_variant(eb_variant variant, double param) {
  switch (variant) {
    case EB_VARIANT_OURS: return {entbound::Variant::Ours, param};
    case EB_VARIANT_JFQ: return {entbound::Variant::Jfq, param};
    case EB_VARIANT_ZJZ1: return {entbound::Variant::Zjz1, param};
    case EB_VARIANT_ZJZ2: return {entbound::Variant::Zjz2, param};
  }
  throw entbound::Error(entbound::ErrorCode::InvalidArgument, "unknown variant");
}

entbound::Example to_example(eb_example example) {
  switch (example) {
    case EB_EXAMPLE1: return entbound::Example::Example1;
    case EB_EXAMPLE2: return entbound::Example::Example2;
  }
  throw entbound::Error(entbound::ErrorCode::InvalidArgument, "unknown example");
}

entbound::MeasureVector to_vector(const eb_measure_vector& mv) {
  require(mv.num_pairwise <= EB_MAX_PAIRWISE, "too many pairwise values");
  entbound::MeasureVector out;
  out.kind = to_kind(mv.kind);
  out.one_vs_rest = mv.one_vs_rest;
  out.pairwise.assign(mv.pairwise, mv.pairwise + mv.num_pairwise);
  return out;
}

eb_state* wrap(entbound::PureState psi) { return new eb_state{std::move(psi)}; }

}  // namespace

extern "C" {

const char* eb_last_error(void) { return g_last_error.c_str(); }

const char* eb_version(void) { return "0.1.0"; }

eb_status eb_state_parse(const char* spec, eb_state** out) {
  return guarded([&] {
    require(spec && out, "null argument");
    *out = wrap(entbound::parse_state_spec(spec));
  });
}

eb_status eb_state_schmidt3(const double lambdas[5], double phi, eb_state** out) {
  return guarded([&] {
    require(lambdas && out, "null argument");
    *out = wrap(entbound::schmidt3_state({lambdas[0], lambdas[1], lambdas[2], lambdas[3], lambdas[4]}, phi));
  });
}

eb_status eb_state_wclass(double a, double b, double c, eb_state** out) {
  return guarded([&] {
    require(out, "null argument");
    *out = wrap(entbound::w_class_state(a, b, c));
  });
}

eb_status eb_state_haar(const size_t* dims, size_t num_dims, uint64_t seed, eb_state** out) {
  return guarded([&] {
    require(dims && out && num_dims > 0, "null argument");
    *out = wrap(entbound::haar_random_pure(entbound::Dims(dims, dims + num_dims), seed));
  });
}

void eb_state_free(eb_state* state) { delete state; }

size_t eb_state_num_subsystems(const eb_state* state) { return state ? state->psi.num_subsystems() : 0; }

size_t eb_state_dimension(const eb_state* state) { return state ? state->psi.dimension() : 0; }

eb_status eb_state_amplitudes(const eb_state* state, double* re, double* im, size_t capacity) {
  return guarded([&] {
    require(state && re && im, "null argument");
    auto amps = state->psi.amplitudes();
    for (size_t i = 0; i < amps.size() && i < capacity; ++i) {
      re[i] = amps[i].real();
      im[i] = amps[i].imag();
    }
  });
}

eb_status eb_measure_kind_parse(const char* name, eb_measure_kind* out) {
  return guarded([&] {
    require(name && out, "null argument");
    auto kind = entbound::parse_measure_kind(name);
    if (!kind) throw entbound::Error(entbound::ErrorCode::Parse, std::string("unknown measure kind '") + name + "'");
    *out = from_kind(*kind);
  });
}

const char* eb_measure_kind_name(eb_measure_kind kind) {
  switch (kind) {
    case EB_MEASURE_CONCURRENCE: return "concurrence";
    case EB_MEASURE_SCREN: return "scren";
    case EB_MEASURE_SCRENOA: return "screnoa";
    case EB_MEASURE_COA: return "coa";
  }
  return "unknown";
}

eb_status eb_measure(const eb_state* state, eb_measure_kind kind, eb_measure_vector* out) {
  return guarded([&] {
    require(state && out, "null argument");
    const entbound::MeasureVector mv = entbound::measure_vector(state->psi, to_kind(kind));
    *out = eb_measure_vector{};
    out->kind = kind;
    out->one_vs_rest = mv.one_vs_rest;
    out->num_pairwise = mv.pairwise.size();
    for (size_t i = 0; i < mv.pairwise.size(); ++i) out->pairwise[i] = mv.pairwise[i];
  });
}

eb_status eb_variant_parse(const char* name, eb_variant* out) {
  return guarded([&] {
    require(name && out, "null argument");
    auto v = entbound::parse_variant(name);
    if (!v) throw entbound::Error(entbound::ErrorCode::Parse, std::string("unknown variant '") + name + "'");
    switch (*v) {
      case entbound::Variant::Ours: *out = EB_VARIANT_OURS; break;
      case entbound::Variant::Jfq: *out = EB_VARIANT_JFQ; break;
      case entbound::Variant::Zjz1: *out = EB_VARIANT_ZJZ1; break;
      case entbound::Variant::Zjz2: *out = EB_VARIANT_ZJZ2; break;
    }
  });
}

const char* eb_variant_name(eb_variant variant) {
  switch (variant) {
    case EB_VARIANT_OURS: return "ours";
    case EB_VARIANT_JFQ: return "jfq";
    case EB_VARIANT_ZJZ1: return "zjz1";
    case EB_VARIANT_ZJZ2: return "zjz2";
  }
  return "unknown";
}

void eb_bound_spec_init(eb_bound_spec* spec) {
  if (!spec) return;
  *spec = eb_bound_spec{};
  spec->mode = EB_MONOGAMY;
  spec->has_a = 0;
  spec->a = 1.0;
  spec->base_exp = 2.0;
  spec->target_exp = 1.0;
  spec->variant = EB_VARIANT_OURS;
  spec->variant_param = 0.5;
  spec->allow_unmet = 0;
}

eb_status eb_bound_evaluate(const eb_measure_vector* mv, const eb_bound_spec* spec, eb_bound_report* out) {
  return guarded([&] {
    require(mv && spec && out, "null argument");
    entbound::BoundSpec bs;
    bs.mode = spec->mode == EB_POLYGAMY ? entbound::BoundMode::Polygamy : entbound::BoundMode::Monogamy;
    if (spec->has_a) bs.a = spec->a;
    bs.base_exp = spec->base_exp;
    bs.target_exp = spec->target_exp;
    bs.variant = to_variant(spec->variant, spec->variant_param);
    const auto policy = spec->allow_unmet ? entbound::ConditionPolicy::Report : entbound::ConditionPolicy::Enforce;
    const entbound::BoundReport r = entbound::evaluate_bound(to_vector(*mv), bs, policy);
    out->bound_value = r.bound_value;
    out->has_measured = r.measured_value.has_value();
    out->measured_value = r.measured_value.value_or(std::numeric_limits<double>::quiet_NaN());
    out->margin = r.margin;
    out->ratio_condition_ok = r.ratio_condition_ok;
    out->max_admissible_a = r.max_admissible_a;
    out->a_used = r.a_used;
    out->base_relation_assumed = r.base_relation_assumed;
  });
}

eb_status eb_scalar_lower_bound(double t, double x, double a, eb_variant variant, double param, double* out) {
  return guarded([&] {
    require(out, "null argument");
    *out = entbound::scalar_lower_bound(t, x, a, to_variant(variant, param));
  });
}

eb_status eb_scalar_upper_bound(double t, double x, double a, eb_variant variant, double param, double* out) {
  return guarded([&] {
    require(out, "null argument");
    *out = entbound::scalar_upper_bound(t, x, a, to_variant(variant, param));
  });
}

eb_status eb_ordered_weighted_sum(const double* values, size_t n, double x, double a, double* out) {
  return guarded([&] {
    require(out && (values || n == 0), "null argument");
    *out = entbound::ordered_weighted_sum(std::span<const double>(values, n), x, a);
  });
}

eb_status eb_max_admissible_a(const double* values, size_t n, double exponent, double* out) {
  return guarded([&] {
    require(out && (values || n == 0), "null argument");
    *out = entbound::max_admissible_a(std::span<const double>(values, n), exponent);
  });
}

eb_status eb_example_parse(const char* name, eb_example* out) {
  return guarded([&] {
    require(name && out, "null argument");
    auto e = entbound::parse_example(name);
    if (!e) throw entbound::Error(entbound::ErrorCode::Parse, std::string("unknown example '") + name + "'");
    *out = *e == entbound::Example::Example1 ? EB_EXAMPLE1 : EB_EXAMPLE2;
  });
}

eb_status eb_default_grid(eb_example example, eb_grid* out) {
  return guarded([&] {
    require(out, "null argument");
    const entbound::SweepGrid g = entbound::default_grid(to_example(example));
    out->axis1 = {g.axis1.lo, g.axis1.hi, g.axis1.step};
    out->axis2 = {g.axis2.lo, g.axis2.hi, g.axis2.step};
    out->axis1_starts_at_axis2 = g.axis1_starts_at_axis2;
  });
}

eb_status eb_repro_write_csv(eb_example example, const eb_grid* grid, const char* path, size_t* rows,
                             eb_report** check) {
  return guarded([&] {
    require(path, "null argument");
    const entbound::Example e = to_example(example);
    entbound::SweepGrid g = entbound::default_grid(e);
    if (grid) {
      g.axis1.lo = grid->axis1.lo;
      g.axis1.hi = grid->axis1.hi;
      g.axis1.step = grid->axis1.step;
      g.axis2.lo = grid->axis2.lo;
      g.axis2.hi = grid->axis2.hi;
      g.axis2.step = grid->axis2.step;
      g.axis1_starts_at_axis2 = grid->axis1_starts_at_axis2 != 0;
    }
    const entbound::DominanceTable table = entbound::dominance_scan(e, g);

    // Render first so a failed open never leaves a partial file behind.
    std::ostringstream csv;
    entbound::write_dominance_csv(table, csv);
    if (std::string_view(path) == "-") {
      std::cout << csv.str() << std::flush;
      if (!std::cout) throw entbound::Error(entbound::ErrorCode::Io, "cannot write to stdout");
    } else {
      std::ofstream file(path, std::ios::binary | std::ios::trunc);
      if (!file) throw entbound::Error(entbound::ErrorCode::Io, std::string("cannot open '") + path + "' for writing");
      file << csv.str();
      file.close();
      if (!file) throw entbound::Error(entbound::ErrorCode::Io, std::string("failed writing '") + path + "'");
    }
    if (rows) *rows = table.rows.size();
    if (check) *check = new eb_report{entbound::check_dominance(table)};
  });
}

eb_status eb_verify(const char* suite, uint64_t n, uint64_t seed, double tolerance, eb_report** out) {
  return guarded([&] {
    require(suite && out, "null argument");
    const std::string_view name(suite);
    const bool all = name == "all";
    if (!all && name != "scalar" && name != "monogamy" && name != "polygamy" && name != "dominance" && name != "base")
      throw entbound::Error(entbound::ErrorCode::InvalidArgument, "unknown suite '" + std::string(name) + "'");
    const bool custom = tolerance >= 0.0;

    entbound::VerificationReport report;
    if (all || name == "scalar") {
      entbound::ScalarTolerance tol;
      if (custom) tol = {tolerance, tolerance};
      report.merge(entbound::verify_scalar(n, seed, tol));
    }
    if (all || name == "monogamy") {
      entbound::MonogamyOptions opt;
      opt.three_qubit_samples = n;
      opt.four_qubit_samples = n / 10;
      if (custom) opt.tolerance = tolerance;
      report.merge(entbound::verify_monogamy_states(opt, seed));
    }
    if (all || name == "polygamy") {
      entbound::PolygamyOptions opt;
      opt.samples = n;
      if (custom) opt.tolerance = tolerance;
      report.merge(entbound::verify_polygamy_states(opt, seed));
    }
    if (all || name == "base") report.merge(entbound::verify_base_relations(n, seed, custom ? tolerance : 1e-8));
    if (all || name == "dominance") report.merge(entbound::verify_dominance(custom ? tolerance : 1e-12));
    *out = new eb_report{std::move(report)};
  });
}

void eb_report_summary_get(const eb_report* report, eb_report_summary* out) {
  if (!report || !out) return;
  out->total = report->report.total;
  out->failures = report->report.failures;
  out->skipped = report->report.skipped;
  out->worst_margin = report->report.worst_margin;
}

size_t eb_report_family_count(const eb_report* report) { return report ? report->report.families.size() : 0; }

eb_status eb_report_family(const eb_report* report, size_t index, eb_family_summary* out) {
  return guarded([&] {
    require(report && out, "null argument");
    require(index < report->report.families.size(), "family index out of range");
    const entbound::FamilyReport& f = report->report.families[index];
    out->name = f.name.c_str();
    out->tolerance = f.tolerance;
    out->relative = f.relative;
    out->total = f.total;
    out->failures = f.failures;
    out->skipped = f.skipped;
    out->worst_margin = f.worst_margin;
  });
}

size_t eb_report_failure_count(const eb_report* report) {
  return report ? report->report.failure_samples.size() : 0;
}

eb_status eb_report_failure(const eb_report* report, size_t index, const char** inputs, double* margin) {
  return guarded([&] {
    require(report && inputs && margin, "null argument");
    require(index < report->report.failure_samples.size(), "failure index out of range");
    *inputs = report->report.failure_samples[index].inputs.c_str();
    *margin = report->report.failure_samples[index].margin;
  });
}

void eb_report_free(eb_report* report) { delete report; }

}  // extern "C"

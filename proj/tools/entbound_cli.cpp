// entbound command-line front end. Talks to the library only through the C API.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "entbound/entbound.h"

namespace {

using nlohmann::json;

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kDomain = 3, kIo = 4 };

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// Same 12 digits in JSON; non-finite values become null.
json jnum(double v) {
  if (!std::isfinite(v)) return nullptr;
  return std::strtod(fmt(v).c_str(), nullptr);
}

int exit_for(eb_status s) {
  switch (s) {
    case EB_OK: return kOk;
    case EB_ERR_INVALID_ARGUMENT:
    case EB_ERR_PARSE: return kUsage;
    case EB_ERR_IO: return kIo;
    default: return kDomain;
  }
}

struct Failure {
  eb_status status;
};

void check(eb_status s) {
  if (s != EB_OK) throw Failure{s};
}

struct StateHandle {
  eb_state* p = nullptr;
  ~StateHandle() { eb_state_free(p); }
};

struct ReportHandle {
  eb_report* p = nullptr;
  ~ReportHandle() { eb_report_free(p); }
};

eb_measure_vector measure_state(const std::string& spec, const std::string& kind_name) {
  eb_measure_kind kind;
  check(eb_measure_kind_parse(kind_name.c_str(), &kind));
  StateHandle state;
  check(eb_state_parse(spec.c_str(), &state.p));
  eb_measure_vector mv;
  check(eb_measure(state.p, kind, &mv));
  return mv;
}

json report_json(const eb_report* r) {
  eb_report_summary s;
  eb_report_summary_get(r, &s);
  json out = {{"total", s.total},
              {"failures", s.failures},
              {"skipped", s.skipped},
              {"worst_margin", jnum(s.worst_margin)},
              {"passed", s.failures == 0}};
  json families = json::array();
  for (size_t i = 0; i < eb_report_family_count(r); ++i) {
    eb_family_summary f;
    check(eb_report_family(r, i, &f));
    families.push_back({{"name", f.name},
                        {"tolerance", f.tolerance},
                        {"relative", f.relative != 0},
                        {"total", f.total},
                        {"failures", f.failures},
                        {"skipped", f.skipped},
                        {"worst_margin", jnum(f.worst_margin)}});
  }
  out["families"] = families;
  json samples = json::array();
  for (size_t i = 0; i < eb_report_failure_count(r); ++i) {
    const char* inputs = nullptr;
    double margin = 0.0;
    check(eb_report_failure(r, i, &inputs, &margin));
    samples.push_back({{"inputs", inputs}, {"margin", jnum(margin)}});
  }
  out["failure_samples"] = samples;
  return out;
}

// "lo:hi:step"; lo may be the literal "s" when allow_s is set.
eb_axis parse_axis(const std::string& text, bool allow_s, bool* starts_at_s) {
  std::vector<std::string> parts;
  size_t start = 0;
  for (;;) {
    size_t colon = text.find(':', start);
    parts.push_back(text.substr(start, colon - start));
    if (colon == std::string::npos) break;
    start = colon + 1;
  }
  if (parts.size() != 3) throw CLI::ValidationError("range '" + text + "' must be lo:hi:step");
  auto number = [&](const std::string& s) {
    try {
      size_t used = 0;
      double v = std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw CLI::ValidationError("bad number '" + s + "' in range '" + text + "'");
    }
  };
  eb_axis axis{};
  if (allow_s && parts[0] == "s") {
    *starts_at_s = true;
    axis.lo = 0.0;
  } else {
    if (starts_at_s) *starts_at_s = false;
    axis.lo = number(parts[0]);
  }
  axis.hi = number(parts[1]);
  axis.step = number(parts[2]);
  return axis;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted monogamy and polygamy bounds for multiqubit entanglement"};
  app.require_subcommand(1);

  // measure
  std::string state_spec, kind = "concurrence";
  bool as_json = false;
  auto* measure = app.add_subcommand("measure", "Compute one-vs-rest and pairwise values of a measure");
  measure->add_option("--state", state_spec, "schmidt3:l0,..,l4[,phi] | wclass:a,b,c | haar:2x2x2:seed")->required();
  measure->add_option("--kind", kind, "concurrence | scren | screnoa | coa")->capture_default_str();
  measure->add_flag("--json", as_json, "Print JSON instead of text");

  // bound
  std::string mode = "monogamy", variant = "ours";
  std::optional<double> a_opt, base_opt, target_opt;
  double param = 0.5;
  bool allow_unmet = false;
  auto* bound = app.add_subcommand("bound", "Evaluate a weighted bound on a state");
  bound->add_option("--state", state_spec, "State specification")->required();
  bound->add_option("--kind", kind, "Measure kind")->capture_default_str();
  bound->add_option("--mode", mode, "monogamy | polygamy")
      ->check(CLI::IsMember({"monogamy", "polygamy"}))
      ->capture_default_str();
  bound->add_option("--a", a_opt, "Ratio parameter (default: max(1, largest admissible a))");
  bound->add_option("--base,--r,--s", base_opt, "Base exponent r (default 2) or s (default 1)");
  bound->add_option("--target,--alpha,--beta", target_opt, "Target exponent alpha or beta (default 1)");
  bound->add_option("--variant", variant, "ours | jfq | zjz1 | zjz2")->capture_default_str();
  bound->add_option("--param", param, "p (lower) or q (upper) for zjz1")->capture_default_str();
  bound->add_flag("--allow-unmet", allow_unmet, "Report instead of failing when the ratio condition is unmet");
  bound->add_flag("--json", as_json, "Print JSON instead of text");

  // repro
  std::string example, out_path = "-";
  std::string range1, range2;
  auto* repro = app.add_subcommand("repro", "Write the example parameter sweeps as CSV");
  repro->add_option("example", example, "example1 | example2")
      ->required()
      ->check(CLI::IsMember({"example1", "example2"}));
  repro->add_option("--out", out_path, "Output path, - for stdout")->capture_default_str();
  repro->add_option("--alpha,--beta", range1,
                    "First axis lo:hi:step (example1 default 0:1:0.02, example2 default s:3:0.05)");
  repro->add_option("--r,--s", range2, "Second axis lo:hi:step (defaults 2:5:0.05 and 0.6:1:0.01)");

  // verify
  std::string suite = "all";
  std::uint64_t n = 10000, seed = 1;
  double tol = -1.0;
  auto* verify = app.add_subcommand("verify", "Randomized verification of the inequalities; prints JSON");
  verify->add_option("--suite", suite, "scalar | monogamy | polygamy | dominance | base | all")
      ->check(CLI::IsMember({"scalar", "monogamy", "polygamy", "dominance", "base", "all"}))
      ->capture_default_str();
  verify->add_option("--n", n, "Samples per family")->capture_default_str();
  verify->add_option("--seed", seed, "RNG seed")->envname("ENTBOUND_SEED")->capture_default_str();
  verify->add_option("--tol", tol, "Tolerance override (negative: per-family defaults)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*measure) {
      const eb_measure_vector mv = measure_state(state_spec, kind);
      if (as_json) {
        json pw = json::array();
        for (size_t i = 0; i < mv.num_pairwise; ++i) pw.push_back(jnum(mv.pairwise[i]));
        std::cout << json{{"kind", eb_measure_kind_name(mv.kind)}, {"one_vs_rest", jnum(mv.one_vs_rest)},
                          {"pairwise", pw}}
                         .dump()
                  << "\n";
      } else {
        std::cout << "kind: " << eb_measure_kind_name(mv.kind) << "\n";
        std::cout << "one_vs_rest: " << fmt(mv.one_vs_rest) << "\n";
        std::cout << "pairwise:";
        for (size_t i = 0; i < mv.num_pairwise; ++i) std::cout << (i ? ", " : " ") << fmt(mv.pairwise[i]);
        std::cout << "\n";
      }
      return kOk;
    }

    if (*bound) {
      const eb_measure_vector mv = measure_state(state_spec, kind);
      eb_bound_spec spec;
      eb_bound_spec_init(&spec);
      spec.mode = mode == "polygamy" ? EB_POLYGAMY : EB_MONOGAMY;
      if (a_opt) {
        spec.has_a = 1;
        spec.a = *a_opt;
      }
      spec.base_exp = base_opt.value_or(spec.mode == EB_POLYGAMY ? 1.0 : 2.0);
      spec.target_exp = target_opt.value_or(1.0);
      check(eb_variant_parse(variant.c_str(), &spec.variant));
      spec.variant_param = param;
      spec.allow_unmet = allow_unmet;
      eb_bound_report r;
      check(eb_bound_evaluate(&mv, &spec, &r));
      if (as_json) {
        std::cout << json{{"mode", mode},
                          {"variant", eb_variant_name(spec.variant)},
                          {"bound_value", jnum(r.bound_value)},
                          {"measured_value", r.has_measured ? jnum(r.measured_value) : json(nullptr)},
                          {"margin", jnum(r.margin)},
                          {"ratio_condition_ok", r.ratio_condition_ok != 0},
                          {"max_admissible_a", jnum(r.max_admissible_a)},
                          {"a_used", jnum(r.a_used)},
                          {"base_relation_assumed", r.base_relation_assumed != 0}}
                         .dump()
                  << "\n";
      } else {
        std::cout << "mode: " << mode << "\n"
                  << "variant: " << eb_variant_name(spec.variant) << "\n"
                  << "bound_value: " << fmt(r.bound_value) << "\n"
                  << "measured_value: " << (r.has_measured ? fmt(r.measured_value) : "none") << "\n"
                  << "margin: " << fmt(r.margin) << "\n"
                  << "ratio_condition_ok: " << (r.ratio_condition_ok ? "true" : "false") << "\n"
                  << "max_admissible_a: " << fmt(r.max_admissible_a) << "\n"
                  << "a_used: " << fmt(r.a_used) << "\n"
                  << "base_relation_assumed: " << (r.base_relation_assumed ? "true" : "false") << "\n";
      }
      return kOk;
    }

    if (*repro) {
      eb_example ex;
      check(eb_example_parse(example.c_str(), &ex));
      eb_grid grid;
      check(eb_default_grid(ex, &grid));
      try {
        bool starts = grid.axis1_starts_at_axis2 != 0;
        if (!range1.empty()) grid.axis1 = parse_axis(range1, ex == EB_EXAMPLE2, &starts);
        grid.axis1_starts_at_axis2 = starts;
        if (!range2.empty()) grid.axis2 = parse_axis(range2, false, nullptr);
      } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
      }
      size_t rows = 0;
      ReportHandle report;
      check(eb_repro_write_csv(ex, &grid, out_path.c_str(), &rows, &report.p));
      eb_report_summary s;
      eb_report_summary_get(report.p, &s);
      std::cerr << example << ": " << rows << " rows, ordering checks " << s.total << ", violations " << s.failures
                << "\n";
      return kOk;
    }

    if (*verify) {
      ReportHandle report;
      check(eb_verify(suite.c_str(), n, seed, tol, &report.p));
      json out = report_json(report.p);
      out["suite"] = suite;
      out["n"] = n;
      out["seed"] = seed;
      std::cout << out.dump(2) << "\n";
      return out["failures"].get<std::uint64_t>() == 0 ? kOk : kVerifyFailed;
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << eb_last_error() << "\n";
    return exit_for(f.status);
  }
  return kUsage;
}

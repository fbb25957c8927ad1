#pragma once

// JSON documents for scan and lemma-suite reports. Key order is fixed and
// worker counts are never echoed, so equal inputs give equal bytes.

#include <nlohmann/json.hpp>

#include <string>

#include "zetastrip/lemma_suite.hpp"
#include "zetastrip/strip_verifier.hpp"

namespace zetastrip {

using Json = nlohmann::ordered_json;

inline Json to_json(ComplexPoint p) { return Json{{"sigma", p.sigma}, {"t", p.t}}; }

inline Json to_json(const EvalConfig& cfg) {
  return Json{{"target_abs_error", cfg.target_abs_error},
              {"max_terms", cfg.max_terms},
              {"cross_check_gamma", cfg.cross_check_gamma}};
}

/// wall_time_s is included only on request; it is the one field that varies
/// between identical runs.
inline Json to_json(const ScanReport& r, bool with_timing = false) {
  Json j;
  j["quantity"] = std::string(name(r.quantity));
  j["region"] = r.region;
  j["rect"] = Json{{"sigma_min", r.rect.sigma_min},
                   {"sigma_max", r.rect.sigma_max},
                   {"t_min", r.rect.t_min},
                   {"t_max", r.rect.t_max}};
  if (r.quantity == ScanQuantity::hN_bound) {
    j["grid"] = Json{{"n_terms", r.product_depth}, {"sigma_steps", r.sigma_steps}, {"d_sigma", r.grid.d_sigma}};
  } else {
    j["grid"] = Json{{"d_sigma", r.grid.d_sigma},
                     {"d_t", r.grid.d_t},
                     {"refine_threshold", r.grid.refine_threshold},
                     {"max_refine_depth", r.grid.max_refine_depth}};
  }
  j["samples"] = r.samples;
  j["min_margin"] = r.min_margin;
  j["argmin"] = to_json(r.argmin);
  Json violations = Json::array();
  for (const ScanSample& v : r.violations) {
    violations.push_back(Json{{"sigma", v.at.sigma},
                              {"t", v.at.t},
                              {"margin", v.margin},
                              {"severity", std::string(name(v.severity))}});
  }
  j["violations"] = std::move(violations);
  j["violation_count"] = r.violation_count;
  j["finding_count"] = r.finding_count;
  j["near_zero_equalities"] = r.near_zero_equalities;
  Json diagnostics = Json::array();
  for (const Diagnostic& d : r.diagnostics) {
    diagnostics.push_back(Json{{"sigma", d.at.sigma}, {"t", d.at.t}, {"message", d.message}});
  }
  j["diagnostics"] = std::move(diagnostics);
  j["refined_cells"] = r.refined_cells;
  if (r.audit) {
    j["derivative_audit"] = Json{{"points", r.audit->points},
                                 {"max_abs_deviation", r.audit->max_abs_deviation},
                                 {"tolerance", r.audit->tolerance},
                                 {"passed", r.audit->passed()}};
  }
  if (r.crossing) j["crossing"] = Json{{"sigma", r.crossing->sigma}, {"t_star", r.crossing->t_star}};
  if (with_timing) j["wall_time_s"] = r.wall_time_s;
  j["config_echo"] = to_json(r.config);
  j["exit_code"] = r.exit_code();
  return j;
}

inline Json params_json(const std::vector<std::string>& names, const LemmaParams& p) {
  Json j = Json::object();
  for (std::size_t k = 0; k < names.size() && k < p.size(); ++k) j[names[k]] = p[k];
  return j;
}

inline Json to_json(const MarginResult& r) {
  return Json{{"lhs", r.lhs}, {"rhs", r.rhs}, {"margin", r.margin}, {"strict_expected", r.strict_expected}};
}

inline Json to_json(const LemmaSuiteReport& r) {
  Json j;
  j["seed"] = r.seed;
  j["samples_per_inequality"] = r.samples_per_inequality;
  j["passed"] = r.passed();
  Json ineq = Json::array();
  for (const InequalityTally& t : r.inequalities) {
    Json e;
    e["name"] = t.name;
    e["passed"] = t.passed();
    e["samples"] = t.samples;
    e["strict"] = t.strict;
    e["unresolved"] = t.unresolved;
    e["equality_band"] = t.equality_band;
    e["violations"] = t.violations;
    e["out_of_domain"] = t.out_of_domain;
    e["worst_margin"] = t.worst_margin;
    e["worst_at"] = params_json(t.param_names, t.worst_at);
    ineq.push_back(std::move(e));
  }
  j["inequalities"] = std::move(ineq);
  Json eq = Json::array();
  for (const EqualityCheck& c : r.equality_checks) {
    eq.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"samples", c.samples}, {"max_abs_margin", c.max_abs_margin}});
  }
  j["equality_checks"] = std::move(eq);
  Json fixed = Json::array();
  for (const FixedVector& f : r.fixed_vectors) {
    fixed.push_back(Json{{"name", f.name},
                         {"passed", f.passed},
                         {"params", params_json(f.param_names, f.params)},
                         {"result", to_json(f.result)}});
  }
  j["fixed_vectors"] = std::move(fixed);
  Json aux = Json::array();
  for (const AuxiliaryCheck& a : r.auxiliary) {
    aux.push_back(Json{{"name", a.name}, {"passed", a.passed()}, {"samples", a.samples}, {"failures", a.failures}, {"worst", a.worst}});
  }
  j["auxiliary"] = std::move(aux);
  return j;
}

}  // namespace zetastrip

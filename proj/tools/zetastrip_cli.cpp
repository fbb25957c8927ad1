// zetastrip command-line front end.
//
// Exit codes: 0 clean; 1 violation in a claimed region or a failed lemma
// suite; 2 findings only; 3 evaluation error (pole, domain, truncation, no
// bracket); 4 I/O error. Argument errors use CLI11's codes.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "zetastrip/zetastrip.hpp"

namespace {

using zetastrip::Json;

constexpr int kExitEvalError = 3;
constexpr int kExitIoError = 4;

Json complex_json(zetastrip::Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json error_record(const zetastrip::Error& e) {
  return Json{{"error", Json{{"kind", e.kind()}, {"message", e.what()}}}};
}

/// Writes `text` to --out (atomically) or to stdout.
void deliver(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  zetastrip::write_file_atomically(out_path, [&](std::ostream& os) { os << text; });
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

struct RectFlags {
  std::optional<double> sigma_min, sigma_max, t_min, t_max, d_sigma, d_t;
  double refine_threshold = 0.01;
  int max_refine_depth = 4;

  void attach(CLI::App* cmd) {
    cmd->add_option("--sigma-min", sigma_min, "Lower sigma bound");
    cmd->add_option("--sigma-max", sigma_max, "Upper sigma bound");
    cmd->add_option("--t-min", t_min, "Lower t bound");
    cmd->add_option("--t-max", t_max, "Upper t bound");
    cmd->add_option("--d-sigma", d_sigma, "Sigma step");
    cmd->add_option("--d-t", d_t, "t step");
    cmd->add_option("--refine-threshold", refine_threshold, "Split cells whose corner margin is below this")
        ->capture_default_str();
    cmd->add_option("--max-refine-depth", max_refine_depth, "Refinement depth cap (0..6)")
        ->capture_default_str();
  }

  zetastrip::StripRect rect(zetastrip::StripRect defaults) const {
    return {sigma_min.value_or(defaults.sigma_min), sigma_max.value_or(defaults.sigma_max),
            t_min.value_or(defaults.t_min), t_max.value_or(defaults.t_max)};
  }

  zetastrip::GridSpec grid(double default_d_sigma, double default_d_t) const {
    return {d_sigma.value_or(default_d_sigma), d_t.value_or(default_d_t), refine_threshold, max_refine_depth};
  }
};

struct EvalFlags {
  std::size_t max_terms = zetastrip::EvalConfig{}.max_terms;
  double target = zetastrip::EvalConfig{}.target_abs_error;
  bool cross_check = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--max-terms", max_terms, "Series and product length cap")->capture_default_str();
    cmd->add_option("--target-error", target, "Target absolute error of zeta")->capture_default_str();
    cmd->add_flag("--cross-check-gamma", cross_check, "Compare the gamma ratio against the product route");
  }

  zetastrip::EvalConfig config() const { return {target, max_terms, cross_check}; }
};

int run_eval(double sigma, double t, const zetastrip::EvalConfig& cfg, const std::string& out) {
  const zetastrip::ComplexPoint s{sigma, t};
  Json j;
  j["s"] = Json{{"sigma", sigma}, {"t", t}};
  j["zeta"] = complex_json(zetastrip::zeta(s, cfg));
  j["zeta_prime"] = sigma > 0.0 ? complex_json(zetastrip::zeta_deriv(s, cfg)) : Json(nullptr);
  try {
    j["chi_abs"] = std::abs(zetastrip::chi(s, cfg));
    j["fe_residual"] = zetastrip::chi_identity_residual(s, cfg);
  } catch (const zetastrip::PoleError&) {
    // g has a pole or zero here while zeta itself is finite.
    j["chi_abs"] = nullptr;
    j["fe_residual"] = nullptr;
  }
  deliver(out, dump(j));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical checks of |zeta(1-s)| <= |zeta(s)| on the left half of the critical strip"};
  app.require_subcommand(1);
  std::string out;
  unsigned workers = zetastrip::default_workers();
  EvalFlags eval_flags;

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate zeta, zeta', |g| and the functional-equation residual");
  double sigma = 0.0;
  double t = 0.0;
  eval_cmd->add_option("--sigma", sigma, "Real part")->required();
  eval_cmd->add_option("--t", t, "Imaginary part")->required();
  eval_cmd->add_option("--out", out, "Output file (default stdout)");
  eval_flags.attach(eval_cmd);

  auto* lemma_cmd = app.add_subcommand("verify-lemmas", "Randomized property suite for the elementary inequalities");
  zetastrip::LemmaSuiteOptions lemma_opt;
  lemma_cmd->add_option("--samples", lemma_opt.samples, "Samples per inequality")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  lemma_cmd->add_option("--seed", lemma_opt.seed, "RNG seed")->capture_default_str();
  lemma_cmd->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  lemma_cmd->add_option("--out", out, "Output file (default stdout)");

  auto* scan_cmd = app.add_subcommand("scan", "Grid scan of one margin over a rectangle");
  std::string quantity;
  scan_cmd->add_option("quantity", quantity, "chi | theorem | hN | condition_A")
      ->required()
      ->check(CLI::IsMember({"chi", "chi_modulus", "theorem", "hN", "hN_bound", "condition_A"}));
  RectFlags scan_rect;
  scan_rect.attach(scan_cmd);
  std::size_t n_terms = 3;
  std::size_t sigma_steps = 500;
  bool timing = false;
  std::string scan_format = "json";
  scan_cmd->add_option("--n-terms", n_terms, "Product depth N (hN)")->check(CLI::PositiveNumber)->capture_default_str();
  scan_cmd->add_option("--samples", sigma_steps, "Sigma samples (hN)")->check(CLI::PositiveNumber)->capture_default_str();
  scan_cmd->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  scan_cmd->add_option("--format", scan_format, "Report format")->check(CLI::IsMember({"json"}));
  scan_cmd->add_flag("--timing", timing, "Include wall_time_s in the report");
  scan_cmd->add_option("--out", out, "Output file (default stdout)");
  eval_flags.attach(scan_cmd);

  auto* fig_cmd = app.add_subcommand("emit-figure", "Write the |g| surface over a rectangle");
  RectFlags fig_rect;
  fig_rect.attach(fig_cmd);
  std::string fig_format = "csv";
  fig_cmd->add_option("--format", fig_format, "csv | json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  fig_cmd->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  fig_cmd->add_option("--out", out, "Output file (default stdout)");
  eval_flags.attach(fig_cmd);

  auto* zero_cmd = app.add_subcommand("locate-zero", "Refine a zero ordinate on the critical line");
  double t_guess = 14.0;
  double tol = 1e-10;
  zero_cmd->add_option("--t-guess", t_guess, "Initial ordinate")->required();
  zero_cmd->add_option("--tol", tol, "Bound on |zeta| at the returned point")->capture_default_str();
  zero_cmd->add_option("--out", out, "Output file (default stdout)");

  CLI11_PARSE(app, argc, argv);
  const zetastrip::EvalConfig cfg = eval_flags.config();

  try {
    if (*eval_cmd) return run_eval(sigma, t, cfg, out);

    if (*lemma_cmd) {
      lemma_opt.workers = workers;
      const zetastrip::LemmaSuiteReport report = zetastrip::run_lemma_suite(lemma_opt);
      deliver(out, dump(zetastrip::to_json(report)));
      return report.passed() ? 0 : 1;
    }

    if (*scan_cmd) {
      zetastrip::ScanReport report;
      if (quantity == "chi" || quantity == "chi_modulus") {
        report = zetastrip::scan_chi_modulus(scan_rect.rect({0.0, 0.5, 12.0, 50.0}), scan_rect.grid(0.01, 0.05), cfg,
                                             workers);
      } else if (quantity == "theorem") {
        report = zetastrip::scan_theorem(scan_rect.rect({0.0, 0.5, 12.0, 50.0}), scan_rect.grid(0.01, 0.05), cfg,
                                         workers);
      } else if (quantity == "hN" || quantity == "hN_bound") {
        report = zetastrip::scan_hN_bound(n_terms, scan_rect.t_min.value_or(12.0), sigma_steps);
      } else {
        report = zetastrip::scan_condition_a(scan_rect.rect({0.01, 0.49, 6.5, 50.0}), scan_rect.grid(0.01, 0.02), cfg,
                                             workers);
      }
      deliver(out, dump(zetastrip::to_json(report, timing)));
      return report.exit_code();
    }

    if (*fig_cmd) {
      const zetastrip::StripRect rect = fig_rect.rect({0.0, 0.5, 6.0, 12.0});
      const zetastrip::GridSpec grid = fig_rect.grid(0.01, 0.01);
      std::ostringstream text;
      if (fig_format == "csv") {
        zetastrip::emit_figure_grid(rect, grid, cfg, text, workers);
      } else {
        Json rows = Json::array();
        for (const auto& r : zetastrip::figure_rows(rect, grid, cfg, workers)) {
          rows.push_back(Json::array({r.sigma, r.t, r.abs_g, r.margin}));
        }
        text << Json{{"columns", Json::array({"sigma", "t", "abs_g", "margin"})}, {"rows", std::move(rows)}}.dump()
             << '\n';
      }
      deliver(out, text.str());
      return 0;
    }

    if (*zero_cmd) {
      const double t_star = zetastrip::locate_zero(t_guess, tol, cfg);
      const double modulus = std::abs(zetastrip::zeta(zetastrip::ComplexPoint{0.5, t_star}, cfg));
      deliver(out, dump(Json{{"t", t_star}, {"zeta_abs", modulus}}));
      return 0;
    }
  } catch (const zetastrip::IoError& e) {
    std::cerr << dump(error_record(e));
    return kExitIoError;
  } catch (const zetastrip::Error& e) {
    std::cout << dump(error_record(e));
    return kExitEvalError;
  }
  return 0;
}

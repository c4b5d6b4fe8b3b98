// Copyright 2026 The imaginarity Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "imag/channels.hpp"
#include "imag/closed_form.hpp"
#include "imag/io.hpp"
#include "imag/monotone.hpp"
#include "imag/nogo.hpp"
#include "imag/pure.hpp"
#include "imag/roof.hpp"
#include "imag/states.hpp"

namespace {

using imag::DensityMatrix;
using imag::MonotoneF;
using imag::RoofOptions;
using nlohmann::json;

std::string format_g9(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw imag::ValidationError("file", "cannot write " + out_path);
  out << text;
}

struct OptimizerFlags {
  std::uint64_t seed = 0;
  int starts = 32;
  std::size_t m = 0;
  double tol = 1e-9;

  RoofOptions roof_options() const {
    RoofOptions opts;
    opts.seed = seed;
    opts.n_starts = starts;
    opts.m = m;
    opts.tol = tol;
    return opts;
  }
};

void add_optimizer_flags(CLI::App* cmd, OptimizerFlags* flags) {
  cmd->add_option("--seed", flags->seed, "Optimizer seed (recorded in every report)");
  cmd->add_option("--starts", flags->starts, "Optimizer starts per measure")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--m", flags->m, "Ensemble size cap (0 = rank^2 default)");
  cmd->add_option("--tol", flags->tol, "Optimizer / bisection tolerance")
      ->check(CLI::PositiveNumber);
}

json certificate_summary(const imag::RoofResult& r) {
  json weights = json::array();
  json overlaps = json::array();
  for (std::size_t i = 0; i < r.certificate.size(); ++i) {
    weights.push_back(r.certificate.weight(i));
    overlaps.push_back(imag::overlap(r.certificate.state(i)));
  }
  return json{{"size", r.certificate.size()},
              {"weights", std::move(weights)},
              {"overlaps", std::move(overlaps)}};
}

// ---------------------------------------------------------------------------
// measure

struct MeasureSpec {
  std::string display;  // canonical name used in the report
  std::string method;   // roof | tilde | closed-form | bisection
  std::string f_spec;   // for roof/tilde
  double mu = 0.5;      // for tsallis_rel
};

std::vector<MeasureSpec> expand_measure_specs(const std::vector<std::string>& raw) {
  std::vector<MeasureSpec> out;
  auto add_roof = [&](const std::string& f) {
    const MonotoneF resolved = MonotoneF::from_spec(f);  // validates the name
    out.push_back(MeasureSpec{"roof:" + resolved.name(), "roof", f});
  };
  auto add_tilde = [&](const std::string& f) {
    const MonotoneF resolved = MonotoneF::from_spec(f);
    out.push_back(MeasureSpec{"tilde:" + resolved.name(), "tilde", f});
  };

  std::vector<std::string> work = raw.empty() ? std::vector<std::string>{"all"} : raw;
  for (const std::string& spec : work) {
    if (spec == "all") {
      for (const MonotoneF& f : imag::registry_defaults()) add_roof(f.name());
      for (const MonotoneF& f : imag::registry_defaults()) add_tilde(f.name());
      out.push_back(MeasureSpec{"rel_entropy", "closed-form", ""});
      out.push_back(MeasureSpec{"fidelity", "closed-form", ""});
      MeasureSpec ts{"tsallis_rel:0.5", "closed-form", ""};
      ts.mu = 0.5;
      out.push_back(std::move(ts));
      out.push_back(MeasureSpec{"robustness", "bisection", ""});
    } else if (spec == "rel_entropy") {
      out.push_back(MeasureSpec{"rel_entropy", "closed-form", ""});
    } else if (spec == "fidelity") {
      out.push_back(MeasureSpec{"fidelity", "closed-form", ""});
    } else if (spec.rfind("tsallis_rel:", 0) == 0) {
      MeasureSpec ts{spec, "closed-form", ""};
      ts.mu = std::stod(spec.substr(12));
      out.push_back(std::move(ts));
    } else if (spec == "robustness") {
      out.push_back(MeasureSpec{"robustness", "bisection", ""});
    } else if (spec.rfind("roof:", 0) == 0) {
      add_roof(spec.substr(5));
    } else if (spec.rfind("tilde:", 0) == 0) {
      add_tilde(spec.substr(6));
    } else {
      add_roof(spec);  // bare f name means its convex roof
    }
  }
  return out;
}

int cmd_measure(const std::string& state_path, const std::vector<std::string>& f_specs,
                const OptimizerFlags& flags, const std::string& out_path,
                const std::string& format) {
  const imag::StateFile state = imag::load_state(state_path);
  const DensityMatrix rho = state.as_density();
  const RoofOptions opts = flags.roof_options();

  json measures = json::array();
  for (const MeasureSpec& spec : expand_measure_specs(f_specs)) {
    json entry;
    entry["name"] = spec.display;
    entry["method"] = spec.method;
    entry["seed"] = flags.seed;
    entry["n_starts"] = 0;
    entry["gap_estimate"] = 0.0;
    if (spec.method == "roof" || spec.method == "tilde") {
      const MonotoneF f = MonotoneF::from_spec(spec.f_spec);
      const imag::RoofResult r = (spec.method == "roof") ? imag::convex_roof(f, rho, opts)
                                                         : imag::tilde_measure(f, rho, opts);
      entry["value"] = r.value;
      entry["n_starts"] = r.n_starts;
      entry["gap_estimate"] = r.gap_estimate;
      entry["certificate"] = certificate_summary(r);
      if (r.budget_exceeded) entry["budget_exceeded"] = true;
    } else if (spec.display == "rel_entropy") {
      entry["value"] = imag::rel_entropy_imaginarity(rho);
    } else if (spec.display == "fidelity") {
      entry["value"] = imag::fidelity_imaginarity(rho);
    } else if (spec.method == "bisection") {
      const imag::RobustnessResult r = imag::robustness_imaginarity(rho, flags.tol);
      entry["value"] = r.s;
      entry["iterations"] = r.iterations;
    } else {  // tsallis_rel:<mu>
      entry["value"] = imag::tsallis_imaginarity(rho, spec.mu);
    }
    measures.push_back(std::move(entry));
  }

  if (format == "csv") {
    std::string csv = "name,method,value,seed,n_starts,gap_estimate\n";
    for (const json& m : measures) {
      csv += m["name"].get<std::string>() + "," + m["method"].get<std::string>() + "," +
             format_g9(m["value"].get<double>()) + "," + std::to_string(flags.seed) + "," +
             std::to_string(m["n_starts"].get<long long>()) + "," +
             format_g9(m["gap_estimate"].get<double>()) + "\n";
    }
    write_output(out_path, csv);
    return 0;
  }

  json report;
  report["input"] = state_path;
  report["dim"] = rho.dim();
  report["kind"] = state.kind;
  report["seed"] = flags.seed;
  report["measures"] = std::move(measures);
  write_output(out_path, report.dump(2) + "\n");
  return 0;
}

// ---------------------------------------------------------------------------
// fig1

int cmd_fig1(const std::string& variant, int points, const OptimizerFlags& flags,
             const std::string& out_path, const std::string& format) {
  const RoofOptions opts = flags.roof_options();
  const MonotoneF f = (variant == "a") ? MonotoneF::builtin("l2") : MonotoneF::builtin("entropy");

  std::string csv = "param,tilde_formula,roof_formula,tilde_numeric,roof_numeric\n";
  json rows = json::array();
  for (int i = 0; i < points; ++i) {
    double lambda, z, param;
    if (variant == "a") {
      // z = 1 is excluded from the family; the grid stops one step short.
      lambda = 0.6;
      z = static_cast<double>(i) / static_cast<double>(points);
      param = z;
    } else {
      z = 0.3;
      lambda = static_cast<double>(i) / static_cast<double>(points - 1);
      param = lambda;
    }
    const DensityMatrix tau = imag::prop4_family(lambda, z);
    const double tilde_formula = f(lambda * z + 1.0 - lambda);
    const double roof_formula = lambda * f(z);
    const double tilde_numeric = imag::tilde_measure(f, tau, opts).value;
    const double roof_numeric = imag::convex_roof(f, tau, opts).value;
    if (std::abs(tilde_formula - tilde_numeric) > 1e-4 ||
        std::abs(roof_formula - roof_numeric) > 1e-4) {
      std::cerr << "warning: fig1 row param=" << format_g9(param)
                << " deviates from the analytic curve by more than 1e-4\n";
    }
    if (format == "json") {
      rows.push_back(json{{"param", param},
                          {"tilde_formula", tilde_formula},
                          {"roof_formula", roof_formula},
                          {"tilde_numeric", tilde_numeric},
                          {"roof_numeric", roof_numeric}});
    } else {
      csv += format_g9(param) + "," + format_g9(tilde_formula) + "," + format_g9(roof_formula) +
             "," + format_g9(tilde_numeric) + "," + format_g9(roof_numeric) + "\n";
    }
  }
  if (format == "json") {
    json report;
    report["variant"] = variant;
    report["seed"] = flags.seed;
    report["rows"] = std::move(rows);
    write_output(out_path, report.dump(2) + "\n");
  } else {
    write_output(out_path, csv);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// convert

int cmd_convert(const std::string& src_path, const std::string& dst_path,
                const std::string& out_path) {
  const imag::StateFile src = imag::load_state(src_path);
  const imag::StateFile dst = imag::load_state(dst_path);

  json verdict;
  verdict["source"] = src_path;
  verdict["target"] = dst_path;

  if (src.kind == "pure" && dst.kind == "pure") {
    const imag::PureState& psi = *src.pure;
    const imag::PureState& phi = *dst.pure;
    const double x = imag::overlap(psi);
    const double y = imag::overlap(phi);
    const bool ok = imag::pure_convertible(psi, phi);
    verdict["mode"] = "pure";
    verdict["convertible"] = ok;
    verdict["overlap_source"] = x;
    verdict["overlap_target"] = y;
    verdict["geometric_source"] = 0.5 * (1.0 - x);
    verdict["geometric_target"] = 0.5 * (1.0 - y);
    if (ok) {
      const std::string channel_path = out_path.empty() ? "channel.json" : out_path;
      const imag::RealKrausChannel channel = imag::pure_conversion_channel(psi, phi);
      std::ofstream out(channel_path, std::ios::binary);
      if (!out) throw imag::ValidationError("file", "cannot write " + channel_path);
      out << imag::channel_to_json(channel);
      verdict["channel_path"] = channel_path;
    }
    std::cout << verdict.dump(2) << "\n";
    return 0;
  }

  const DensityMatrix rho = src.as_density();
  const DensityMatrix sigma = dst.as_density();
  if (rho.dim() == 2 && sigma.dim() == 2) {
    const imag::QubitConvertibility q = imag::qubit_convertible(rho, sigma);
    verdict["mode"] = "qubit";
    verdict["convertible"] = q.ok;
    verdict["m1_source"] = q.m1_rho;
    verdict["m1_target"] = q.m1_sigma;
    verdict["m2_source"] = q.m2_rho;
    verdict["m2_target"] = q.m2_sigma;
    std::cout << verdict.dump(2) << "\n";
    return 0;
  }

  throw imag::UnsupportedPairError(
      "convert: no finite set of measure conditions decides mixed-state conversion beyond "
      "qubits; only pure-pure and qubit-qubit pairs are supported");
}

// ---------------------------------------------------------------------------
// nogo

int cmd_nogo(const std::vector<std::string>& f_specs, double grid_step, bool verify,
             const OptimizerFlags& flags, const std::string& out_path) {
  std::vector<MonotoneF> measures;
  if (f_specs.empty()) {
    measures = imag::default_nogo_measures();
  } else {
    for (const std::string& spec : f_specs) measures.push_back(MonotoneF::from_spec(spec));
  }

  imag::NogoGrid grid;
  for (double v = grid_step; v < 1.0 - 0.5 * grid_step; v += grid_step) grid.p1_values.push_back(v);
  for (double v = grid_step; v < 0.5 - 0.5 * grid_step; v += grid_step) {
    grid.lambda_values.push_back(v);
    grid.eta_values.push_back(v);
  }

  const RoofOptions opts = flags.roof_options();
  json report;
  report["seed"] = flags.seed;
  report["n_starts"] = flags.starts;
  report["grid_step"] = grid_step;
  try {
    const imag::NogoWitness w = imag::find_witness(measures, grid, opts);
    report["found"] = true;
    report["p1"] = w.p1;
    report["lambda"] = w.lambda;
    report["eta"] = w.eta;
    report["k"] = w.k;
    report["fk_rho"] = w.fk_rho;
    report["fk_sigma"] = w.fk_sigma;
    json rows = json::array();
    for (std::size_t i = 0; i < w.measure_names.size(); ++i) {
      rows.push_back(json{{"name", w.measure_names[i]},
                          {"rho", w.measure_values_rho[i]},
                          {"sigma", w.measure_values_sigma[i]}});
    }
    report["measures"] = std::move(rows);
    if (verify) {
      // Re-verify the tuple independently at quadrupled starts.
      RoofOptions strong = opts;
      strong.n_starts = 4 * std::max(1, opts.n_starts);
      strong.seed = opts.seed + 0xC0FFEEull;
      const auto [rho, sigma] = imag::build_states(w.p1, w.lambda, w.eta);
      bool ok = true;
      json rechecked = json::array();
      for (const MonotoneF& f : measures) {
        const double rv = imag::convex_roof(f, rho, strong).value;
        const double sv = imag::convex_roof(f, sigma, strong).value;
        ok = ok && rv >= sv - 1e-9;
        rechecked.push_back(json{{"name", f.name()}, {"rho", rv}, {"sigma", sv}});
      }
      const MonotoneF fk = MonotoneF::builtin("fk", {w.k});
      const double fk_rho = imag::convex_roof(fk, rho, strong).value;
      const double fk_sigma = imag::convex_roof(fk, sigma, strong).value;
      ok = ok && fk_rho < fk_sigma - 1e-9;
      report["verified"] = ok;
      report["verified_measures"] = std::move(rechecked);
      report["verified_fk_rho"] = fk_rho;
      report["verified_fk_sigma"] = fk_sigma;
    }
  } catch (const imag::NoWitnessFoundError&) {
    report["found"] = false;
  }
  write_output(out_path, report.dump(2) + "\n");
  return 0;
}

// ---------------------------------------------------------------------------
// validate

int cmd_validate(const std::string& path, const std::string& out_path) {
  const imag::FileReport r = imag::validate_file(path);
  json report;
  report["input"] = path;
  report["parsed"] = r.parsed;
  report["kind"] = r.kind;
  if (!r.parse_error.empty()) report["parse_error"] = r.parse_error;
  json checks = json::array();
  for (const imag::InvariantCheck& c : r.checks) {
    checks.push_back(json{{"invariant", c.name}, {"ok", c.ok}, {"residual", c.residual}});
  }
  report["checks"] = std::move(checks);
  report["ok"] = r.all_ok();
  write_output(out_path, report.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"imaginarity measures, real-operation constructions and figure data"};
  app.require_subcommand(1);

  OptimizerFlags flags;
  std::string out_path;
  std::vector<std::string> f_specs;

  std::string measure_state;
  std::string measure_format = "json";
  CLI::App* measure = app.add_subcommand(
      "measure", "Evaluate measures of a state file (JSON report)");
  measure->add_option("state", measure_state, "State JSON file")->required();
  measure->add_option("--f", f_specs,
                      "Measure specs: f name (= roof), roof:<f>, tilde:<f>, rel_entropy, "
                      "fidelity, tsallis_rel:<mu>, robustness, all")
      ->delimiter(',');
  measure->add_option("--out", out_path, "Write the report here instead of stdout");
  measure->add_option("--format", measure_format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  add_optimizer_flags(measure, &flags);

  std::string fig1_variant = "a";
  std::string fig1_format = "csv";
  int fig1_points = 101;
  CLI::App* fig1 = app.add_subcommand("fig1", "Tilde-vs-roof comparison curves as CSV");
  fig1->add_option("--variant", fig1_variant, "a: lambda=0.6 over z (l2 f); b: z=0.3 over lambda (entropy f)")
      ->check(CLI::IsMember({"a", "b"}));
  fig1->add_option("--points", fig1_points, "Grid points (>= 2)")
      ->check(CLI::Range(2, 100000));
  fig1->add_option("--out", out_path, "Write the CSV here instead of stdout");
  fig1->add_option("--format", fig1_format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  add_optimizer_flags(fig1, &flags);

  std::string convert_src, convert_dst;
  CLI::App* convert = app.add_subcommand(
      "convert", "Decide convertibility under real operations (pure-pure or qubit-qubit)");
  convert->add_option("source", convert_src, "Source state JSON file")->required();
  convert->add_option("target", convert_dst, "Target state JSON file")->required();
  convert->add_option("--out", out_path, "Certifying channel path for pure-pure verdicts");

  double nogo_step = 0.05;
  bool nogo_verify = false;
  CLI::App* nogo = app.add_subcommand(
      "nogo", "Search the witness family defeating a finite measure list");
  nogo->add_option("--f", f_specs, "Measure list (f specs; default: the five built-in rows)")
      ->delimiter(',');
  nogo->add_option("--grid-step", nogo_step, "Grid step for p1, lambda, eta")
      ->check(CLI::PositiveNumber);
  nogo->add_flag("--verify", nogo_verify, "Re-verify the witness at quadrupled starts");
  nogo->add_option("--out", out_path, "Write the witness JSON here instead of stdout");
  add_optimizer_flags(nogo, &flags);

  std::string validate_path;
  CLI::App* validate = app.add_subcommand(
      "validate", "Report every invariant of a state or channel file");
  validate->add_option("file", validate_path, "State or channel JSON file")->required();
  validate->add_option("--out", out_path, "Write the report here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (measure->parsed())
      return cmd_measure(measure_state, f_specs, flags, out_path, measure_format);
    if (fig1->parsed()) return cmd_fig1(fig1_variant, fig1_points, flags, out_path, fig1_format);
    if (convert->parsed()) return cmd_convert(convert_src, convert_dst, out_path);
    if (nogo->parsed()) return cmd_nogo(f_specs, nogo_step, nogo_verify, flags, out_path);
    if (validate->parsed()) return cmd_validate(validate_path, out_path);
  } catch (const imag::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

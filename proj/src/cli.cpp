// Copyright 2026 The Photobell Authors
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

#include "photobell/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "photobell/bell.hpp"
#include "photobell/fock_state.hpp"
#include "photobell/gaussian.hpp"
#include "photobell/scan.hpp"
#include "photobell/sweep_io.hpp"
#include "photobell/verify.hpp"

namespace photobell::cli {
namespace {

std::string num(double x) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.12g", x);
  return buffer;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<double> parse_number(std::string_view s) {
  s = trim(s);
  if (s.empty()) return std::nullopt;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(value)) return std::nullopt;
  return value;
}

// CLI11 only reads config files attached to the root app, so subcommand files are
// applied here. Command-line values take precedence over file values.
void apply_config_file(CLI::App* sub) {
  const CLI::Option* config = sub->get_config_ptr();
  if (config == nullptr || config->count() == 0) return;
  const auto path = config->as<std::string>();
  const auto items = sub->get_config_formatter()->from_file(path);
  for (const auto& item : items) {
    if (!item.parents.empty() || item.name == "++" || item.name == "--") continue;
    CLI::Option* opt = sub->get_option_no_throw("--" + item.name);
    if (opt == nullptr) throw CLI::ConfigError::Extras(item.fullname());
    if (opt->count() > 0) continue;
    opt->add_result(item.inputs);
    opt->run_callback();
  }
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

AngleQuad quad_or_default(const std::string& text) {
  if (text.empty()) return AngleQuad::canonical();
  const auto quad = parse_quad(text);
  if (!quad) throw UsageError("malformed angle quadruple '" + text + "'");
  return *quad;
}

CoherentAmplitudes amplitudes(const std::vector<double>& re, const std::vector<double>& im) {
  if (re.size() != 4 || im.size() != 4) throw UsageError("--re and --im take four values each");
  CoherentAmplitudes z;
  for (int i = 0; i < 4; ++i) {
    if (!std::isfinite(re[i]) || !std::isfinite(im[i])) throw UsageError("amplitudes must be finite");
    z[i] = {re[i], im[i]};
  }
  return z;
}

PassiveTransform entangler_named(const std::string& name) {
  if (name == "entangler") return PassiveTransform::entangler();
  if (name == "identity") return PassiveTransform::identity();
  throw UsageError("unknown entangler '" + name + "' (expected entangler or identity)");
}

void check_cutoff(int cutoff) {
  if (cutoff < 2 || cutoff > 24) throw UsageError("cutoff must lie in [2, 24]");
}

void check_finite(std::initializer_list<double> values) {
  for (double x : values) {
    if (!std::isfinite(x)) throw UsageError("numeric parameters must be finite");
  }
}

void print_rates(std::ostream& out, const char* label, const CoincidenceRates& r) {
  const auto angle = [](const std::optional<double>& t) { return t ? num(*t) : std::string("-"); };
  out << label << " theta1=" << angle(r.angles.theta1()) << " theta2=" << angle(r.angles.theta2())
      << " p_tt=" << num(r.p_tt) << " p_t_=" << num(r.p_t_) << " p__t=" << num(r.p__t)
      << " p__=" << num(r.p__) << '\n';
}

void print_score(std::ostream& out, const RatesProvider& provider, const ChScore& score) {
  const AngleQuad& q = score.quad;
  print_rates(out, "rates", provider(PolarizerAngles(q.theta1, q.theta2)));
  print_rates(out, "rates", provider(PolarizerAngles(q.theta1, q.theta2p)));
  print_rates(out, "rates", provider(PolarizerAngles(q.theta1p, q.theta2)));
  print_rates(out, "rates", provider(PolarizerAngles(q.theta1p, q.theta2p)));
  out << "f=" << num(score.f) << '\n';
  out << "lower_bound=" << num(score.lower_bound) << '\n';
  out << "verdict=" << to_string(score.verdict) << '\n';
}

void print_quad(std::ostream& out, const char* label, const ChScore& score) {
  const AngleQuad& q = score.quad;
  out << label << " theta1=" << num(q.theta1) << " theta2=" << num(q.theta2)
      << " theta1p=" << num(q.theta1p) << " theta2p=" << num(q.theta2p) << " f=" << num(score.f)
      << " lower_bound=" << num(score.lower_bound) << " verdict=" << to_string(score.verdict)
      << '\n';
}

}  // namespace

std::optional<double> parse_angle(std::string_view text) {
  text = trim(text);
  constexpr std::string_view prefix = "deg:";
  if (text.substr(0, prefix.size()) == prefix) {
    const auto deg = parse_number(text.substr(prefix.size()));
    if (!deg) return std::nullopt;
    return *deg * std::numbers::pi / 180.0;
  }
  return parse_number(text);
}

std::optional<AngleQuad> parse_quad(std::string_view text) {
  AngleQuad quad;
  for (int i = 0; i < 4; ++i) {
    const std::size_t comma = text.find(',');
    if ((i < 3) == (comma == std::string_view::npos)) return std::nullopt;
    const auto angle = parse_angle(text.substr(0, comma));
    if (!angle) return std::nullopt;
    quad[i] = *angle;
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
  }
  return quad;
}

int default_threads() {
  if (const char* env = std::getenv("PHOTOBELL_THREADS")) {
    const auto n = parse_number(env);
    if (n && *n >= 1 && *n == std::floor(*n) && *n <= 1024) return static_cast<int>(*n);
  }
  return 1;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coincidence rates and Clauser-Horne scores for four-mode optical states",
               "photobell"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "photobell 1.0.0");

  const auto with_config = [](CLI::App* sub) {
    sub->set_config("--config", "", "Read options from a key = value file");
  };

  // twophoton
  std::string quad_text;
  auto* twophoton = app.add_subcommand("twophoton", "Rates and f for the entangled two-photon state");
  twophoton->add_option("--quad", quad_text, "theta1,theta2,theta1p,theta2p (deg: prefix allowed)");
  with_config(twophoton);

  // coherent
  std::vector<double> re{0, 0, 0, 0}, im{0, 0, 0, 0};
  int cutoff = 0;
  auto* coherent = app.add_subcommand("coherent", "Rates and f for a four-mode coherent state");
  coherent->add_option("--re", re, "Real parts of z1..z4")->expected(4)->delimiter(',');
  coherent->add_option("--im", im, "Imaginary parts of z1..z4")->expected(4)->delimiter(',');
  coherent->add_option("--quad", quad_text, "Analyzer angles");
  coherent->add_option("--cutoff", cutoff, "Also evaluate the Fock engine at this cutoff");
  with_config(coherent);

  // gaussian
  double kappa = 1.0, u = 0.0, v = 0.0;
  std::string entangler_name = "entangler";
  auto* gaussian = app.add_subcommand("gaussian", "Rates and f for the squeezed Gaussian family");
  gaussian->add_option("--kappa", kappa, "Thermal parameter in (0, 1]");
  gaussian->add_option("-u,--u", u, "Squeeze of modes 1 and 4");
  gaussian->add_option("-v,--v", v, "Squeeze of modes 2 and 3");
  gaussian->add_option("--entangler", entangler_name, "entangler or identity");
  gaussian->add_option("--quad", quad_text, "Analyzer angles");
  gaussian->add_option("--cutoff", cutoff, "Also evaluate the Fock oracle at this cutoff");
  with_config(gaussian);

  // sweep
  std::string family_name = "gaussian", slice_name = "u0", format = "csv", output = "-";
  GridRange u_range, v_range;
  bool search_flag = false;
  int search_grid = 8, search_refine = 20;
  std::uint64_t seed = 0;
  int threads = default_threads();
  auto* sweep = app.add_subcommand("sweep", "Scan the squeeze parameters and write CSV or JSON");
  sweep->add_option("--family", family_name, "two_photon, coherent or gaussian");
  sweep->add_option("--kappa", kappa, "Thermal parameter in (0, 1]");
  sweep->add_option("--slice", slice_name, "v0, u0, uv, umv or grid");
  sweep->add_option("--u-min", u_range.min);
  sweep->add_option("--u-max", u_range.max);
  sweep->add_option("--u-steps", u_range.steps);
  sweep->add_option("--v-min", v_range.min);
  sweep->add_option("--v-max", v_range.max);
  sweep->add_option("--v-steps", v_range.steps);
  sweep->add_option("--quad", quad_text, "Analyzer angles");
  sweep->add_flag("--search", search_flag, "Search the angles per row instead of a fixed quad");
  sweep->add_option("--search-grid", search_grid);
  sweep->add_option("--search-refine", search_refine);
  sweep->add_option("--seed", seed);
  sweep->add_option("--re", re)->expected(4)->delimiter(',');
  sweep->add_option("--im", im)->expected(4)->delimiter(',');
  sweep->add_option("--entangler", entangler_name);
  sweep->add_option("--threads", threads, "Worker threads (default PHOTOBELL_THREADS or 1)");
  sweep->add_option("--format", format, "csv or json");
  sweep->add_option("-o,--output", output, "Output path, - for stdout");
  with_config(sweep);

  // search
  auto* search = app.add_subcommand("search", "Search analyzer angles for the extreme f");
  search->add_option("--family", family_name);
  search->add_option("--kappa", kappa);
  search->add_option("-u,--u", u);
  search->add_option("-v,--v", v);
  search->add_option("--re", re)->expected(4)->delimiter(',');
  search->add_option("--im", im)->expected(4)->delimiter(',');
  search->add_option("--entangler", entangler_name);
  search->add_option("--grid", search_grid);
  search->add_option("--refine", search_refine);
  search->add_option("--seed", seed);
  with_config(search);

  // verify
  int verify_cutoff = 16;
  double tolerance = 1e-4;
  auto* verify = app.add_subcommand("verify", "Run the cross-engine and closed-form oracle suites");
  verify->add_option("--cutoff", verify_cutoff);
  verify->add_option("--tolerance", tolerance);
  verify->add_option("--seed", seed);
  with_config(verify);

  try {
    app.parse(argc, argv);
    for (CLI::App* sub : app.get_subcommands()) apply_config_file(sub);
  } catch (const CLI::FileError& e) {
    err << "photobell: cannot open config file: " << e.what() << '\n';
    return kIo;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const auto provider_for = [&](Family family) -> RatesProvider {
    switch (family) {
      case Family::two_photon: return two_photon_rates_provider();
      case Family::coherent: return coherent_rates_provider(amplitudes(re, im));
      case Family::gaussian:
        return gaussian_rates_provider(make_gaussian(kappa, {u, v}, entangler_named(entangler_name)));
    }
    return {};
  };

  try {
    if (twophoton->parsed()) {
      const AngleQuad q = quad_or_default(quad_text);
      const RatesProvider provider = two_photon_rates_provider();
      print_score(out, provider, ch_score(provider, q));
      return kOk;
    }

    if (coherent->parsed()) {
      const AngleQuad q = quad_or_default(quad_text);
      const CoherentAmplitudes z = amplitudes(re, im);
      const RatesProvider provider = coherent_rates_provider(z);
      print_score(out, provider, ch_score(provider, q));
      if (cutoff != 0) {
        check_cutoff(cutoff);
        const auto rho = std::make_shared<const FockDensityMatrix>(
            to_density(make_coherent_state(z, cutoff)));
        out << "fock_cutoff=" << cutoff << " norm_deficit=" << num(rho->norm_deficit()) << '\n';
        out << "fock_f=" << num(ch_score(fock_rates_provider(rho), q).f) << '\n';
      }
      return kOk;
    }

    if (gaussian->parsed()) {
      check_finite({kappa, u, v});
      const AngleQuad q = quad_or_default(quad_text);
      const PassiveTransform t = entangler_named(entangler_name);
      const GaussianState state = make_gaussian(kappa, {u, v}, t);
      const RatesProvider provider = gaussian_rates_provider(state);
      print_score(out, provider, ch_score(provider, q));
      const SqueezingReport sq = squeezing_test(state);
      out << "least_noise_eigenvalue=" << num(sq.least_noise_eigenvalue)
          << " squeezed=" << (sq.squeezed ? "true" : "false") << '\n';
      if (cutoff != 0) {
        check_cutoff(cutoff);
        Tolerances loose;
        loose.truncation = 1.0;
        const auto rho = std::make_shared<const FockDensityMatrix>(
            make_thermal_mixture(kappa, {u, v}, cutoff, t, loose));
        out << "fock_cutoff=" << cutoff << " norm_deficit=" << num(rho->norm_deficit()) << '\n';
        out << "fock_f=" << num(ch_score(fock_rates_provider(rho, loose), q, loose).f) << '\n';
      }
      return kOk;
    }

    if (sweep->parsed()) {
      SweepSpec spec;
      const auto family = parse_family(family_name);
      const auto slice = parse_slice(slice_name);
      if (!family) throw UsageError("unknown family '" + family_name + "'");
      if (!slice) throw UsageError("unknown slice '" + slice_name + "'");
      if (format != "csv" && format != "json") throw UsageError("format must be csv or json");
      check_finite({kappa, u_range.min, u_range.max, v_range.min, v_range.max});
      spec.family = *family;
      spec.slice = *slice;
      spec.kappa = kappa;
      spec.u_range = u_range;
      spec.v_range = v_range;
      spec.quad = search_flag ? std::nullopt : std::optional<AngleQuad>(quad_or_default(quad_text));
      spec.seed = seed;
      spec.z = amplitudes(re, im);
      spec.entangler = entangler_named(entangler_name);
      spec.threads = threads;
      spec.search_grid = search_grid;
      spec.search_refine = search_refine;
      try {
        spec.validate();
      } catch (const PreconditionViolated& e) {
        throw UsageError(e.what());
      }
      const std::vector<SweepRow> rows = run_sweep(spec);
      std::ostringstream buffer;
      if (format == "csv") {
        write_csv(buffer, rows);
      } else {
        write_json(buffer, rows);
      }
      if (output == "-") {
        out << buffer.str();
        out.flush();
        return out ? kOk : kIo;
      }
      std::ofstream file(output, std::ios::binary | std::ios::trunc);
      if (!file) {
        err << "photobell: cannot open '" << output << "' for writing\n";
        return kIo;
      }
      file << buffer.str();
      file.close();
      if (!file) {
        err << "photobell: failed writing '" << output << "'\n";
        return kIo;
      }
      return kOk;
    }

    if (search->parsed()) {
      const auto family = parse_family(family_name);
      if (!family) throw UsageError("unknown family '" + family_name + "'");
      check_finite({kappa, u, v});
      if (search_grid < 4) throw UsageError("--grid must be at least 4");
      if (search_refine < 0) throw UsageError("--refine must be nonnegative");
      const AngleSearchResult result =
          search_angles(provider_for(*family), search_grid, search_refine, seed);
      print_quad(out, "max_f", result.upper);
      print_quad(out, "min_gap", result.lower);
      return kOk;
    }

    if (verify->parsed()) {
      check_cutoff(verify_cutoff);
      if (!(tolerance >= 0.0) || !std::isfinite(tolerance)) {
        throw UsageError("tolerance must be a nonnegative number");
      }
      if (verify_cutoff < 8) {
        err << "photobell: warning: cutoff " << verify_cutoff
            << " is below 8; truncation will dominate the residuals\n";
      }
      const VerifyReport report = run_verification(verify_cutoff, tolerance, seed);
      for (const SuiteResult& s : report.suites) {
        out << s.name << " cases=" << s.cases << " max_residual=" << num(s.max_residual) << ' '
            << (s.passed ? "pass" : "FAIL") << '\n';
      }
      out << "verify cutoff=" << report.cutoff << " tolerance=" << num(report.tolerance) << ' '
          << (report.passed ? "pass" : "FAIL") << '\n';
      return report.passed ? kOk : kVerificationFailed;
    }
  } catch (const UsageError& e) {
    err << "photobell: " << e.what() << "\n\n" << app.help();
    return kUsage;
  } catch (const PreconditionViolated& e) {
    err << "photobell: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "photobell: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kUsage;
}

}  // namespace photobell::cli

// slice-clifford: series evaluation and verification suites over R_n.
//
// Exit codes: 0 all checks pass, 1 check failure (or runtime error),
// 2 malformed input, 3 dimension mismatch.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <string>

#include "sclif/series_json.hpp"
#include "sclif/verify.hpp"

namespace {

bool write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot write '" << path << "'\n";
    return false;
  }
  out << text;
  return bool(out);
}

std::string eval_to_json(const sclif::RunConfig& cfg, const std::string& at,
                         const sclif::Multivector& value) {
  nlohmann::ordered_json j;
  j["command"] = "eval";
  j["n"] = value.generators();
  j["at"] = at;
  j["value"] = nlohmann::ordered_json::object();
  for (sclif::Mask m = 0; m < value.size(); ++m)
    if (value[m] != 0.0) j["value"][sclif::blade_key(m)] = value[m];
  (void)cfg;
  return j.dump(2) + "\n";
}

std::string eval_to_csv(const sclif::Multivector& value) {
  std::string out = "blade,value\n";
  char buf[64];
  for (sclif::Mask m = 0; m < value.size(); ++m) {
    if (value[m] == 0.0) continue;
    std::snprintf(buf, sizeof buf, "%.17g", value[m]);
    out += sclif::blade_key(m) + "," + buf + "\n";
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"slice monogenic function toolkit over the Clifford algebra R_n"};
  app.require_subcommand(1);

  sclif::RunConfig cfg;
  std::string at_literal = "0";

  const auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "generator count")
        ->check(CLI::Range(1, 12))
        ->capture_default_str();
    sub->add_option("--nodes", cfg.nodes, "quadrature node count")
        ->check(CLI::Range(8, 1 << 22))
        ->capture_default_str();
    sub->add_option("--terms", cfg.terms, "kernel series truncation")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--tol", cfg.tol, "check tolerance")->capture_default_str();
    sub->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
    sub->add_option("--input", cfg.input_path, "series JSON file");
    sub->add_option("--output", cfg.output_path, "write the report here (stdout otherwise)");
    sub->add_option("--format", cfg.format, "report format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
  };

  CLI::App* eval = app.add_subcommand("eval", "evaluate a series file at a point");
  add_common(eval);
  eval->add_option("--at", at_literal, "paravector literal, e.g. \"1.5+2e1-0.5e3\"")
      ->capture_default_str();

  add_common(app.add_subcommand("verify-cauchy",
                                "reproduction, Taylor/Laurent coefficients, bounds"));
  add_common(app.add_subcommand("verify-split",
                                "algebra laws, frames, splitting round trips"));
  add_common(app.add_subcommand("verify-kernel",
                                "kernel series, closed form, operator case"));
  add_common(app.add_subcommand("verify-zeros",
                                "class quadratic and sphere zero propagation"));
  add_common(app.add_subcommand("verify-all", "every suite above"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  CLI::App* sub = app.get_subcommands().front();
  cfg.command = sub->get_name();

  try {
    if (cfg.command == "eval") {
      if (cfg.input_path.empty())
        throw sclif::ParseError("eval needs --input pointing at a series file");
      const sclif::LaurentSeries series = sclif::parse_series(cfg.input_path);
      if (sub->count("--n") > 0 && cfg.n != series.generators())
        throw sclif::DimensionMismatch(
            "--n " + std::to_string(cfg.n) + " does not match the series file (n = " +
            std::to_string(series.generators()) + ")");
      const sclif::Paravector x =
          sclif::parse_paravector(at_literal, series.generators());
      const sclif::Multivector value = series.eval(x);
      const std::string text = cfg.format == "csv"
                                   ? eval_to_csv(value)
                                   : eval_to_json(cfg, at_literal, value);
      return write_text(cfg.output_path, text) ? 0 : 1;
    }

    // Verification inputs are generated from the seed, but a supplied series
    // file must still parse cleanly.
    if (!cfg.input_path.empty()) (void)sclif::parse_series(cfg.input_path);

    const sclif::Report report = sclif::run_verify(cfg);
    const std::string text = cfg.format == "csv" ? sclif::report_to_csv(report)
                                                 : sclif::report_to_json(report);
    if (!write_text(cfg.output_path, text)) return 1;
    if (report.failed() > 0) {
      std::cerr << report.failed() << " of " << report.checks.size()
                << " checks failed\n";
      return 1;
    }
    return 0;
  } catch (const sclif::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const sclif::DimensionMismatch& e) {
    std::cerr << "dimension mismatch: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gwtail/commands.hpp"
#include "gwtail/error.hpp"

namespace {

gwtail::DistributionConfig case_a() { return gwtail::parse_config(R"({"name": "A", "p": [0, 0.1, 0.5, 0.4]})"); }

gwtail::Errc config_error(const std::string& text) {
  try {
    gwtail::parse_config(text).distribution();
  } catch (const gwtail::Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return gwtail::Errc::InvalidArgument;
}

std::vector<std::vector<double>> read_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line[0] == 'x') continue;
    std::vector<double> row;
    std::istringstream fields(line);
    std::string f;
    while (std::getline(fields, f, ',')) row.push_back(std::strtod(f.c_str(), nullptr));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TEST_CASE("config parsing") {
  const auto cfg = case_a();
  CHECK(cfg.name == "A");
  CHECK(cfg.distribution().degree() == 3);
  CHECK(config_error("{not json") == gwtail::Errc::ConfigError);
  CHECK(config_error(R"({"p": [0, 0.1, 0.9], "colour": 1})") == gwtail::Errc::ConfigError);
  CHECK(config_error(R"({"p": [0, 0.1, 0.9], "tolerances": {"speed": 1}})") == gwtail::Errc::ConfigError);
  CHECK(config_error(R"({"p": "0.1"})") == gwtail::Errc::ConfigError);
  CHECK(config_error(R"({"p": [0.1, 0.2, 0.7]})") == gwtail::Errc::NonzeroP0);
  const auto loose = gwtail::parse_config(R"({"p": [0, 0.1, 0.9000001], "tolerances": {"normalization": 1e-6}})");
  CHECK(loose.distribution().degree() == 2);
  CHECK(gwtail::exit_code_for(gwtail::Error(gwtail::Errc::NonzeroP0, "")) == gwtail::kExitConfigError);
  CHECK(gwtail::exit_code_for(gwtail::Error(gwtail::Errc::AliasingDetected, "")) == gwtail::kExitNumericalError);
}

TEST_CASE("density --method series matches the library") {
  gwtail::DensityOptions opts;
  opts.method = gwtail::DensityMethod::Series;
  opts.n_terms = 2;
  opts.grid = {0.25, 0.75, 3, false};
  std::ostringstream out;
  CHECK(gwtail::cmd_density(case_a(), opts, out) == 0);
  const auto rows = read_csv(out.str());
  REQUIRE(rows.size() == 3);
  const gwtail::TailExpansion expansion(gwtail::PiEvaluator(case_a().distribution()));
  CHECK(rows[1][0] == 0.5);
  CHECK(rows[1][1] == gwtail::density_series(expansion, 0.5, 2));
  CHECK(out.str().rfind("# gwtail ", 0) == 0);
}

TEST_CASE("CSV output round-trips at 17 digits") {
  gwtail::DensityOptions opts;
  opts.grid = {0.1, 2.0, 7, true};
  std::ostringstream out;
  gwtail::cmd_density(case_a(), opts, out);
  const auto rows = read_csv(out.str());
  const gwtail::PiEvaluator ev(case_a().distribution());
  const auto xs = gwtail::log_grid(0.1, 2.0, 7);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    CHECK(rows[i][0] == xs[i]);
    CHECK(rows[i][1] == gwtail::oracle_density(ev, xs[i]));
  }
}

TEST_CASE("simulate is deterministic and reports bins") {
  gwtail::SimulateOptions opts;
  opts.sim.samples = 5000;
  opts.bins = 10;
  opts.profile_points = 41;
  std::ostringstream a, b;
  gwtail::cmd_simulate(case_a(), opts, a);
  gwtail::cmd_simulate(case_a(), opts, b);
  CHECK(a.str() == b.str());
  CHECK(read_csv(a.str()).size() == 10);
  opts.check = true;
  opts.tolerance = 0.0;
  std::ostringstream c;
  CHECK(gwtail::cmd_simulate(case_a(), opts, c) == gwtail::kExitValidationFailed);
}

TEST_CASE("info report") {
  std::ostringstream out;
  gwtail::cmd_info(case_a(), {}, out);
  const auto doc = nlohmann::ordered_json::parse(out.str());
  CHECK(doc["beta"].get<double>() == doctest::Approx(2.764509).epsilon(1e-6));
  CHECK(doc["kappa"].size() == 8);
  CHECK(doc["hypotheses"]["log_ratio_below_minus_one"].get<bool>());
  std::vector<std::string> keys;
  for (const auto& [k, v] : doc.items()) keys.push_back(k);
  CHECK(keys.front() == "name");
  CHECK(keys[4] == "alpha");
}

TEST_CASE("coeffs, vn and julia outputs") {
  std::ostringstream coeffs;
  gwtail::SpectrumOptions spec;
  spec.n_max = 2;
  spec.m_max = 4;
  gwtail::cmd_coeffs(case_a(), spec, coeffs);
  const auto doc = nlohmann::json::parse(coeffs.str());
  CHECK(doc["rows"].size() == 2);
  CHECK(doc["rows"][0]["m"].size() == 9);

  std::ostringstream vn;
  gwtail::VnOptions v;
  v.points = 8;
  gwtail::cmd_vn(case_a(), v, vn);
  const auto rows = read_csv(vn.str());
  CHECK(rows.size() == 8);
  CHECK(rows.back()[0] < 2.3);

  gwtail::JuliaOptions j;
  j.width = 5;
  j.height = 4;
  j.format = gwtail::RasterFormat::Pgm;
  std::ostringstream pgm;
  gwtail::cmd_julia(case_a(), j, pgm);
  CHECK(pgm.str().rfind("P2\n", 0) == 0);
  j.format = gwtail::RasterFormat::Csv;
  std::ostringstream csv;
  gwtail::cmd_julia(case_a(), j, csv);
  CHECK(read_csv(csv.str()).size() == 20);
}

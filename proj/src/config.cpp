#include "gwtail/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gwtail/error.hpp"

namespace gwtail {

namespace {

using json = nlohmann::json;

void reject_unknown(const json& object, std::initializer_list<std::string_view> known,
                    std::string_view where) {
  for (const auto& [key, value] : object.items()) {
    bool ok = false;
    for (auto k : known) ok = ok || key == k;
    if (!ok) throw Error(Errc::ConfigError, "unknown key '" + key + "' in " + std::string(where));
  }
}

}  // namespace

OffspringDistribution DistributionConfig::distribution() const {
  return OffspringDistribution::validate(probabilities, normalization_tol);
}

DistributionConfig parse_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& err) {
    throw Error(Errc::ConfigError, std::string("malformed JSON: ") + err.what());
  }
  if (!doc.is_object()) throw Error(Errc::ConfigError, "config must be a JSON object");
  reject_unknown(doc, {"name", "p", "tolerances"}, "config");

  DistributionConfig cfg;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw Error(Errc::ConfigError, "'name' must be a string");
    cfg.name = doc["name"].get<std::string>();
  }
  if (!doc.contains("p") || !doc["p"].is_array()) {
    throw Error(Errc::ConfigError, "config needs an array 'p' of probabilities indexed by family size");
  }
  for (const auto& v : doc["p"]) {
    if (!v.is_number()) throw Error(Errc::ConfigError, "'p' entries must be numbers");
    cfg.probabilities.push_back(v.get<double>());
  }
  if (doc.contains("tolerances")) {
    const auto& tol = doc["tolerances"];
    if (!tol.is_object()) throw Error(Errc::ConfigError, "'tolerances' must be an object");
    reject_unknown(tol, {"normalization"}, "tolerances");
    if (tol.contains("normalization")) {
      if (!tol["normalization"].is_number()) throw Error(Errc::ConfigError, "normalization tolerance must be a number");
      cfg.normalization_tol = tol["normalization"].get<double>();
      if (!(cfg.normalization_tol > 0.0 && cfg.normalization_tol < 1e-3)) {
        throw Error(Errc::ConfigError, "normalization tolerance must lie in (0, 1e-3)");
      }
    }
  }
  return cfg;
}

DistributionConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ConfigError, "cannot open config file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

}  // namespace gwtail

#include "swaybeam/config_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace swaybeam {

namespace {

using nlohmann::json;

[[noreturn]] void bad_key(const std::string& key, const std::string& why) {
  throw std::invalid_argument("config key '" + key + "': " + why);
}

template <typename T>
void read_scalar(const json& j, const char* key, T& out) {
  if (!j.contains(key)) return;
  const json& v = j.at(key);
  if constexpr (std::is_same_v<T, std::uint64_t>) {
    if (!v.is_number_unsigned() && !v.is_number_integer()) bad_key(key, "expected an integer");
  } else if constexpr (std::is_integral_v<T>) {
    if (!v.is_number_integer()) bad_key(key, "expected an integer");
  } else {
    if (!v.is_number()) bad_key(key, "expected a number");
  }
  out = v.get<T>();
}

void read_sector(const json& j, const char* key, double& lo, double& hi) {
  if (!j.contains(key)) return;
  const json& v = j.at(key);
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    bad_key(key, "expected [min_deg, max_deg]");
  }
  lo = v[0].get<double>();
  hi = v[1].get<double>();
}

void read_bounds(const json& j, const char* key, DisplacementBounds& out) {
  if (!j.contains(key)) return;
  const json& v = j.at(key);
  if (v.is_number()) {
    const double b = v.get<double>();
    out = {b, b, b, b};
    return;
  }
  if (!v.is_object()) bad_key(key, "expected a number or {x_west, x_east, y_south, y_north}");
  for (const auto& [sub, val] : v.items()) {
    if (!val.is_number()) bad_key(std::string(key) + "." + sub, "expected a number");
    if (sub == "x_west") out.x_west = val.get<double>();
    else if (sub == "x_east") out.x_east = val.get<double>();
    else if (sub == "y_south") out.y_south = val.get<double>();
    else if (sub == "y_north") out.y_north = val.get<double>();
    else bad_key(std::string(key) + "." + sub, "unknown key");
  }
}

void read_sweep(const json& j, const char* key, std::vector<double>& out) {
  if (!j.contains(key)) return;
  const json& v = j.at(key);
  if (v.is_array()) {
    out.clear();
    for (const auto& e : v) {
      if (!e.is_number()) bad_key(key, "expected numbers");
      out.push_back(e.get<double>());
    }
    return;
  }
  if (v.is_object() && v.contains("start") && v.contains("step") && v.contains("stop")) {
    const double start = v.at("start").get<double>();
    const double step = v.at("step").get<double>();
    const double stop = v.at("stop").get<double>();
    if (step <= 0.0) bad_key(key, "step must be positive");
    out.clear();
    for (double g = start; g <= stop + 1e-9; g += step) out.push_back(g);
    return;
  }
  bad_key(key, "expected a list of dB values or {start, step, stop}");
}

void read_variants(const json& j, const char* key, std::vector<MethodVariant>& out) {
  if (!j.contains(key)) return;
  const json& v = j.at(key);
  if (!v.is_array() || v.empty()) bad_key(key, "expected a non-empty list of variant names");
  out.clear();
  for (const auto& e : v) {
    if (!e.is_string()) bad_key(key, "expected variant names as strings");
    out.push_back(variant_from_name(e.get<std::string>()));
  }
}

SimulationConfig from_json(const json& j) {
  SimulationConfig cfg;
  static const char* known[] = {
      "d1_m",        "pathloss_exponent", "num_trials",       "num_paths", "kappa_db",
      "n_a",         "n_b",               "q_bits",           "element_spacing",
      "sector_a_deg", "sector_b_deg",     "sway_a_m",         "sway_b_m",  "tx_snr_db",
      "gamma_o_sweep_db", "seed",         "variants",         "workers",
  };
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) bad_key(key, "unknown key");
  }
  read_scalar(j, "d1_m", cfg.d1);
  read_scalar(j, "pathloss_exponent", cfg.pathloss_exponent);
  read_scalar(j, "num_trials", cfg.num_trials);
  read_scalar(j, "num_paths", cfg.num_paths);
  read_scalar(j, "kappa_db", cfg.kappa_db);
  read_scalar(j, "n_a", cfg.n_a);
  read_scalar(j, "n_b", cfg.n_b);
  read_scalar(j, "q_bits", cfg.q_bits);
  read_scalar(j, "element_spacing", cfg.element_spacing);
  read_sector(j, "sector_a_deg", cfg.sector_a_min_deg, cfg.sector_a_max_deg);
  read_sector(j, "sector_b_deg", cfg.sector_b_min_deg, cfg.sector_b_max_deg);
  read_bounds(j, "sway_a_m", cfg.sway_a);
  read_bounds(j, "sway_b_m", cfg.sway_b);
  read_scalar(j, "tx_snr_db", cfg.tx_snr_db);
  read_sweep(j, "gamma_o_sweep_db", cfg.gamma_o_db);
  read_scalar(j, "seed", cfg.seed);
  read_variants(j, "variants", cfg.variants);
  read_scalar(j, "workers", cfg.num_workers);
  cfg.validate();
  return cfg;
}

std::string fmt6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", value);
  return buf;
}

}  // namespace

MethodVariant variant_from_name(const std::string& name) {
  if (name == "no_action") return MethodVariant::NoAction;
  if (name == "a1") return MethodVariant::A1Only;
  if (name == "a1b") return MethodVariant::A1B;
  if (name == "a1ba2") return MethodVariant::A1BA2;
  if (name == "exhaustive") return MethodVariant::ExhaustiveSearch;
  if (name == "optimal") return MethodVariant::OptimalBF;
  throw std::invalid_argument("unknown variant '" + name +
                              "' (expected no_action, a1, a1b, a1ba2, exhaustive or optimal)");
}

SimulationConfig parse_config_text(const std::string& text) {
  std::string trimmed = text;
  const auto first = trimmed.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return SimulationConfig{};  // empty file: all defaults
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("config root must be a JSON object");
  return from_json(j);
}

SimulationConfig parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

void emit_results(const AggregateMetrics& metrics, const SimulationConfig& cfg, std::ostream& out) {
  out << "gamma_o_db";
  const auto columns = {"op", "mean_snr_db", "snr_ratio", "mean_ctrl_msgs", "cond_ctrl_msgs",
                        "max_ctrl_msgs"};
  for (const char* col : columns) {
    for (MethodVariant v : metrics.variants) out << "," << col << "_" << variant_name(v);
  }
  out << "\n";
  for (std::size_t gi = 0; gi < metrics.gamma_o_db.size(); ++gi) {
    out << fmt6(metrics.gamma_o_db[gi]);
    for (std::size_t vi = 0; vi < metrics.variants.size(); ++vi)
      out << "," << fmt6(metrics.lanes[vi][gi].outage_probability);
    for (std::size_t vi = 0; vi < metrics.variants.size(); ++vi)
      out << "," << fmt6(10.0 * std::log10(metrics.lanes[vi][gi].mean_snr));
    for (std::size_t vi = 0; vi < metrics.variants.size(); ++vi)
      out << "," << fmt6(metrics.lanes[vi][gi].snr_ratio);
    for (std::size_t vi = 0; vi < metrics.variants.size(); ++vi)
      out << "," << fmt6(metrics.lanes[vi][gi].mean_messages);
    for (std::size_t vi = 0; vi < metrics.variants.size(); ++vi)
      out << "," << fmt6(metrics.lanes[vi][gi].cond_mean_messages);
    for (std::size_t vi = 0; vi < metrics.variants.size(); ++vi)
      out << "," << fmt6(static_cast<double>(metrics.lanes[vi][gi].max_messages));
    out << "\n";
  }
}

void emit_results(const AggregateMetrics& metrics, const SimulationConfig& cfg,
                  const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
  emit_results(metrics, cfg, out);
  out.flush();
  if (!out) throw std::runtime_error("failed writing output file '" + path + "'");
}

}  // namespace swaybeam

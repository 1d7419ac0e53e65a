// Command-line front end: load a config, run the Monte Carlo sweep, write CSV.

#include <CLI11.hpp>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "swaybeam/config_io.hpp"

namespace {

std::vector<double> parse_sweep_spec(const std::string& spec) {
  double start = 0.0, step = 0.0, stop = 0.0;
  char c1 = 0, c2 = 0;
  std::istringstream in(spec);
  if (!(in >> start >> c1 >> step >> c2 >> stop) || c1 != ':' || c2 != ':' || step <= 0.0) {
    throw std::invalid_argument("--sweep expects start:step:stop in dB with step > 0");
  }
  std::vector<double> out;
  for (double g = start; g <= stop + 1e-9; g += step) out.push_back(g);
  if (out.empty()) throw std::invalid_argument("--sweep produced an empty threshold list");
  return out;
}

std::vector<swaybeam::MethodVariant> parse_variant_list(const std::string& list) {
  std::vector<swaybeam::MethodVariant> out;
  std::istringstream in(list);
  std::string name;
  while (std::getline(in, name, ',')) {
    if (!name.empty()) out.push_back(swaybeam::variant_from_name(name));
  }
  if (out.empty()) throw std::invalid_argument("--variants produced an empty list");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monte Carlo outage simulator for position-aided mmWave beam alignment"};

  std::string config_path;
  std::string out_path = "results.csv";
  std::string sweep_spec;
  std::string variant_list;
  std::uint64_t seed = 0;
  int trials = 0;
  app.add_option("--config", config_path, "JSON config file (omit for defaults)");
  app.add_option("--out", out_path, "Output CSV path")->capture_default_str();
  app.add_option("--seed", seed, "Master seed override");
  app.add_option("--trials", trials, "Trial-count override");
  app.add_option("--variants", variant_list,
                 "Comma-separated variants (no_action,a1,a1b,a1ba2,exhaustive,optimal)");
  app.add_option("--sweep", sweep_spec, "Threshold sweep override, start:step:stop in dB");

  CLI11_PARSE(app, argc, argv);

  try {
    swaybeam::SimulationConfig cfg =
        config_path.empty() ? swaybeam::SimulationConfig{} : swaybeam::parse_config(config_path);
    if (app.count("--seed")) cfg.seed = seed;
    if (app.count("--trials")) cfg.num_trials = trials;
    if (!variant_list.empty()) cfg.variants = parse_variant_list(variant_list);
    if (!sweep_spec.empty()) cfg.gamma_o_db = parse_sweep_spec(sweep_spec);
    cfg.validate();

    const swaybeam::AggregateMetrics metrics = swaybeam::run_simulation(cfg);
    swaybeam::emit_results(metrics, cfg, out_path);

    std::cout << "wrote " << out_path << " (" << metrics.gamma_o_db.size() << " thresholds, "
              << metrics.variants.size() << " variants, " << cfg.num_trials << " trials)\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

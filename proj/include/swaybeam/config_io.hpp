#pragma once

#include <iosfwd>
#include <string>

#include "swaybeam/montecarlo.hpp"

namespace swaybeam {

// Reads a JSON config file. Every key is optional; an empty file (or empty
// object) yields the default configuration. Unknown or ill-typed keys and
// out-of-range values raise std::invalid_argument naming the key.
SimulationConfig parse_config(const std::string& path);
SimulationConfig parse_config_text(const std::string& text);

MethodVariant variant_from_name(const std::string& name);

// Writes the sweep results as CSV: one row per gamma_o, per-variant columns
// for outage probability, mean SNR (dB), SNR ratio versus optimal BF, and
// mean / misalignment-conditional / maximum control messages. Values carry
// 6 significant digits; reruns with the same config are byte-identical.
void emit_results(const AggregateMetrics& metrics, const SimulationConfig& cfg,
                  const std::string& path);
void emit_results(const AggregateMetrics& metrics, const SimulationConfig& cfg, std::ostream& out);

}  // namespace swaybeam

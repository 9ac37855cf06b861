#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "decomp/diagnostics.hpp"
#include "decomp/gibbs.hpp"
#include "decomp/plugin.hpp"
#include "decomp/types.hpp"

namespace decomp {

// shortest representation that round-trips through strtod
std::string format_double(double v);

// data CSV: header "delta,z", UTF-8, decimal point, no separators
void write_increment_csv(const IncrementData& data, const std::filesystem::path& path);
IncrementData read_increment_csv(const std::filesystem::path& path);

// draws CSV: header nu_1..nu_m, one row per retained iteration
void write_samples_csv(const PosteriorSamples& samples, const std::filesystem::path& path);

struct LoadedSamples {
  std::size_t rows = 0;
  std::size_t m = 0;
  std::vector<double> draws;
};
LoadedSamples read_samples_csv(const std::filesystem::path& path);

// summary CSV: header k,mean,lo,hi
void write_summary_csv(const std::vector<CoordinateSummary>& summary,
                       const std::filesystem::path& path);

void write_json(const nlohmann::json& j, const std::filesystem::path& path);

nlohmann::json samples_metadata(const PosteriorSamples& samples);

}  // namespace decomp

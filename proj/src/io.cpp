#include "decomp/io.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

namespace decomp {

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::io_error, "cannot write " + path.string());
  return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "cannot read " + path.string());
  return in;
}

double parse_double(const std::string& field, const std::filesystem::path& path) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(field.c_str(), &end);
  if (end == field.c_str() || *end != '\0' || errno == ERANGE) {
    throw Error(Errc::bad_input, path.string() + ": bad number '" + field + "'");
  }
  return v;
}

std::int64_t parse_int(const std::string& field, const std::filesystem::path& path) {
  errno = 0;
  char* end = nullptr;
  const long long v = std::strtoll(field.c_str(), &end, 10);
  if (end == field.c_str() || *end != '\0' || errno == ERANGE) {
    throw Error(Errc::bad_input,
                path.string() + ": increment '" + field + "' is not an integer");
  }
  return v;
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_increment_csv(const IncrementData& data, const std::filesystem::path& path) {
  auto out = open_out(path);
  out << "delta,z\n";
  for (const auto& r : data.records()) {
    out << format_double(r.delta) << ',' << r.z << '\n';
  }
}

IncrementData read_increment_csv(const std::filesystem::path& path) {
  auto in = open_in(path);
  std::string line;
  if (!std::getline(in, line) || line.rfind("delta,z", 0) != 0) {
    throw Error(Errc::bad_input, path.string() + ": expected header 'delta,z'");
  }
  std::vector<IncrementRecord> records;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw Error(Errc::bad_input, path.string() + ": malformed row '" + line + "'");
    }
    const double delta = parse_double(line.substr(0, comma), path);
    const std::int64_t z = parse_int(line.substr(comma + 1), path);
    records.push_back({delta, z});
  }
  return IncrementData(std::move(records));
}

void write_samples_csv(const PosteriorSamples& samples, const std::filesystem::path& path) {
  auto out = open_out(path);
  for (std::size_t k = 1; k <= samples.m; ++k) {
    out << "nu_" << k << (k == samples.m ? '\n' : ',');
  }
  for (std::size_t r = 0; r < samples.rows; ++r) {
    const auto row = samples.row(r);
    for (std::size_t k = 0; k < samples.m; ++k) {
      out << format_double(row[k]) << (k + 1 == samples.m ? '\n' : ',');
    }
  }
}

LoadedSamples read_samples_csv(const std::filesystem::path& path) {
  auto in = open_in(path);
  std::string line;
  if (!std::getline(in, line) || line.rfind("nu_1", 0) != 0) {
    throw Error(Errc::bad_input, path.string() + ": expected draws header nu_1,..");
  }
  LoadedSamples out;
  out.m = static_cast<std::size_t>(std::count(line.begin(), line.end(), ',')) + 1;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream row(line);
    std::string field;
    std::size_t fields = 0;
    while (std::getline(row, field, ',')) {
      out.draws.push_back(parse_double(field, path));
      ++fields;
    }
    if (fields != out.m) {
      throw Error(Errc::bad_input, path.string() + ": ragged row in draws CSV");
    }
    ++out.rows;
  }
  if (out.rows == 0) throw Error(Errc::bad_input, path.string() + ": no draws");
  return out;
}

void write_summary_csv(const std::vector<CoordinateSummary>& summary,
                       const std::filesystem::path& path) {
  auto out = open_out(path);
  out << "k,mean,lo,hi\n";
  for (std::size_t k = 0; k < summary.size(); ++k) {
    out << (k + 1) << ',' << format_double(summary[k].mean) << ','
        << format_double(summary[k].lower) << ',' << format_double(summary[k].upper) << '\n';
  }
}

void write_json(const nlohmann::json& j, const std::filesystem::path& path) {
  auto out = open_out(path);
  out << j.dump(2) << '\n';
}

nlohmann::json samples_metadata(const PosteriorSamples& samples) {
  return nlohmann::json{
      {"m", samples.m},
      {"a", samples.prior.a},
      {"c", samples.prior.c},
      {"iterations", samples.config.iterations},
      {"burn_in", samples.config.burn_in},
      {"thin", samples.config.thin},
      {"seed", samples.config.seed},
      {"pi_neighbor", samples.config.proposal.pi_neighbor},
      {"sweeps", samples.config.sweeps},
      {"threads", samples.config.threads},
      {"retained_rows", samples.rows},
      {"dataset_digest", samples.dataset_digest},
      {"runtime_seconds", samples.runtime_seconds},
      {"percentile_method", "linear-type7"},
  };
}

}  // namespace decomp

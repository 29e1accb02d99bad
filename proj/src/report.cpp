#include "grig/report.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace grig {

ExperimentSummary summarize(const spectra::SpectralData& sd, std::int64_t level, double epsilon,
                            std::optional<double> ids_sup_diff) {
  spectra::MeasureEstimate me = spectra::measure_estimate(sd, epsilon);
  ExperimentSummary s;
  s.params = sd.params;
  s.level = level;
  s.size = sd.size();
  s.min = sd.eigenvalues[0];
  s.max = sd.eigenvalues[sd.size() - 1];
  s.gap_count = me.interval_count - 1;
  s.cover_length = me.cover_length;
  s.epsilon = epsilon;
  s.ids_sup_diff = ids_sup_diff;
  return s;
}

std::string to_json(const ExperimentSummary& s) {
  nlohmann::json j;
  j["params"] = {{"t", s.params.t}, {"u", s.params.u}, {"v", s.params.v}, {"w", s.params.w}};
  j["level"] = s.level;
  j["size"] = s.size;
  j["min"] = s.min;
  j["max"] = s.max;
  j["gap_count"] = s.gap_count;
  j["cover_length"] = s.cover_length;
  j["epsilon"] = s.epsilon;
  if (s.ids_sup_diff) j["ids_sup_diff"] = *s.ids_sup_diff;
  else j["ids_sup_diff"] = nullptr;
  return j.dump(2);
}

ExperimentSummary summary_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  ExperimentSummary s;
  s.params.t = j.at("params").at("t").get<double>();
  s.params.u = j.at("params").at("u").get<double>();
  s.params.v = j.at("params").at("v").get<double>();
  s.params.w = j.at("params").at("w").get<double>();
  s.level = j.at("level").get<std::int64_t>();
  s.size = j.at("size").get<std::int64_t>();
  s.min = j.at("min").get<double>();
  s.max = j.at("max").get<double>();
  s.gap_count = j.at("gap_count").get<std::int64_t>();
  s.cover_length = j.at("cover_length").get<double>();
  s.epsilon = j.at("epsilon").get<double>();
  if (!j.at("ids_sup_diff").is_null()) s.ids_sup_diff = j.at("ids_sup_diff").get<double>();
  return s;
}

void write_file_atomic(const std::string& path, const std::string& contents) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("write_file_atomic: cannot open " + tmp);
    os << contents;
    if (!os.flush()) {
      std::remove(tmp.c_str());
      throw std::runtime_error("write_file_atomic: write failed for " + tmp);
    }
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("write_file_atomic: rename failed for " + path);
  }
}

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace grig

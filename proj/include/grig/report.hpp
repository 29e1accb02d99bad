#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "grig/spectra.hpp"

namespace grig {

/// One experiment summary; serialized as a JSON object with keys
/// params{t,u,v,w}, level, size, min, max, gap_count, cover_length,
/// epsilon, ids_sup_diff (null when not applicable).
struct ExperimentSummary {
  spectra::Params params;
  std::int64_t level = 0;
  std::int64_t size = 0;
  double min = 0;
  double max = 0;
  std::int64_t gap_count = 0;
  double cover_length = 0;
  double epsilon = 0;
  std::optional<double> ids_sup_diff;
};

ExperimentSummary summarize(const spectra::SpectralData& sd, std::int64_t level, double epsilon,
                            std::optional<double> ids_sup_diff = std::nullopt);

std::string to_json(const ExperimentSummary& s);
ExperimentSummary summary_from_json(const std::string& text);

/// Writes via a temp file in the target directory and renames into place,
/// so failed runs leave no partial output.
void write_file_atomic(const std::string& path, const std::string& contents);

/// %.17g formatting used for all floating-point text output.
std::string fmt17(double x);

}  // namespace grig

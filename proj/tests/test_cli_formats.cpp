#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "grig/report.hpp"
#include "grig/spectra.hpp"

using namespace grig;

namespace {

spectra::SpectralData sample_spectrum() {
  spectra::TridiagonalOperator op;
  op.diag = Eigen::Vector2d(3, 3);
  op.offdiag = Eigen::VectorXd::Constant(1, 1.0);
  spectra::SpectralData sd = spectra::eigenvalues(op, 1e-13);
  sd.params = spectra::Params{1, 1, 1, 1};
  sd.provenance = "graph level 1";
  return sd;
}

}  // namespace

TEST_CASE("experiment summaries") {
  spectra::SpectralData sd = sample_spectrum();
  ExperimentSummary s = summarize(sd, 1, 0.5, 0.0);
  CHECK(s.size == 2);
  CHECK(s.min == doctest::Approx(2.0));
  CHECK(s.max == doctest::Approx(4.0));
  CHECK(s.gap_count == 1);  // eigenvalues 2 and 4 give two disjoint 0.5-intervals
  CHECK(s.cover_length == doctest::Approx(2.0));
}

TEST_CASE("JSON summaries round-trip byte-identically") {
  spectra::SpectralData sd = sample_spectrum();
  for (auto sup : {std::optional<double>{}, std::optional<double>{0.03125}}) {
    ExperimentSummary s = summarize(sd, 1, 1.0 / 3.0, sup);
    std::string text = to_json(s);
    ExperimentSummary parsed = summary_from_json(text);
    CHECK(to_json(parsed) == text);
  }
}

TEST_CASE("atomic writes leave no temp file") {
  std::string path = "cli_format_test_output.json";
  write_file_atomic(path, "{}\n");
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == "{}\n");
  std::ifstream tmp(path + ".tmp");
  CHECK_FALSE(tmp.good());
  std::remove(path.c_str());
}

TEST_CASE("fmt17 pins doubles exactly") {
  CHECK(fmt17(2.0) == "2");
  double val = 0.1 + 0.2;
  double back = std::strtod(fmt17(val).c_str(), nullptr);
  CHECK(back == val);
}

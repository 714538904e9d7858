#pragma once

// Plain key=value experiment configuration and CSV report output.

#include <fstream>
#include <string>
#include <vector>

#include "hlp/lab.hpp"

namespace hlp {

// Keys: group.kind, group.m, z.<i>.x, z.<i>.y, experiment.kind, grid.min,
// grid.max, grid.step, strip.E, strip.A, strip.B, box.mode, params.qhat,
// params.tauhat, out.path, threads. Lists are comma separated; strip.E is
// 1-based. '#' starts a comment. Throws ParseError with the line number.
ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig parse_config(const std::string& path);
std::string to_config_text(const ExperimentConfig& cfg);

inline constexpr const char* kCsvHeader = "T,count,main_term,ratio,excess,n_of_z,near_boundary,wall_s";

std::string csv_row(const CountReport& r);

class CsvWriter {
 public:
  // Throws IoError if the file cannot be opened.
  explicit CsvWriter(const std::string& path);
  void write(const CountReport& r);

 private:
  std::ofstream out_;
};

void write_csv(const std::vector<CountReport>& reports, const std::string& path);

}  // namespace hlp

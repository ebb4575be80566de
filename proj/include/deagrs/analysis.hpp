#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "deagrs/dataset.hpp"
#include "deagrs/ram.hpp"
#include "deagrs/rts.hpp"

namespace deagrs {

enum class OutputFormat { json, csv, table };

struct AnalysisConfig {
  WeightScheme scheme = WeightScheme::ram;
  Regime regime = Regime::vrs;
  Tolerances tol;
  OutputFormat output_format = OutputFormat::table;
  /// Empty means every unit, in dataset order.
  std::vector<std::string> dmu_filter;
  bool run_grs = true;
  bool run_rts = true;  // ignored under crs; implies run_grs
};

struct ReferenceWeight {
  std::string name;
  double weight = 0.0;
};

struct GrsReport {
  std::vector<ReferenceWeight> members;
  std::vector<double> projected_inputs;
  std::vector<double> projected_outputs;
  std::size_t minimum_face_dimension = 0;
};

struct RtsReport {
  RtsClass rts_class = RtsClass::constant;
  double omega_min = 0.0;
  double omega_max = 0.0;
};

struct DmuReport {
  std::string name;
  WeightScheme scheme = WeightScheme::ram;
  double rho = 1.0;  // raw objective for additive / bam
  double slack_sum = 0.0;
  bool efficient = true;
  std::optional<GrsReport> grs;
  std::optional<RtsReport> rts;
  /// Set when the RTS stage ran but the point admits no normalization.
  std::optional<std::string> rts_unavailable;
};

/// Parses the `dmu,in:<label>,...,out:<label>,...` CSV format.
Dataset parse_dataset(std::string_view text);
Dataset load_dataset(const std::filesystem::path& path);

/// Throws DataError when a filter name is not in the dataset.
std::vector<DmuReport> run_analysis(const AnalysisConfig& config, const Dataset& data);

std::string render_report(const std::vector<DmuReport>& reports, OutputFormat format);

}  // namespace deagrs

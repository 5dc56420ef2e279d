#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "ebell/entropy.hpp"
#include "ebell/inequality.hpp"

namespace ebell {

enum class CheckKind { wigner, matrix, entropic, cerf_adami };
std::string_view to_string(CheckKind kind);
// Accepts the canonical names plus a few aliases ("wigner_prob", "entropy",
// "cerf-adami", "cerf").
CheckKind parse_check_kind(std::string_view text);

enum class OutputFormat { csv, json };
std::string_view to_string(OutputFormat format);
OutputFormat parse_format(std::string_view text);

inline constexpr double kDefaultStep = kPi / 36.0;
inline constexpr std::size_t kMaxGridPoints = 100'000'000;

// Grid start + k * step over an interval whose ends may be open or closed.
// A stop value within 1e-9 steps of a grid point counts as lying on it.
struct AngleRange {
  double start = 0.0;
  double stop = kTwoPi;
  double step = kDefaultStep;
  bool include_start = true;
  bool include_stop = false;

  static AngleRange single(double value);

  // Throws ConfigError for a non-positive step, start > stop or non-finite
  // bounds.
  void validate() const;
  std::size_t size() const;
  double at(std::size_t i) const;
};

struct ScanConfig {
  CheckKind kind = CheckKind::matrix;
  std::array<AngleRange, 3> ranges{};
  SignTriple signs = kAllPlus;
  MatrixMode mode = MatrixMode::entrywise;
  Units units = Units::nats;
  // cerf_adami only: theta_ac = theta_ab + theta_bc and ranges[2] is unused.
  bool coplanar = false;
  // matrix only: common out-of-plane phase.
  double alpha = 0.0;
  OutputFormat format = OutputFormat::csv;

  // Number of independent grid axes (2 for coplanar cerf_adami, else 3).
  std::size_t dimensions() const;
  std::size_t total_points() const;
  // Throws ConfigError.
  void validate() const;
};

enum class RecordStatus { ok, not_comparable };
std::string_view to_string(RecordStatus status);

struct ScanRecord {
  std::array<std::size_t, 3> index{};
  std::array<double, 3> angles{};
  RecordStatus status = RecordStatus::ok;
  // For not_comparable records only kind and inputs are meaningful.
  IneqVerdict verdict;
};

struct Extremum {
  double margin = 0.0;
  std::array<double, 3> angles{};
};

struct ScanSummary {
  std::size_t total_points = 0;
  std::size_t violations = 0;
  std::size_t not_comparable = 0;
  std::optional<Extremum> worst_violation;
  std::optional<Extremum> largest_hold_margin;

  void add(const ScanRecord& record);
};

// Evaluate the configured check at one grid point.
ScanRecord evaluate_point(const ScanConfig& config, const std::array<std::size_t, 3>& index);

using RecordSink = std::function<void(const ScanRecord&)>;

// Evaluates every grid point, handing records to `sink` in lexicographic
// index order. `threads` == 0 picks the hardware concurrency; the record
// stream does not depend on it.
ScanSummary run_scan(const ScanConfig& config, const RecordSink& sink, unsigned threads = 0);

struct ScanResult {
  std::vector<ScanRecord> records;
  ScanSummary summary;
};

ScanResult collect_scan(const ScanConfig& config, unsigned threads = 0);

}  // namespace ebell

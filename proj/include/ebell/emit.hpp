#pragma once

#include <memory>
#include <ostream>
#include <span>
#include <string>

#include "ebell/scan.hpp"

namespace ebell {

// Shortest text that prints a double with 17 significant digits.
std::string format_number(double x);

// Row-major JSON array of [re, im] pairs.
std::string matrix_json(const GeneralMatrix& m);

// Streaming writer for scan output. Records must arrive in grid order; end()
// writes the trailing newline. Stream failures raise IoError.
class ScanWriter {
 public:
  virtual ~ScanWriter() = default;
  virtual void begin(const ScanConfig& config) = 0;
  virtual void record(const ScanRecord& record) = 0;
  virtual void end(const ScanSummary& summary) = 0;
};

// Columns: kind, beta_a, beta_b, beta_c, sign_a, sign_b, sign_c, mode, holds,
// worst_margin, margin_0..margin_3, status. The summary is not part of CSV.
std::unique_ptr<ScanWriter> make_csv_writer(std::ostream& out);

// {"config": {...}, "records": [...], "summary": {...}}
std::unique_ptr<ScanWriter> make_json_writer(std::ostream& out);

std::unique_ptr<ScanWriter> make_writer(OutputFormat format, std::ostream& out);

void emit(const ScanConfig& config, std::span<const ScanRecord> records,
          const ScanSummary& summary, OutputFormat format, std::ostream& out);

extern const char* const kCsvHeader;

// JSON object describing a single verdict (used by `check`).
std::string verdict_json(const IneqVerdict& verdict);

}  // namespace ebell

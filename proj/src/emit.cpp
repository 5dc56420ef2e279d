#include "ebell/emit.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "ebell/errors.hpp"

namespace ebell {

const char* const kCsvHeader =
    "kind,beta_a,beta_b,beta_c,sign_a,sign_b,sign_c,mode,holds,worst_margin,"
    "margin_0,margin_1,margin_2,margin_3,status";

namespace {

void check_stream(const std::ostream& out) {
  if (!out) throw IoError("failed to write scan output");
}

std::string json_number(double x) { return std::isfinite(x) ? format_number(x) : "null"; }

std::string json_string(std::string_view s) { return "\"" + std::string(s) + "\""; }

bool has_signs(const ScanRecord& r) { return r.verdict.inputs.signs.has_value(); }

class CsvWriter final : public ScanWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  void begin(const ScanConfig&) override {
    out_ << kCsvHeader << '\n';
    check_stream(out_);
  }

  void record(const ScanRecord& r) override {
    const IneqVerdict& v = r.verdict;
    const bool ok = r.status == RecordStatus::ok;
    std::string line;
    line.reserve(256);
    line += to_string(v.kind);
    for (double a : r.angles) {
      line += ',';
      line += format_number(a);
    }
    for (int i = 0; i < 3; ++i) {
      line += ',';
      if (has_signs(r)) line += to_string((*v.inputs.signs)[i]);
    }
    line += ',';
    if (v.inputs.mode) line += to_string(*v.inputs.mode);
    line += ',';
    if (ok) line += v.holds ? "true" : "false";
    line += ',';
    if (ok) line += format_number(v.worst_margin);
    for (std::size_t i = 0; i < 4; ++i) {
      line += ',';
      if (ok && i < v.margins.size()) line += format_number(v.margins[i]);
    }
    line += ',';
    line += to_string(r.status);
    out_ << line << '\n';
    check_stream(out_);
  }

  void end(const ScanSummary&) override {
    out_.flush();
    check_stream(out_);
  }

 private:
  std::ostream& out_;
};

std::string range_json(const AngleRange& r) {
  std::ostringstream s;
  s << "{\"start\": " << format_number(r.start) << ", \"stop\": " << format_number(r.stop)
    << ", \"step\": " << format_number(r.step)
    << ", \"include_start\": " << (r.include_start ? "true" : "false")
    << ", \"include_stop\": " << (r.include_stop ? "true" : "false")
    << ", \"points\": " << r.size() << "}";
  return s.str();
}

std::string config_json(const ScanConfig& c) {
  std::ostringstream s;
  s << "{\"kind\": " << json_string(to_string(c.kind)) << ", \"ranges\": [";
  for (std::size_t d = 0; d < c.dimensions(); ++d) {
    if (d) s << ", ";
    s << range_json(c.ranges[d]);
  }
  s << "], \"signs\": [";
  for (int i = 0; i < 3; ++i) s << (i ? ", " : "") << json_string(to_string(c.signs[i]));
  s << "], \"mode\": " << json_string(to_string(c.mode))
    << ", \"units\": " << json_string(to_string(c.units))
    << ", \"coplanar\": " << (c.coplanar ? "true" : "false")
    << ", \"alpha\": " << format_number(c.alpha) << "}";
  return s.str();
}

std::string extremum_json(const std::optional<Extremum>& e) {
  if (!e) return "null";
  return "{\"margin\": " + format_number(e->margin) + ", \"angles\": [" +
         format_number(e->angles[0]) + ", " + format_number(e->angles[1]) + ", " +
         format_number(e->angles[2]) + "]}";
}

std::string record_json(const ScanRecord& r) {
  const IneqVerdict& v = r.verdict;
  const bool ok = r.status == RecordStatus::ok;
  std::ostringstream s;
  s << "{\"index\": [" << r.index[0] << ", " << r.index[1] << ", " << r.index[2] << "]"
    << ", \"kind\": " << json_string(to_string(v.kind))
    << ", \"beta_a\": " << format_number(r.angles[0])
    << ", \"beta_b\": " << format_number(r.angles[1])
    << ", \"beta_c\": " << format_number(r.angles[2]);
  static constexpr const char* kSignKeys[] = {"sign_a", "sign_b", "sign_c"};
  for (int i = 0; i < 3; ++i) {
    s << ", \"" << kSignKeys[i] << "\": "
      << (has_signs(r) ? json_string(to_string((*v.inputs.signs)[i])) : "null");
  }
  s << ", \"mode\": " << (v.inputs.mode ? json_string(to_string(*v.inputs.mode)) : "null")
    << ", \"holds\": " << (ok ? (v.holds ? "true" : "false") : "null")
    << ", \"worst_margin\": " << (ok ? json_number(v.worst_margin) : "null");
  for (std::size_t i = 0; i < 4; ++i) {
    s << ", \"margin_" << i << "\": "
      << (ok && i < v.margins.size() ? json_number(v.margins[i]) : "null");
  }
  s << ", \"status\": " << json_string(to_string(r.status)) << "}";
  return s.str();
}

class JsonWriter final : public ScanWriter {
 public:
  explicit JsonWriter(std::ostream& out) : out_(out) {}

  void begin(const ScanConfig& config) override {
    out_ << "{\"config\": " << config_json(config) << ",\n\"records\": [";
    check_stream(out_);
  }

  void record(const ScanRecord& r) override {
    out_ << (first_ ? "\n" : ",\n") << record_json(r);
    first_ = false;
    check_stream(out_);
  }

  void end(const ScanSummary& summary) override {
    out_ << (first_ ? "],\n" : "\n],\n") << "\"summary\": {\"total_points\": "
         << summary.total_points << ", \"violations\": " << summary.violations
         << ", \"not_comparable\": " << summary.not_comparable
         << ", \"worst_violation\": " << extremum_json(summary.worst_violation)
         << ", \"largest_hold_margin\": " << extremum_json(summary.largest_hold_margin)
         << "}}\n";
    out_.flush();
    check_stream(out_);
  }

 private:
  std::ostream& out_;
  bool first_ = true;
};

}  // namespace

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string matrix_json(const GeneralMatrix& m) {
  std::string s = "[";
  for (int i = 0; i < 2; ++i) {
    s += i ? ", [" : "[";
    for (int j = 0; j < 2; ++j) {
      if (j) s += ", ";
      s += "[" + json_number(m(i, j).real()) + ", " + json_number(m(i, j).imag()) + "]";
    }
    s += "]";
  }
  return s + "]";
}

std::unique_ptr<ScanWriter> make_csv_writer(std::ostream& out) {
  return std::make_unique<CsvWriter>(out);
}

std::unique_ptr<ScanWriter> make_json_writer(std::ostream& out) {
  return std::make_unique<JsonWriter>(out);
}

std::unique_ptr<ScanWriter> make_writer(OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::csv) return make_csv_writer(out);
  return make_json_writer(out);
}

void emit(const ScanConfig& config, std::span<const ScanRecord> records,
          const ScanSummary& summary, OutputFormat format, std::ostream& out) {
  auto writer = make_writer(format, out);
  writer->begin(config);
  for (const ScanRecord& r : records) writer->record(r);
  writer->end(summary);
}

std::string verdict_json(const IneqVerdict& v) {
  std::ostringstream s;
  const auto& in = v.inputs;
  s << "{\"kind\": " << json_string(to_string(v.kind))
    << ", \"holds\": " << (v.holds ? "true" : "false")
    << ", \"worst_margin\": " << json_number(v.worst_margin) << ", \"margins\": [";
  for (std::size_t i = 0; i < v.margins.size(); ++i) {
    s << (i ? ", " : "") << json_number(v.margins[i]);
  }
  s << "], \"angles\": [" << format_number(in.angles[0]) << ", " << format_number(in.angles[1])
    << ", " << format_number(in.angles[2]) << "]";
  if (in.signs) {
    s << ", \"signs\": [" << json_string(to_string((*in.signs)[0])) << ", "
      << json_string(to_string((*in.signs)[1])) << ", " << json_string(to_string((*in.signs)[2]))
      << "]";
  }
  if (in.mode) s << ", \"mode\": " << json_string(to_string(*in.mode));
  if (v.kind == IneqKind::matrix_entrywise || v.kind == IneqKind::matrix_loewner) {
    s << ", \"alpha\": " << format_number(in.alpha);
  }
  if (in.units) s << ", \"units\": " << json_string(to_string(*in.units));
  if (v.lhs) s << ", \"lhs\": " << json_number(*v.lhs);
  if (v.rhs) s << ", \"rhs\": " << json_number(*v.rhs);
  if (v.lhs_thermo) s << ", \"lhs_thermo_j_per_k\": " << json_number(*v.lhs_thermo);
  if (v.rhs_thermo) s << ", \"rhs_thermo_j_per_k\": " << json_number(*v.rhs_thermo);
  s << "}";
  return s.str();
}

}  // namespace ebell

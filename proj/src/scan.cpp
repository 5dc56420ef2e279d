#include "ebell/scan.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <string>
#include <thread>

#include "ebell/errors.hpp"

namespace ebell {
namespace {

constexpr double kGridSnap = 1e-9;
constexpr std::size_t kBlockSize = 1 << 15;

}  // namespace

std::string_view to_string(CheckKind kind) {
  switch (kind) {
    case CheckKind::wigner: return "wigner";
    case CheckKind::matrix: return "matrix";
    case CheckKind::entropic: return "entropic";
    case CheckKind::cerf_adami: return "cerf_adami";
  }
  return "unknown";
}

CheckKind parse_check_kind(std::string_view text) {
  if (text == "wigner" || text == "wigner_prob") return CheckKind::wigner;
  if (text == "matrix") return CheckKind::matrix;
  if (text == "entropic" || text == "entropy") return CheckKind::entropic;
  if (text == "cerf_adami" || text == "cerf-adami" || text == "cerf") return CheckKind::cerf_adami;
  throw InvalidInputError("unknown inequality kind '" + std::string(text) + "'");
}

std::string_view to_string(OutputFormat format) {
  return format == OutputFormat::csv ? "csv" : "json";
}

OutputFormat parse_format(std::string_view text) {
  if (text == "csv") return OutputFormat::csv;
  if (text == "json") return OutputFormat::json;
  throw InvalidInputError("invalid format '" + std::string(text) + "' (expected csv or json)");
}

std::string_view to_string(RecordStatus status) {
  return status == RecordStatus::ok ? "ok" : "not_comparable";
}

AngleRange AngleRange::single(double value) {
  return AngleRange{value, value, 1.0, true, true};
}

void AngleRange::validate() const {
  if (!std::isfinite(start) || !std::isfinite(stop) || !std::isfinite(step)) {
    throw ConfigError("range bounds and step must be finite");
  }
  if (!(step > 0.0)) throw ConfigError("range step must be positive");
  if (start > stop) throw ConfigError("range start must not exceed stop");
}

std::size_t AngleRange::size() const {
  const double q = (stop - start) / step;
  if (q > static_cast<double>(kMaxGridPoints) * 10.0) {
    throw ConfigError("range has too many grid points");
  }
  const double nearest = std::round(q);
  const bool on_grid = std::abs(q - nearest) <= kGridSnap;
  const long long first = include_start ? 0 : 1;
  long long last = 0;
  if (on_grid) {
    last = static_cast<long long>(nearest) - (include_stop ? 0 : 1);
  } else {
    last = static_cast<long long>(std::floor(q));
  }
  return last < first ? 0 : static_cast<std::size_t>(last - first + 1);
}

double AngleRange::at(std::size_t i) const {
  const std::size_t k = i + (include_start ? 0 : 1);
  return start + static_cast<double>(k) * step;
}

std::size_t ScanConfig::dimensions() const {
  return kind == CheckKind::cerf_adami && coplanar ? 2 : 3;
}

std::size_t ScanConfig::total_points() const {
  std::size_t total = 1;
  for (std::size_t d = 0; d < dimensions(); ++d) {
    const std::size_t n = ranges[d].size();
    if (n == 0) return 0;
    if (total > kMaxGridPoints / n + 1) return kMaxGridPoints + 1;
    total *= n;
  }
  return total;
}

void ScanConfig::validate() const {
  for (std::size_t d = 0; d < dimensions(); ++d) ranges[d].validate();
  if (total_points() > kMaxGridPoints) {
    throw ConfigError("scan grid exceeds " + std::to_string(kMaxGridPoints) + " points");
  }
  if (!std::isfinite(alpha)) throw ConfigError("alpha must be finite");
}

void ScanSummary::add(const ScanRecord& record) {
  ++total_points;
  if (record.status != RecordStatus::ok) {
    ++not_comparable;
    return;
  }
  const IneqVerdict& v = record.verdict;
  if (!v.holds) {
    ++violations;
    if (!worst_violation || v.worst_margin < worst_violation->margin) {
      worst_violation = Extremum{v.worst_margin, record.angles};
    }
  } else if (!largest_hold_margin || v.worst_margin > largest_hold_margin->margin) {
    largest_hold_margin = Extremum{v.worst_margin, record.angles};
  }
}

ScanRecord evaluate_point(const ScanConfig& config, const std::array<std::size_t, 3>& index) {
  ScanRecord rec;
  rec.index = index;
  rec.angles[0] = config.ranges[0].at(index[0]);
  rec.angles[1] = config.ranges[1].at(index[1]);
  if (config.dimensions() == 2) {
    rec.angles[2] = rec.angles[0] + rec.angles[1];
  } else {
    rec.angles[2] = config.ranges[2].at(index[2]);
  }
  const auto [x, y, z] = rec.angles;

  switch (config.kind) {
    case CheckKind::wigner:
      rec.verdict = check_wigner_prob(x, y, z);
      break;
    case CheckKind::matrix:
      try {
        rec.verdict = check_matrix(x, y, z, config.signs, config.mode, config.alpha);
      } catch (const NotComparableError&) {
        rec.status = RecordStatus::not_comparable;
        rec.verdict = IneqVerdict{};
        rec.verdict.kind = IneqKind::matrix_entrywise;
        rec.verdict.holds = false;
        rec.verdict.inputs.angles = {normalize_angle(x), normalize_angle(y), normalize_angle(z)};
        rec.verdict.inputs.signs = config.signs;
        rec.verdict.inputs.mode = config.mode;
        rec.verdict.inputs.alpha = normalize_angle(config.alpha);
      }
      break;
    case CheckKind::entropic:
      rec.verdict = check_entropy(x, y, z, config.signs);
      break;
    case CheckKind::cerf_adami:
      rec.verdict = check_cerf_adami(x, y, z, config.units);
      break;
  }
  return rec;
}

ScanSummary run_scan(const ScanConfig& config, const RecordSink& sink, unsigned threads) {
  config.validate();
  const std::size_t total = config.total_points();
  const std::array<std::size_t, 3> sizes{config.ranges[0].size(), config.ranges[1].size(),
                                         config.dimensions() == 2 ? 1 : config.ranges[2].size()};
  const auto unflatten = [&sizes](std::size_t flat) {
    return std::array<std::size_t, 3>{flat / (sizes[1] * sizes[2]), (flat / sizes[2]) % sizes[1],
                                      flat % sizes[2]};
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

  ScanSummary summary;
  std::vector<ScanRecord> block;
  for (std::size_t begin = 0; begin < total; begin += kBlockSize) {
    const std::size_t end = std::min(total, begin + kBlockSize);
    const std::size_t n = end - begin;
    block.assign(n, ScanRecord{});

    std::vector<std::exception_ptr> failures(std::min<std::size_t>(threads, n));
    const auto worker = [&](std::size_t slot, std::size_t lo, std::size_t hi) {
      try {
        for (std::size_t i = lo; i < hi; ++i) {
          block[i] = evaluate_point(config, unflatten(begin + i));
        }
      } catch (...) {
        failures[slot] = std::current_exception();
      }
    };
    const std::size_t workers = std::min<std::size_t>(threads, n);
    if (workers <= 1) {
      worker(0, 0, n);
    } else {
      // Contiguous slices; each slot is written by exactly one thread.
      std::vector<std::jthread> pool;
      pool.reserve(workers);
      const std::size_t chunk = (n + workers - 1) / workers;
      for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo < hi) pool.emplace_back(worker, w, lo, hi);
      }
    }
    for (const auto& failure : failures) {
      if (failure) std::rethrow_exception(failure);
    }

    for (const ScanRecord& rec : block) {
      summary.add(rec);
      if (sink) sink(rec);
    }
  }
  return summary;
}

ScanResult collect_scan(const ScanConfig& config, unsigned threads) {
  ScanResult result;
  result.summary = run_scan(
      config, [&result](const ScanRecord& r) { result.records.push_back(r); }, threads);
  return result;
}

}  // namespace ebell

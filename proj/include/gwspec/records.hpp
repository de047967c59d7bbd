#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gwspec/graph.hpp"
#include "gwspec/integrality.hpp"
#include "gwspec/spectrum.hpp"

namespace gwspec {

enum class MatrixKind { adjacency, distance, dl, dq };
enum class SpectrumMode { exact, numeric, both };
enum class OutputFormat { table, json, csv };

std::string to_string(MatrixKind kind);
MatrixKind parse_matrix_kind(const std::string& text);
SpectrumMode parse_spectrum_mode(const std::string& text);
OutputFormat parse_output_format(const std::string& text);

struct SpectrumRecord {
  WheelParams graph;
  MatrixKind matrix;
  std::optional<Spectrum> exact;
  /// Oracle eigenvalues, descending.
  std::optional<std::vector<double>> numeric;
  std::optional<double> max_deviation;
  friend bool operator==(const SpectrumRecord&, const SpectrumRecord&) = default;
};

struct ClassificationRecord {
  std::string which;  // dq | dl | both
  ClassificationResult result;
  friend bool operator==(const ClassificationRecord&, const ClassificationRecord&) = default;
};

struct EnumerationRow {
  std::int64_t a;
  /// nullopt marks the infinite family row (m = *).
  std::optional<std::int64_t> m;
  std::int64_t n;
  std::optional<wide_int> t;
  std::optional<wide_int> c;
  bool verdict;
  std::string label;
  friend bool operator==(const EnumerationRow&, const EnumerationRow&) = default;
};

struct EnumerationRecord {
  std::string which;   // dq | dl
  std::string method;  // scan | alpha
  std::int64_t a_max;
  std::int64_t m_max;
  std::vector<std::int64_t> n_values;
  std::vector<EnumerationRow> rows;
  friend bool operator==(const EnumerationRecord&, const EnumerationRecord&) = default;
};

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct VerifyRecord {
  std::string suite;
  std::vector<CheckResult> checks;
  bool passed() const;
  friend bool operator==(const VerifyRecord&, const VerifyRecord&) = default;
};

void to_json(nlohmann::json& j, const ExactEigenvalue& e);
void to_json(nlohmann::json& j, const SpectrumRecord& r);
void to_json(nlohmann::json& j, const ClassificationRecord& r);
void to_json(nlohmann::json& j, const EnumerationRecord& r);
void to_json(nlohmann::json& j, const VerifyRecord& r);

/// Parses one entry of an "eigenvalues" array; returns the value and its
/// multiplicity.
std::pair<ExactEigenvalue, std::size_t> eigenvalue_from_json(const nlohmann::json& j);
SpectrumRecord spectrum_record_from_json(const nlohmann::json& j);
ClassificationRecord classification_record_from_json(const nlohmann::json& j);
EnumerationRecord enumeration_record_from_json(const nlohmann::json& j);
VerifyRecord verify_record_from_json(const nlohmann::json& j);

std::string render(const SpectrumRecord& r, OutputFormat format);
std::string render(const ClassificationRecord& r, OutputFormat format);
std::string render(const EnumerationRecord& r, OutputFormat format);
std::string render(const VerifyRecord& r, OutputFormat format);

/// Builds the enumeration rows for a grid. The scan method tests every
/// triple; the alpha method uses the divisor parametrization for a >= 2 and
/// factor pairs for a = 1. Both produce identical rows.
EnumerationRecord enumerate_integral(const std::string& which, const std::string& method, std::int64_t a_max,
                                     std::int64_t m_max, std::vector<std::int64_t> n_values);

}  // namespace gwspec

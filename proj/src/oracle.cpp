#include "gwspec/oracle.hpp"

#include <string>

namespace gwspec {

MatchReport compare_spectra(const Spectrum& exact, const NumericSpectrum<double>& numeric, double tol) {
  if (exact.order() != numeric.values.size()) {
    throw invalid_comparison("spectrum orders differ: " + std::to_string(exact.order()) + " vs " +
                             std::to_string(numeric.values.size()));
  }
  const auto expected = exact.sorted_values();
  MatchReport report;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const double dev = std::abs(expected[i] - numeric.values[i]);
    if (dev > report.max_deviation) {
      report.max_deviation = dev;
      report.worst_index = i;
    }
  }
  report.passed = report.max_deviation <= tol;
  return report;
}

bool numeric_is_integral(const IntMatrix& mat, double tol) {
  const auto spectrum = eigenvalues_symmetric(mat);
  return std::all_of(spectrum.values.begin(), spectrum.values.end(),
                     [tol](double v) { return std::abs(v - std::round(v)) <= tol; });
}

double max_norm(const IntMatrix& mat) { return static_cast<double>(mat.cwiseAbs().maxCoeff()); }

}  // namespace gwspec

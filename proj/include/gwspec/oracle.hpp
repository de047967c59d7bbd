#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

#include "gwspec/graph.hpp"
#include "gwspec/spectrum.hpp"

namespace gwspec {

struct invalid_matrix : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct convergence_failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct invalid_comparison : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline constexpr double kJacobiTolerance = 1e-12;
inline constexpr int kJacobiSweepCap = 100;
inline constexpr double kIntegralTolerance = 1e-6;

template <typename Scalar>
struct NumericSpectrum {
  /// Descending.
  std::vector<Scalar> values;
  std::size_t order = 0;
  /// max_k |A v_k - lambda_k v_k| against the input matrix.
  Scalar residual = 0;
  /// Off-diagonal Frobenius norm relative to the input norm at exit.
  Scalar relative_off_norm = 0;
  /// Largest relative change of the Frobenius norm seen after any sweep.
  Scalar frobenius_drift = 0;
  int sweeps = 0;
};

namespace detail {

template <typename Scalar>
Scalar off_diagonal_norm(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a) {
  Scalar sum = 0;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i != j) sum += a(i, j) * a(i, j);
    }
  }
  return std::sqrt(sum);
}

}  // namespace detail

/// All eigenvalues of a symmetric matrix by cyclic Jacobi rotations in
/// row-sweep order. Iterates until the off-diagonal Frobenius norm is at
/// most tol times the input's Frobenius norm.
template <typename Scalar = double, typename Derived>
NumericSpectrum<Scalar> eigenvalues_symmetric(const Eigen::MatrixBase<Derived>& mat, Scalar tol = kJacobiTolerance,
                                              int sweep_cap = kJacobiSweepCap) {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  if (mat.rows() != mat.cols() || mat.rows() < 1) throw invalid_matrix("matrix must be square and non-empty");
  if (!(tol > 0)) throw invalid_matrix("tolerance must be positive");
  for (Eigen::Index i = 0; i < mat.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < mat.cols(); ++j) {
      if (mat(i, j) != mat(j, i)) throw invalid_matrix("matrix is not symmetric");
    }
  }

  const Matrix input = mat.template cast<Scalar>();
  Matrix a = input;
  const Eigen::Index n = a.rows();
  Matrix v = Matrix::Identity(n, n);
  const Scalar initial_norm = input.norm();
  const Scalar threshold = tol * initial_norm;

  NumericSpectrum<Scalar> out;
  out.order = static_cast<std::size_t>(n);
  Scalar off = detail::off_diagonal_norm(a);
  while (off > threshold) {
    if (out.sweeps == sweep_cap) {
      throw convergence_failure("Jacobi did not converge within " + std::to_string(sweep_cap) + " sweeps");
    }
    ++out.sweeps;
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Scalar apq = a(p, q);
        if (apq == Scalar(0)) continue;
        const Scalar theta = (a(q, q) - a(p, p)) / (2 * apq);
        const Scalar t = (theta >= 0 ? Scalar(1) : Scalar(-1)) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const Scalar c = 1 / std::sqrt(t * t + 1);
        const Scalar s = t * c;
        // A <- J^T A J with J the (p, q) rotation.
        for (Eigen::Index k = 0; k < n; ++k) {
          const Scalar akp = a(k, p);
          const Scalar akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const Scalar apk = a(p, k);
          const Scalar aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0;
        a(q, p) = 0;
        for (Eigen::Index k = 0; k < n; ++k) {
          const Scalar vkp = v(k, p);
          const Scalar vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
    off = detail::off_diagonal_norm(a);
    if (initial_norm > 0) {
      out.frobenius_drift = std::max(out.frobenius_drift, std::abs(a.norm() - initial_norm) / initial_norm);
    }
  }
  out.relative_off_norm = initial_norm > 0 ? off / initial_norm : Scalar(0);

  for (Eigen::Index k = 0; k < n; ++k) {
    const Scalar lambda = a(k, k);
    const Scalar r = (input * v.col(k) - lambda * v.col(k)).norm();
    out.residual = std::max(out.residual, r);
    out.values.push_back(lambda);
  }
  std::sort(out.values.begin(), out.values.end(), std::greater<>());
  return out;
}

struct MatchReport {
  double max_deviation = 0;
  std::size_t worst_index = 0;
  bool passed = false;
};

/// Pairs sorted exact values with sorted oracle values.
MatchReport compare_spectra(const Spectrum& exact, const NumericSpectrum<double>& numeric, double tol);

/// True iff every oracle eigenvalue is within tol of an integer.
bool numeric_is_integral(const IntMatrix& mat, double tol = kIntegralTolerance);

/// Largest |entry|, the scale used for relative oracle tolerances.
double max_norm(const IntMatrix& mat);

}  // namespace gwspec

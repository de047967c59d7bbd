#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gwspec/exact_eigenvalue.hpp"

namespace gwspec {

/// Multiset of exact eigenvalues. Entries are merged by structural
/// equality and kept in output order (see output_before).
class Spectrum {
 public:
  struct Entry {
    ExactEigenvalue value;
    std::size_t multiplicity;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  Spectrum() = default;

  /// Adds `multiplicity` copies; zero is a no-op.
  void add(const ExactEigenvalue& value, std::size_t multiplicity = 1);
  void add(const Spectrum& other);

  /// Removes one copy; returns false if the value is absent.
  bool remove_one(const ExactEigenvalue& value);

  std::size_t multiplicity_of(const ExactEigenvalue& value) const;
  bool contains(const ExactEigenvalue& value) const { return multiplicity_of(value) > 0; }

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t order() const { return order_; }
  bool empty() const { return order_ == 0; }

  /// True iff every eigenvalue is an integer.
  bool is_integral() const;

  /// Exact eigenvalue sum when all irrational parts cancel (integers and
  /// balanced conjugate surds); nullopt otherwise.
  std::optional<wide_int> exact_sum() const;
  long double numeric_sum() const;

  /// Every eigenvalue expanded by multiplicity, descending.
  std::vector<double> sorted_values() const;

  /// Applies f to every eigenvalue; the result is re-merged.
  template <typename F>
  Spectrum transformed(F&& f) const {
    Spectrum out;
    for (const auto& e : entries_) out.add(f(e.value), e.multiplicity);
    return out;
  }

  friend bool operator==(const Spectrum&, const Spectrum&) = default;

 private:
  std::vector<Entry> entries_;
  std::size_t order_ = 0;
};

std::string to_string(const Spectrum& s);

}  // namespace gwspec

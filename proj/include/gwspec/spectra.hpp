#pragma once

#include <cstdint>
#include <stdexcept>

#include "gwspec/graph.hpp"
#include "gwspec/spectrum.hpp"

namespace gwspec {

struct invalid_regular_part : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// An r-regular graph on n vertices described by its exact adjacency
/// spectrum. The join formulas only need (n, r, spectrum).
struct RegularPart {
  std::int64_t order;
  std::int64_t degree;
  Spectrum adjacency;

  /// Throws invalid_regular_part unless the spectrum has total
  /// multiplicity `order`, contains `degree` as its largest eigenvalue and
  /// sums to zero.
  static RegularPart make(std::int64_t order, std::int64_t degree, Spectrum adjacency);
};

Spectrum adjacency_spectrum_complete(std::int64_t m);
Spectrum adjacency_spectrum_copies(std::int64_t a, std::int64_t m);
Spectrum adjacency_spectrum_cycle(std::int64_t n);

RegularPart complete_part(std::int64_t m);
RegularPart copies_part(std::int64_t a, std::int64_t m);
RegularPart cycle_part(std::int64_t n);

/// Distance signless Laplacian spectrum of the join of two regular graphs.
Spectrum dq_join_spectrum(const RegularPart& p1, const RegularPart& p2);

/// Distance Laplacian spectrum of the join of two regular graphs. The two
/// eigenvalues outside the per-part branches come from the equitable
/// quotient [[n2, -n2], [-n1, n1]].
Spectrum dl_join_spectrum(const RegularPart& p1, const RegularPart& p2);

Spectrum adjacency_join_spectrum(const RegularPart& p1, const RegularPart& p2);
Spectrum distance_join_spectrum(const RegularPart& p1, const RegularPart& p2);

/// D^Q spectrum of GW(a,m,n), computed through the join formula.
Spectrum gw_dq_spectrum(const WheelParams& p);

/// D^Q spectrum of GW(a,m,n) written out per family. The a(m-1)-fold
/// eigenvalue is (2a-1)m + n + middle_offset; the correct offset is -2.
Spectrum gw_dq_closed_form(const WheelParams& p, std::int64_t middle_offset = -2);

/// D^L spectrum of GW(a,m,n) written out per family.
Spectrum gw_dl_spectrum(const WheelParams& p);

Spectrum gw_adjacency_spectrum(const WheelParams& p);
Spectrum gw_distance_spectrum(const WheelParams& p);

}  // namespace gwspec

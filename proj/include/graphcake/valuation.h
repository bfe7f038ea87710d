#pragma once

#include <vector>

#include "graphcake/piece.h"
#include "graphcake/rational.h"

namespace graphcake {

/// Piecewise-constant valuation density on the cake [0, 1).
///
/// breakpoints 0 = b_0 < b_1 < ... < b_K = 1 delimit K cells; weights holds
/// one nonnegative constant density per cell.  The density integrates to 1
/// over the whole cake, exactly; all values and cut points stay rational.
class ValuationDensity {
 public:
  /// Weight 1 everywhere.
  static ValuationDensity uniform();

  /// Validates shape, nonnegativity, and exact normalization.
  static ValuationDensity from_weights(std::vector<Rat> breakpoints, std::vector<Rat> weights);

  /// Builds a normalized density from integer cell masses: cell i receives
  /// total value masses[i] / sum(masses).  Masses may be zero (zero-density
  /// cells); the sum must be positive.
  static ValuationDensity from_masses(std::vector<Rat> breakpoints,
                                      const std::vector<long>& masses);

  const std::vector<Rat>& breakpoints() const { return breaks_; }
  const std::vector<Rat>& weights() const { return weights_; }

  Rat value(const Interval& iv) const;
  Rat value(const Piece& piece) const;

  /// Minimal y >= x such that the density integrates to alpha over [x, y).
  /// Throws InsufficientValue when [x, 1) holds less than alpha.
  Rat cut(const Rat& x, const Rat& alpha) const;

 private:
  ValuationDensity(std::vector<Rat> breaks, std::vector<Rat> weights)
      : breaks_(std::move(breaks)), weights_(std::move(weights)) {}

  std::vector<Rat> breaks_;
  std::vector<Rat> weights_;
};

}  // namespace graphcake

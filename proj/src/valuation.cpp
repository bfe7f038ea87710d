#include "graphcake/valuation.h"

#include <utility>

#include "graphcake/errors.h"

namespace graphcake {

ValuationDensity ValuationDensity::uniform() {
  return ValuationDensity({Rat(0), Rat(1)}, {Rat(1)});
}

ValuationDensity ValuationDensity::from_weights(std::vector<Rat> breakpoints,
                                                std::vector<Rat> weights) {
  if (breakpoints.size() < 2 || weights.size() + 1 != breakpoints.size()) {
    throw ParseError("valuation: breakpoint/weight count mismatch");
  }
  if (breakpoints.front() != Rat(0) || breakpoints.back() != Rat(1)) {
    throw ParseError("valuation: breakpoints must start at 0 and end at 1");
  }
  Rat total;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (!(breakpoints[i] < breakpoints[i + 1])) {
      throw ParseError("valuation: breakpoints must be strictly ascending");
    }
    if (weights[i].sign() < 0) throw ParseError("valuation: negative weight");
    total += weights[i] * (breakpoints[i + 1] - breakpoints[i]);
  }
  if (total != Rat(1)) throw ParseError("valuation: density does not integrate to 1");
  return ValuationDensity(std::move(breakpoints), std::move(weights));
}

ValuationDensity ValuationDensity::from_masses(std::vector<Rat> breakpoints,
                                               const std::vector<long>& masses) {
  if (breakpoints.size() != masses.size() + 1) {
    throw ParseError("valuation: breakpoint/mass count mismatch");
  }
  long total = 0;
  for (long m : masses) {
    if (m < 0) throw ParseError("valuation: negative mass");
    total += m;
  }
  if (total <= 0) throw ParseError("valuation: total mass must be positive");
  std::vector<Rat> weights;
  weights.reserve(masses.size());
  for (std::size_t i = 0; i < masses.size(); ++i) {
    Rat len = breakpoints[i + 1] - breakpoints[i];
    if (!(Rat(0) < len)) throw ParseError("valuation: breakpoints must be strictly ascending");
    weights.push_back(Rat(masses[i], total) / len);
  }
  return from_weights(std::move(breakpoints), std::move(weights));
}

Rat ValuationDensity::value(const Interval& iv) const {
  Rat total;
  for (std::size_t i = 0; i + 1 < breaks_.size(); ++i) {
    Rat lo = max(iv.lo, breaks_[i]);
    Rat hi = min(iv.hi, breaks_[i + 1]);
    if (lo < hi) total += weights_[i] * (hi - lo);
  }
  return total;
}

Rat ValuationDensity::value(const Piece& piece) const {
  Rat total;
  for (const Interval& iv : piece.intervals()) total += value(iv);
  return total;
}

Rat ValuationDensity::cut(const Rat& x, const Rat& alpha) const {
  if (alpha.sign() < 0) throw Error("cut: negative target value");
  if (alpha.is_zero()) return x;  // minimal-y convention, even inside zero-density cells
  Rat acc;
  for (std::size_t i = 0; i + 1 < breaks_.size(); ++i) {
    Rat lo = max(x, breaks_[i]);
    Rat hi = breaks_[i + 1];
    if (!(lo < hi)) continue;
    Rat cell = weights_[i] * (hi - lo);
    if (cell.sign() > 0 && alpha <= acc + cell) {
      return lo + (alpha - acc) / weights_[i];
    }
    acc += cell;
  }
  throw InsufficientValue("cut: suffix holds insufficient value");
}

}  // namespace graphcake

#pragma once

#include <cstddef>
#include <iosfwd>
#include <utility>
#include <vector>

#include "graphcake/rational.h"

namespace graphcake {

/// Half-open interval [lo, hi) of cake, 0 <= lo <= hi <= 1.
struct Interval {
  Rat lo;
  Rat hi;

  bool empty() const { return !(lo < hi); }
  Rat length() const { return hi - lo; }

  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
};

/// A piece of cake: a finite union of disjoint half-open intervals.
///
/// The representation is canonical: intervals are nonempty, sorted by left
/// endpoint, pairwise disjoint, and adjacent intervals are merged.  Equal
/// pieces therefore compare equal member-by-member.
class Piece {
 public:
  Piece() = default;
  explicit Piece(Interval iv);

  /// Canonicalizes: drops empty intervals, sorts, merges adjacent intervals.
  /// Throws OverlapError if two inputs overlap in positive measure.
  static Piece from_intervals(std::vector<Interval> ivs);

  const std::vector<Interval>& intervals() const { return ivs_; }
  bool empty() const { return ivs_.empty(); }
  std::size_t interval_count() const { return ivs_.size(); }
  Rat length() const;

  friend bool operator==(const Piece& a, const Piece& b) { return a.ivs_ == b.ivs_; }
  friend bool operator!=(const Piece& a, const Piece& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Piece& p);

 private:
  friend Piece piece_union(const Piece&, const Piece&);
  friend Piece piece_subtract(const Piece&, const Piece&);
  friend Piece piece_intersect(const Piece&, const Piece&);

  std::vector<Interval> ivs_;
};

/// The whole cake [0, 1).
Piece whole_cake();

/// Disjoint union; OverlapError if the pieces overlap in positive measure.
Piece piece_union(const Piece& a, const Piece& b);

/// Set difference a \ b.
Piece piece_subtract(const Piece& a, const Piece& b);

/// Intersection.
Piece piece_intersect(const Piece& a, const Piece& b);

/// True when the pieces share no cake of positive measure.
bool piece_disjoint(const Piece& a, const Piece& b);

/// True when inner lies entirely inside outer.
bool piece_contains(const Piece& outer, const Piece& inner);

/// Splits a piece at the given Lebesgue length along its linear order:
/// returns (prefix, suffix) with prefix.length() == prefix_len.
/// Requires 0 <= prefix_len <= piece.length().
std::pair<Piece, Piece> split_at_length(const Piece& piece, const Rat& prefix_len);

/// True when `piece` is a suffix of `source` in the source's linear order
/// (the empty piece and the full source both count).
bool is_suffix_of(const Piece& piece, const Piece& source);

}  // namespace graphcake

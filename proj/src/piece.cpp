#include "graphcake/piece.h"

#include <algorithm>
#include <ostream>

#include "graphcake/errors.h"

namespace graphcake {

Piece::Piece(Interval iv) {
  if (!iv.empty()) ivs_.push_back(std::move(iv));
}

Piece Piece::from_intervals(std::vector<Interval> ivs) {
  std::erase_if(ivs, [](const Interval& iv) { return iv.empty(); });
  std::sort(ivs.begin(), ivs.end(), [](const Interval& a, const Interval& b) {
    return a.lo < b.lo;
  });
  Piece out;
  for (auto& iv : ivs) {
    if (!out.ivs_.empty()) {
      Interval& last = out.ivs_.back();
      if (iv.lo < last.hi) throw OverlapError("overlapping intervals in piece");
      if (iv.lo == last.hi) {
        last.hi = std::move(iv.hi);
        continue;
      }
    }
    out.ivs_.push_back(std::move(iv));
  }
  return out;
}

Rat Piece::length() const {
  Rat total;
  for (const Interval& iv : ivs_) total += iv.length();
  return total;
}

std::ostream& operator<<(std::ostream& os, const Piece& p) {
  os << '{';
  for (std::size_t i = 0; i < p.ivs_.size(); ++i) {
    if (i) os << " u ";
    os << '[' << p.ivs_[i].lo << ',' << p.ivs_[i].hi << ')';
  }
  return os << '}';
}

Piece whole_cake() { return Piece(Interval{Rat(0), Rat(1)}); }

Piece piece_union(const Piece& a, const Piece& b) {
  std::vector<Interval> all = a.ivs_;
  all.insert(all.end(), b.ivs_.begin(), b.ivs_.end());
  return Piece::from_intervals(std::move(all));
}

Piece piece_subtract(const Piece& a, const Piece& b) {
  Piece out;
  for (const Interval& iv : a.ivs_) {
    Rat lo = iv.lo;
    for (const Interval& cut : b.ivs_) {
      if (cut.hi <= lo) continue;
      if (iv.hi <= cut.lo) break;
      if (lo < cut.lo) out.ivs_.push_back(Interval{lo, cut.lo});
      lo = max(lo, cut.hi);
      if (!(lo < iv.hi)) break;
    }
    if (lo < iv.hi) out.ivs_.push_back(Interval{lo, iv.hi});
  }
  return out;
}

Piece piece_intersect(const Piece& a, const Piece& b) {
  Piece out;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.ivs_.size() && j < b.ivs_.size()) {
    const Interval& x = a.ivs_[i];
    const Interval& y = b.ivs_[j];
    Rat lo = max(x.lo, y.lo);
    Rat hi = min(x.hi, y.hi);
    if (lo < hi) out.ivs_.push_back(Interval{lo, hi});
    if (x.hi < y.hi) {
      ++i;
    } else {
      ++j;
    }
  }
  return out;
}

bool piece_disjoint(const Piece& a, const Piece& b) {
  return piece_intersect(a, b).empty();
}

bool piece_contains(const Piece& outer, const Piece& inner) {
  return piece_subtract(inner, outer).empty();
}

std::pair<Piece, Piece> split_at_length(const Piece& piece, const Rat& prefix_len) {
  if (prefix_len.sign() < 0 || piece.length() < prefix_len) {
    throw Error("split_at_length: length out of range");
  }
  std::vector<Interval> pre;
  std::vector<Interval> suf;
  Rat remaining = prefix_len;
  for (const Interval& iv : piece.intervals()) {
    if (remaining.is_zero()) {
      suf.push_back(iv);
      continue;
    }
    Rat len = iv.length();
    if (len <= remaining) {
      pre.push_back(iv);
      remaining -= len;
    } else {
      Rat mid = iv.lo + remaining;
      pre.push_back(Interval{iv.lo, mid});
      suf.push_back(Interval{mid, iv.hi});
      remaining = Rat(0);
    }
  }
  return {Piece::from_intervals(std::move(pre)), Piece::from_intervals(std::move(suf))};
}

bool is_suffix_of(const Piece& piece, const Piece& source) {
  if (!piece_contains(source, piece)) return false;
  Rat prefix_len = source.length() - piece.length();
  return split_at_length(source, prefix_len).second == piece;
}

}  // namespace graphcake

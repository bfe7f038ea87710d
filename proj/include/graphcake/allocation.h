#pragma once

#include <vector>

#include "graphcake/piece.h"

namespace graphcake {

/// A (possibly partial) allocation: one piece per agent plus the unallocated
/// residue.  Agent pieces and the residue are pairwise disjoint and together
/// partition the cake.
struct Allocation {
  std::vector<Piece> pieces;
  Piece residue;

  explicit Allocation(int n = 0) : pieces(static_cast<std::size_t>(n)), residue(whole_cake()) {}

  bool complete() const { return residue.empty(); }
};

/// Throws AuditFailure unless the pieces and residue are pairwise disjoint
/// and cover [0,1) exactly.
void validate_partition(const Allocation& alloc);

}  // namespace graphcake

#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "graphcake/piece.h"
#include "graphcake/rational.h"
#include "graphcake/valuation.h"

namespace graphcake {

/// Per-agent Robertson-Webb query counts.  Counts only ever grow; the audit
/// channel bypasses the ledger entirely.
struct QueryLedger {
  std::vector<std::uint64_t> evals;
  std::vector<std::uint64_t> cuts;

  explicit QueryLedger(std::size_t n = 0) : evals(n, 0), cuts(n, 0) {}

  std::uint64_t eval_total() const;
  std::uint64_t cut_total() const;
};

/// Query gateway between protocol code and the (private) agent valuations.
///
/// Protocol code must go through the counted calls: eval_query bills one
/// evaluation per interval of the piece, cut_query bills one cut.  Verifier
/// code uses audit_value, which is exact but leaves the ledger untouched.
/// Every rational produced by a counted query is checked against the
/// denominator bit budget; a blowup raises RationalOverflow rather than
/// grinding on.
class QueryOracle {
 public:
  static constexpr std::size_t kDefaultDenBits = std::size_t{1} << 18;

  explicit QueryOracle(std::vector<ValuationDensity> valuations,
                       std::size_t max_den_bits = kDefaultDenBits);

  int agents() const { return static_cast<int>(vals_.size()); }

  /// f_agent(piece); bills one eval per interval.
  Rat eval_query(int agent, const Piece& piece);

  /// Minimal y >= x with f_agent([x, y)) == alpha; bills one cut.
  Rat cut_query(int agent, const Rat& x, const Rat& alpha);

  /// Splits piece into (prefix, suffix) along its linear order with
  /// f_agent(prefix) == alpha and the prefix minimal.  Costs at most one cut
  /// plus one eval per interval actually walked.
  std::pair<Piece, Piece> cut_prefix(int agent, const Piece& piece, const Rat& alpha);

  /// Audit channel: exact value, never counted.
  Rat audit_value(int agent, const Piece& piece) const;

  const QueryLedger& ledger() const { return ledger_; }

 private:
  void check_agent(int agent) const;
  void guard(const Rat& r) const;

  std::vector<ValuationDensity> vals_;
  QueryLedger ledger_;
  std::size_t max_den_bits_;
};

}  // namespace graphcake

#include "graphcake/oracle.h"

#include <string>

#include "graphcake/errors.h"

namespace graphcake {

std::uint64_t QueryLedger::eval_total() const {
  std::uint64_t t = 0;
  for (auto e : evals) t += e;
  return t;
}

std::uint64_t QueryLedger::cut_total() const {
  std::uint64_t t = 0;
  for (auto c : cuts) t += c;
  return t;
}

QueryOracle::QueryOracle(std::vector<ValuationDensity> valuations, std::size_t max_den_bits)
    : vals_(std::move(valuations)), ledger_(vals_.size()), max_den_bits_(max_den_bits) {}

void QueryOracle::check_agent(int agent) const {
  if (agent < 0 || agent >= agents()) {
    throw UnknownAgent("oracle: unknown agent " + std::to_string(agent));
  }
}

void QueryOracle::guard(const Rat& r) const {
  if (r.den_bits() > max_den_bits_) {
    throw RationalOverflow("rational denominator exceeded " +
                           std::to_string(max_den_bits_) + " bits");
  }
}

Rat QueryOracle::eval_query(int agent, const Piece& piece) {
  check_agent(agent);
  ledger_.evals[static_cast<std::size_t>(agent)] += piece.interval_count();
  Rat v = vals_[static_cast<std::size_t>(agent)].value(piece);
  guard(v);
  return v;
}

Rat QueryOracle::cut_query(int agent, const Rat& x, const Rat& alpha) {
  check_agent(agent);
  ledger_.cuts[static_cast<std::size_t>(agent)] += 1;
  Rat y = vals_[static_cast<std::size_t>(agent)].cut(x, alpha);
  guard(y);
  return y;
}

std::pair<Piece, Piece> QueryOracle::cut_prefix(int agent, const Piece& piece, const Rat& alpha) {
  check_agent(agent);
  if (alpha.sign() < 0) throw Error("cut_prefix: negative target value");
  if (alpha.is_zero()) return {Piece(), piece};  // minimal prefix
  std::vector<Interval> pre;
  std::vector<Interval> suf;
  Rat acc;
  bool done = false;
  for (const Interval& iv : piece.intervals()) {
    if (done) {
      suf.push_back(iv);
      continue;
    }
    Rat v = eval_query(agent, Piece(iv));
    if (acc + v < alpha) {
      pre.push_back(iv);
      acc += v;
      continue;
    }
    if (acc + v == alpha) {
      pre.push_back(iv);
      done = true;
      continue;
    }
    // The boundary falls strictly inside this interval.
    Rat y = cut_query(agent, iv.lo, alpha - acc);
    pre.push_back(Interval{iv.lo, y});
    suf.push_back(Interval{y, iv.hi});
    done = true;
  }
  if (!done) throw InsufficientValue("cut_prefix: piece holds insufficient value");
  return {Piece::from_intervals(std::move(pre)), Piece::from_intervals(std::move(suf))};
}

Rat QueryOracle::audit_value(int agent, const Piece& piece) const {
  check_agent(agent);
  return vals_[static_cast<std::size_t>(agent)].value(piece);
}

}  // namespace graphcake

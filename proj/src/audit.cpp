#include "graphcake/audit.h"

#include <string>

#include "graphcake/errors.h"

namespace graphcake {

void validate_partition(const Allocation& alloc) {
  Piece covered = alloc.residue;
  for (std::size_t v = 0; v < alloc.pieces.size(); ++v) {
    if (!piece_disjoint(covered, alloc.pieces[v])) {
      throw AuditFailure("allocation pieces overlap at agent " + std::to_string(v));
    }
    covered = piece_union(covered, alloc.pieces[v]);
  }
  if (covered != whole_cake()) {
    throw AuditFailure("allocation does not partition the cake");
  }
}

Rat bonus(const QueryOracle& oracle, const Allocation& alloc, int v, int u) {
  return oracle.audit_value(v, alloc.pieces[static_cast<std::size_t>(v)]) -
         oracle.audit_value(v, alloc.pieces[static_cast<std::size_t>(u)]);
}

namespace {

// Own value minus the neighbor average, optionally folding the residue into
// the averaged sum (the dominance form).
Rat slack_against_neighbors(const QueryOracle& oracle, const Allocation& alloc,
                            const SocialGraph& graph, int v, bool with_residue) {
  Rat own = oracle.audit_value(v, alloc.pieces[static_cast<std::size_t>(v)]);
  int d = graph.degree(v);
  if (d == 0) return own;  // single-agent instance: vacuously satisfied
  Rat sum;
  for (int u : graph.neighbors(v)) {
    sum += oracle.audit_value(v, alloc.pieces[static_cast<std::size_t>(u)]);
  }
  if (with_residue) sum += oracle.audit_value(v, alloc.residue);
  return own - sum / Rat(d);
}

}  // namespace

Rat proportionality_slack(const QueryOracle& oracle, const Allocation& alloc,
                          const SocialGraph& graph, int v) {
  return slack_against_neighbors(oracle, alloc, graph, v, false);
}

Rat dominance_slack(const QueryOracle& oracle, const Allocation& alloc,
                    const SocialGraph& graph, int v) {
  return slack_against_neighbors(oracle, alloc, graph, v, true);
}

bool is_locally_proportional(const QueryOracle& oracle, const Allocation& alloc,
                             const SocialGraph& graph) {
  for (int v = 0; v < graph.size(); ++v) {
    if (proportionality_slack(oracle, alloc, graph, v).sign() < 0) return false;
  }
  return true;
}

bool is_locally_envy_free(const QueryOracle& oracle, const Allocation& alloc,
                          const SocialGraph& graph) {
  for (int v = 0; v < graph.size(); ++v) {
    for (int u : graph.neighbors(v)) {
      if (bonus(oracle, alloc, v, u).sign() < 0) return false;
    }
  }
  return true;
}

bool dominates(const QueryOracle& oracle, const Allocation& alloc, int v, int u) {
  return bonus(oracle, alloc, v, u) >= oracle.audit_value(v, alloc.residue);
}

bool is_dominant(const QueryOracle& oracle, const Allocation& alloc,
                 const SocialGraph& graph, int v) {
  return dominance_slack(oracle, alloc, graph, v).sign() >= 0;
}

bool envy_free_among(const QueryOracle& oracle, const Allocation& alloc,
                     const std::vector<int>& agents) {
  for (int v : agents) {
    Rat own = oracle.audit_value(v, alloc.pieces[static_cast<std::size_t>(v)]);
    for (int u : agents) {
      if (u == v) continue;
      if (own < oracle.audit_value(v, alloc.pieces[static_cast<std::size_t>(u)])) return false;
    }
  }
  return true;
}

FairnessReport audit_fairness(const QueryOracle& oracle, const Allocation& alloc,
                              const SocialGraph& graph) {
  FairnessReport report;
  report.complete = alloc.complete();
  report.locally_proportional = true;
  report.locally_envy_free = true;
  for (int v = 0; v < graph.size(); ++v) {
    report.proportionality_slack.push_back(proportionality_slack(oracle, alloc, graph, v));
    report.dominance_slack.push_back(dominance_slack(oracle, alloc, graph, v));
    if (report.proportionality_slack.back().sign() < 0) report.locally_proportional = false;
    for (int u : graph.neighbors(v)) {
      Rat b = bonus(oracle, alloc, v, u);
      if (b.sign() < 0) report.locally_envy_free = false;
      report.envy.push_back({v, u, std::move(b)});
    }
  }
  return report;
}

}  // namespace graphcake

#pragma once

#include <vector>

#include "graphcake/allocation.h"
#include "graphcake/graph.h"
#include "graphcake/oracle.h"
#include "graphcake/rational.h"

namespace graphcake {

/// Exact fairness figures for one allocation, computed over the oracle's
/// uncounted audit channel.  Slacks are "own value minus requirement", so a
/// predicate holds iff its slack is nonnegative.
struct FairnessReport {
  struct EdgeEnvy {
    int v;
    int u;        // an ordered neighbor pair (v, u)
    Rat bonus;    // f_v(A_v) - f_v(A_u)
  };

  std::vector<Rat> proportionality_slack;  // per agent
  std::vector<Rat> dominance_slack;        // per agent (includes the residue term)
  std::vector<EdgeEnvy> envy;              // both directions of every edge
  bool locally_proportional = false;
  bool locally_envy_free = false;
  bool complete = false;
};

/// f_v(A_v) - f_v(A_u).
Rat bonus(const QueryOracle& oracle, const Allocation& alloc, int v, int u);

/// f_v(A_v) - (1/d_v) * sum over neighbors u of f_v(A_u).
/// A degree-0 vertex (single-agent instance) is vacuously proportional; its
/// slack is its own value.
Rat proportionality_slack(const QueryOracle& oracle, const Allocation& alloc,
                          const SocialGraph& graph, int v);

/// Like proportionality_slack but the residue joins the neighbor sum.
Rat dominance_slack(const QueryOracle& oracle, const Allocation& alloc,
                    const SocialGraph& graph, int v);

bool is_locally_proportional(const QueryOracle& oracle, const Allocation& alloc,
                             const SocialGraph& graph);

bool is_locally_envy_free(const QueryOracle& oracle, const Allocation& alloc,
                          const SocialGraph& graph);

/// f_v(A_v) >= f_v(A_u) + f_v(R).
bool dominates(const QueryOracle& oracle, const Allocation& alloc, int v, int u);

/// f_v(A_v) >= (1/d_v) (sum over neighbors of f_v(A_u) + f_v(R)).
bool is_dominant(const QueryOracle& oracle, const Allocation& alloc,
                 const SocialGraph& graph, int v);

/// Envy-freeness over every ordered pair drawn from `agents`.
bool envy_free_among(const QueryOracle& oracle, const Allocation& alloc,
                     const std::vector<int>& agents);

FairnessReport audit_fairness(const QueryOracle& oracle, const Allocation& alloc,
                              const SocialGraph& graph);

}  // namespace graphcake

#pragma once

#include <cstddef>
#include <vector>

#include "fundcost/engine.hpp"
#include "fundcost/fva.hpp"

namespace fundcost {

// One maturity decision: issue quote `quote_index` at payment date `from`,
// rolling at `to`. Cost is the expected discounted funding cost over the
// arc's interval, estimated on the shared path set so arcs are comparable
// without Monte Carlo noise between alternatives.
struct PolicyArc {
    std::size_t from = 0;
    std::size_t to = 0;
    std::size_t quote_index = 0;
    double cost = 0.0;
};

// DAG over payment-date nodes 0..N with one outgoing arc per quote at each
// non-terminal node. Arcs at a node are ordered longest maturity first;
// solve and brute_force keep the first of equal-cost alternatives, so this
// ordering is the tie-break rule.
struct PolicyGraph {
    std::vector<double> node_times;
    std::vector<std::size_t> node_steps;  // grid index per node
    std::vector<FundingQuote> quotes;
    std::vector<std::vector<PolicyArc>> arcs;  // outgoing arcs per node

    std::size_t terminal() const { return node_times.size() - 1; }
};

// A maturity choice per visited payment date, from node 0 to the terminal.
// total_cost is the sum of the arc costs, accumulated from the last arc
// backwards, which is exactly how the backward induction computes it.
struct FundingPolicy {
    std::vector<std::size_t> node_path;
    std::vector<std::size_t> quote_choices;
    double total_cost = 0.0;
};

// Expected arc costs for every (payment date, quote) pair. The rate paths
// are exogenous to the maturity decision, so each arc's expected cost is a
// plain Monte Carlo mean and the stochastic control problem collapses to a
// deterministic shortest path over this graph. Quotes whose maturity
// overshoots the swap's end are clipped at the terminal node.
PolicyGraph build_graph(const ScenarioData& scenario, const BalanceConfig& balance,
                        const std::vector<FundingQuote>& quotes, int threads = 1);

// Backward induction V_i = min over arcs (cost + V_j) with V_terminal = 0.
// Throws std::runtime_error when the terminal node cannot be reached.
FundingPolicy solve(const PolicyGraph& graph);

// Enumerates every feasible maturity sequence and returns the exact
// minimizer under the same tie-break. Throws std::runtime_error when more
// than 10^6 sequences would be enumerated.
FundingPolicy brute_force(const PolicyGraph& graph);

// Number of distinct quote sequences from node 0 to the terminal, saturated
// at just above the brute-force limit.
std::size_t count_sequences(const PolicyGraph& graph);

// The policy that rolls the same quote at every decision node.
FundingPolicy fixed_policy(const PolicyGraph& graph, std::size_t quote_index);

// Per-path realized cost of a given policy, for standard errors of the
// policy-cost estimates reported next to the DP values.
std::vector<double> policy_cost_samples(const ScenarioData& scenario,
                                        const BalanceConfig& balance, const PolicyGraph& graph,
                                        const FundingPolicy& policy, int threads = 1);

}  // namespace fundcost

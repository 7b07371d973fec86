#include "fundcost/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "fundcost/parallel.hpp"
#include "fundcost/stats.hpp"

namespace fundcost {

namespace {

constexpr std::size_t brute_force_limit = 1000000;

std::size_t duration_periods(const FundingQuote& quote, double payment_period) {
    const double periods = quote.maturity_years / payment_period;
    const auto whole = static_cast<long long>(std::llround(periods));
    if (whole < 1 || std::abs(periods - static_cast<double>(whole)) > 1e-9)
        throw std::invalid_argument(
            "build_graph: quote maturity must be a whole number of payment periods");
    return static_cast<std::size_t>(whole);
}

void validate_graph(const PolicyGraph& graph) {
    if (graph.node_times.size() < 2)
        throw std::invalid_argument("optimizer: graph needs at least two nodes");
    if (graph.arcs.size() != graph.node_times.size())
        throw std::invalid_argument("optimizer: arc table does not match node count");
    for (std::size_t i = 0; i < graph.arcs.size(); ++i) {
        for (const PolicyArc& arc : graph.arcs[i]) {
            if (arc.from != i || arc.to <= arc.from || arc.to > graph.terminal())
                throw std::invalid_argument("optimizer: arc does not advance through the graph");
        }
    }
}

}  // namespace

PolicyGraph build_graph(const ScenarioData& scenario, const BalanceConfig& balance,
                        const std::vector<FundingQuote>& quotes, int threads) {
    balance.validate();
    if (quotes.empty()) throw std::invalid_argument("build_graph: quotes must be non-empty");
    for (const FundingQuote& q : quotes) q.validate();

    const TimeGrid& grid = scenario.grid;
    const double period = grid.payment_period();
    const std::size_t n_nodes = grid.payment_indices.size();
    const std::size_t terminal = n_nodes - 1;
    const std::size_t n_steps = grid.size();
    const std::size_t n_paths = scenario.paths.n_paths;

    PolicyGraph graph;
    graph.quotes = quotes;
    graph.node_steps = grid.payment_indices;
    graph.node_times.resize(n_nodes);
    for (std::size_t i = 0; i < n_nodes; ++i)
        graph.node_times[i] = grid.times[grid.payment_indices[i]];
    graph.arcs.resize(n_nodes);

    // Quote order at each node encodes the tie-break: longest maturity first.
    std::vector<std::size_t> order(quotes.size());
    for (std::size_t q = 0; q < order.size(); ++q) order[q] = q;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return quotes[a].maturity_years > quotes[b].maturity_years;
    });

    // Per quote, integrate its per-step cost into per-node prefix sums on
    // every path, then average prefix differences into arc costs.
    std::vector<double> arc_samples(n_paths);
    for (std::size_t q : order) {
        const FundingQuote& quote = quotes[q];
        const std::size_t duration = duration_periods(quote, period);

        std::vector<double> prefix(n_paths * n_nodes);
        parallel_for(n_paths, threads, [&](std::size_t begin, std::size_t end) {
            for (std::size_t p = begin; p < end; ++p) {
                const double* rates = scenario.paths.rates.data() + p * n_steps;
                const double* rsf = scenario.rsf.data() + p * n_steps;
                const double* collateral = scenario.collateral.data() + p * n_steps;
                double* pre = prefix.data() + p * n_nodes;

                double rate_integral = 0.0;
                double running = 0.0;
                std::size_t node = 0;
                pre[0] = 0.0;
                for (std::size_t k = 0; k + 1 < n_steps; ++k) {
                    if (k == grid.payment_indices[node + 1]) {
                        ++node;
                        pre[node] = running;
                    }
                    const double t = grid.times[k];
                    const double dt = grid.dt(k);
                    const double df = std::exp(-(rate_integral + quote.spread * t));
                    const double debt = required_debt(rsf[k], balance.reg_capital, quote.alpha);
                    const double shortfall = std::max(collateral[k] - debt, 0.0);
                    running +=
                        df * (quote.spread * debt + quote.shortfall_spread * shortfall) * dt;
                    rate_integral += rates[k] * dt;
                }
                for (std::size_t m = node + 1; m < n_nodes; ++m) pre[m] = running;
            }
        });

        for (std::size_t i = 0; i < terminal; ++i) {
            const std::size_t j = std::min(i + duration, terminal);
            for (std::size_t p = 0; p < n_paths; ++p) {
                const double* pre = prefix.data() + p * n_nodes;
                arc_samples[p] = pre[j] - pre[i];
            }
            PolicyArc arc;
            arc.from = i;
            arc.to = j;
            arc.quote_index = q;
            arc.cost = mean_and_se(arc_samples).value;
            graph.arcs[i].push_back(arc);
        }
    }
    return graph;
}

FundingPolicy solve(const PolicyGraph& graph) {
    validate_graph(graph);
    const std::size_t terminal = graph.terminal();
    const double inf = std::numeric_limits<double>::infinity();

    std::vector<double> value(terminal + 1, inf);
    std::vector<std::size_t> best(terminal + 1, 0);
    value[terminal] = 0.0;
    for (std::size_t ii = terminal; ii-- > 0;) {
        for (std::size_t a = 0; a < graph.arcs[ii].size(); ++a) {
            const PolicyArc& arc = graph.arcs[ii][a];
            const double candidate = arc.cost + value[arc.to];
            if (candidate < value[ii]) {
                value[ii] = candidate;
                best[ii] = a;
            }
        }
    }
    if (!(value[0] < inf)) throw std::runtime_error("solve: terminal node unreachable");

    FundingPolicy policy;
    policy.total_cost = value[0];
    std::size_t node = 0;
    policy.node_path.push_back(node);
    while (node != terminal) {
        const PolicyArc& arc = graph.arcs[node][best[node]];
        policy.quote_choices.push_back(arc.quote_index);
        node = arc.to;
        policy.node_path.push_back(node);
    }
    return policy;
}

std::size_t count_sequences(const PolicyGraph& graph) {
    validate_graph(graph);
    const std::size_t terminal = graph.terminal();
    const std::size_t cap = brute_force_limit + 1;
    std::vector<std::size_t> count(terminal + 1, 0);
    count[terminal] = 1;
    for (std::size_t ii = terminal; ii-- > 0;) {
        std::size_t total = 0;
        for (const PolicyArc& arc : graph.arcs[ii]) {
            total += count[arc.to];
            if (total > cap) {
                total = cap;
                break;
            }
        }
        count[ii] = total;
    }
    return count[0];
}

FundingPolicy brute_force(const PolicyGraph& graph) {
    if (count_sequences(graph) > brute_force_limit)
        throw std::runtime_error("brute_force: too many maturity sequences to enumerate");
    const std::size_t terminal = graph.terminal();

    FundingPolicy best;
    best.total_cost = std::numeric_limits<double>::infinity();
    bool found = false;
    std::vector<const PolicyArc*> stack;

    // Depth-first over arcs in stored order, so the first minimum found is
    // the same one backward induction reconstructs.
    auto visit = [&](auto&& self, std::size_t node) -> void {
        if (node == terminal) {
            double cost = 0.0;
            for (std::size_t a = stack.size(); a-- > 0;) cost = stack[a]->cost + cost;
            if (!found || cost < best.total_cost) {
                found = true;
                best.total_cost = cost;
                best.node_path.assign(1, 0);
                best.quote_choices.clear();
                for (const PolicyArc* arc : stack) {
                    best.quote_choices.push_back(arc->quote_index);
                    best.node_path.push_back(arc->to);
                }
            }
            return;
        }
        for (const PolicyArc& arc : graph.arcs[node]) {
            stack.push_back(&arc);
            self(self, arc.to);
            stack.pop_back();
        }
    };
    visit(visit, 0);
    if (!found) throw std::runtime_error("brute_force: terminal node unreachable");
    return best;
}

FundingPolicy fixed_policy(const PolicyGraph& graph, std::size_t quote_index) {
    validate_graph(graph);
    if (quote_index >= graph.quotes.size())
        throw std::invalid_argument("fixed_policy: quote index out of range");
    const std::size_t terminal = graph.terminal();

    FundingPolicy policy;
    std::vector<const PolicyArc*> arcs;
    std::size_t node = 0;
    policy.node_path.push_back(node);
    while (node != terminal) {
        const PolicyArc* next = nullptr;
        for (const PolicyArc& arc : graph.arcs[node]) {
            if (arc.quote_index == quote_index) {
                next = &arc;
                break;
            }
        }
        if (next == nullptr)
            throw std::runtime_error("fixed_policy: node has no arc for the quote");
        arcs.push_back(next);
        policy.quote_choices.push_back(quote_index);
        node = next->to;
        policy.node_path.push_back(node);
    }
    double cost = 0.0;
    for (std::size_t a = arcs.size(); a-- > 0;) cost = arcs[a]->cost + cost;
    policy.total_cost = cost;
    return policy;
}

std::vector<double> policy_cost_samples(const ScenarioData& scenario,
                                        const BalanceConfig& balance, const PolicyGraph& graph,
                                        const FundingPolicy& policy, int threads) {
    balance.validate();
    if (policy.node_path.size() != policy.quote_choices.size() + 1 || policy.node_path.empty())
        throw std::invalid_argument("policy_cost_samples: malformed policy");

    const TimeGrid& grid = scenario.grid;
    const std::size_t n_steps = grid.size();
    std::vector<double> samples(scenario.paths.n_paths);

    parallel_for(scenario.paths.n_paths, threads, [&](std::size_t begin, std::size_t end) {
        std::vector<double> cum(n_steps, 0.0);
        for (std::size_t p = begin; p < end; ++p) {
            const double* rates = scenario.paths.rates.data() + p * n_steps;
            const double* rsf = scenario.rsf.data() + p * n_steps;
            const double* collateral = scenario.collateral.data() + p * n_steps;

            double rate_integral = 0.0;
            for (std::size_t k = 0; k + 1 < n_steps; ++k) {
                cum[k] = rate_integral;
                rate_integral += rates[k] * grid.dt(k);
            }

            // Accumulate arcs from the last one backwards, mirroring the
            // fold order of the graph costs.
            double total = 0.0;
            for (std::size_t a = policy.quote_choices.size(); a-- > 0;) {
                const FundingQuote& quote = graph.quotes[policy.quote_choices[a]];
                const std::size_t k_begin = graph.node_steps[policy.node_path[a]];
                const std::size_t k_end = graph.node_steps[policy.node_path[a + 1]];
                double arc_cost = 0.0;
                for (std::size_t k = k_begin; k < k_end; ++k) {
                    const double t = grid.times[k];
                    const double dt = grid.dt(k);
                    const double df = std::exp(-(cum[k] + quote.spread * t));
                    const double debt = required_debt(rsf[k], balance.reg_capital, quote.alpha);
                    const double shortfall = std::max(collateral[k] - debt, 0.0);
                    arc_cost +=
                        df * (quote.spread * debt + quote.shortfall_spread * shortfall) * dt;
                }
                total = arc_cost + total;
            }
            samples[p] = total;
        }
    });
    return samples;
}

}  // namespace fundcost

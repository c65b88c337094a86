#pragma once

#include <optional>

#include "mgm/cypher.hpp"
#include "mgm/index.hpp"
#include "mgm/query_graph.hpp"

namespace mgm {

// Oriented target pairs compatible with one connected query pair (a, b),
// a <= b: entry (x, y) means x plays a and y plays b. Entries are sorted; a
// secondary index orders them by second component for scans from the other
// endpoint.
struct compatibility_domain {
    std::vector<std::pair<node_id, node_id>> entries;
    std::vector<std::uint32_t> by_second;

    auto size() const -> std::size_t { return entries.size(); }

    auto contains(node_id x, node_id y) const -> bool
    {
        return std::binary_search(entries.begin(), entries.end(), std::make_pair(x, y));
    }
};

struct domain_map {
    std::vector<query_pair> pairs;                 // sorted by (a, b)
    std::vector<compatibility_domain> domains;     // aligned with pairs
    std::unordered_map<std::uint64_t, std::size_t> pair_index;
    std::vector<std::optional<type_id>> edge_target_types;  // per query edge; nullopt = untyped

    auto index_of(node_id a, node_id b) const -> std::size_t
    {
        return pair_index.at(pair_key(std::min(a, b), std::max(a, b)));
    }

    auto any_empty() const -> bool
    {
        for (const auto & d : domains)
            if (d.entries.empty()) return true;
        return domains.empty();
    }
};

struct domain_options {
    bool use_bitmatrix = true;     // off: degree and label-superset filtering only
    bool paper_strict = false;     // defer inline node property checks to match time
};

// Two rows per connected query pair, both orientations, on target alphabet
// columns; rows[2i] is pairs[i] forward, rows[2i+1] reversed. Returns nullopt
// when a query label or type is absent from the target alphabet, in which
// case the query has no occurrences.
auto build_query_bit_matrix(const query_graph & q, const multigraph & target)
    -> std::optional<bit_signature_matrix>;

// Type-dependent degree conditions: for every type, the query endpoint's
// in/out degrees must not exceed the matched target endpoint's.
auto degree_check(const query_graph & q, const multigraph & target, const target_index & idx,
                  node_id q_first, node_id q_second, node_id t_first, node_id t_second) -> bool;

// Per-node domain-time WHERE conditions (entity op constant), indexed by
// query node id.
using node_conditions = std::vector<std::vector<atomic_condition>>;

auto compute_domains(const query_graph & q, const multigraph & target, const target_index & idx,
                     const node_conditions & conds, const domain_options & opts)
    -> std::optional<domain_map>;

}

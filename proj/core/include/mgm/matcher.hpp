#pragma once

#include <chrono>
#include <functional>

#include "mgm/domains.hpp"
#include "mgm/ordering.hpp"
#include "mgm/symmetry.hpp"

namespace mgm {

struct occurrence {
    std::vector<node_id> f;  // query node -> target node
    std::vector<edge_id> g;  // query edge -> target edge

    // the occurrence's identity: the set of mapped target edges
    auto edge_image() const -> std::vector<edge_id>
    {
        auto img = g;
        std::sort(img.begin(), img.end());
        return img;
    }
};

enum class match_status { completed, timeout };

struct match_options {
    std::optional<std::uint64_t> limit;
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

// Return false to stop the search (LIMIT handling).
using occurrence_sink = std::function<bool(const occurrence &)>;

// Both checks run symmetrically: a proposed image is compared against every
// already-mapped orbit partner on either side of a condition, which stays
// correct under any edge ordering.
auto check_node_break_cond(const breaking_conditions & conds, node_id q_node, node_id t_node,
                           std::span<const node_id> f) -> bool;
auto check_edge_break_cond(const breaking_conditions & conds, edge_id q_edge, edge_id t_edge,
                           std::span<const edge_id> g) -> bool;

// Depth-first search over the edge ordering with per-depth materialized
// candidate lists and cursors. where_atoms is the residual conjunction; each
// atom is evaluated at the earliest depth that binds all its entities.
auto match_all(const query_graph & q, const multigraph & target, const target_index & idx,
               const breaking_conditions & conds, const domain_map & domains,
               const edge_ordering & order, const std::vector<atomic_condition> & where_atoms,
               const match_options & opts, const occurrence_sink & sink) -> match_status;

}

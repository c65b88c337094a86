#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "mgm/bitsignature.hpp"
#include "mgm/multigraph.hpp"

namespace mgm {

// One vertex per distinct label set occurring in the target; members hold the
// nodes carrying exactly that set. covers lists the vertices whose label set
// immediately contains this one (transitive reachability answers superset
// queries).
struct node_label_graph {
    struct vertex {
        std::vector<label_id> label_set;  // sorted
        std::vector<node_id> members;
        std::vector<std::uint32_t> covers;
    };
    std::vector<vertex> vertices;
};

inline auto pair_key(node_id a, node_id b) -> std::uint64_t
{
    return (std::uint64_t{a} << 32) | b;
}

// Two-level map: ordered node pair -> type -> edge ids.
struct edge_types_map {
    std::unordered_map<std::uint64_t, std::unordered_map<type_id, std::vector<edge_id>>> outer;

    auto find(node_id src, node_id dst, type_id t) const -> const std::vector<edge_id> *
    {
        auto it = outer.find(pair_key(src, dst));
        if (it == outer.end()) return nullptr;
        auto jt = it->second.find(t);
        if (jt == it->second.end()) return nullptr;
        return &jt->second;
    }

    auto find_pair(node_id src, node_id dst) const
        -> const std::unordered_map<type_id, std::vector<edge_id>> *
    {
        auto it = outer.find(pair_key(src, dst));
        return it == outer.end() ? nullptr : &it->second;
    }
};

// All index structures describe the same multigraph snapshot.
struct target_index {
    node_label_graph label_graph;
    edge_types_map edge_types;
    std::vector<property_map> edge_properties;  // one entry per edge
    signature_layout layout;
    std::vector<bit_signature_row> rows;  // sorted by (first, second), first <= second

    // flat [node * n_types + type] -> (out count, in count)
    std::vector<std::pair<std::uint32_t, std::uint32_t>> type_degrees;

    auto t_degree(node_id u, type_id t, edge_dir dir) const -> std::uint32_t
    {
        const auto & cell = type_degrees[std::size_t{u} * layout.n_types + t];
        return dir == edge_dir::out ? cell.first : cell.second;
    }
};

// skip_signature_scan is used by snapshot loading, where rows and the degree
// cache come from the file instead.
auto build_target_index(const multigraph & g, bool skip_signature_scan = false) -> target_index;

// Exactly the nodes u with wanted ⊆ σ(u), ascending; wanted must be sorted.
// An empty wanted set matches every node.
auto nodes_with_label_superset(const target_index & idx, const std::vector<label_id> & wanted)
    -> std::vector<node_id>;

// Binary snapshot so repeated runs skip the rebuild. Save/load round-trips
// bit-exactly (saving a loaded snapshot reproduces the same bytes).
auto save_index_snapshot(const std::string & path, const multigraph & g, const target_index & idx)
    -> void;
auto load_index_snapshot(const std::string & path) -> std::pair<multigraph, target_index>;

}

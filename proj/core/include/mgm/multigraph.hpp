#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "mgm/property.hpp"

namespace mgm {

using node_id = std::uint32_t;
using edge_id = std::uint32_t;
using label_id = std::uint32_t;
using type_id = std::uint32_t;

enum class edge_dir { out, in };

struct graph_node {
    std::vector<label_id> labels;  // sorted, may be empty only for query graphs
    property_map props;
};

struct graph_edge {
    node_id src;
    node_id dst;
    type_id type;
    property_map props;
};

// Immutable-after-build labeled attributed multigraph. Node and edge ids are
// dense 0..n-1 / 0..m-1; loaders keep the original external id in the
// "_orig_id" metadata property.
class multigraph {
public:
    auto n_nodes() const -> std::size_t { return nodes_.size(); }
    auto n_edges() const -> std::size_t { return edges_.size(); }

    auto node(node_id u) const -> const graph_node & { return nodes_.at(u); }
    auto edge(edge_id e) const -> const graph_edge & { return edges_.at(e); }

    auto out_edges(node_id u) const -> std::span<const edge_id> { return out_.at(u); }
    auto in_edges(node_id u) const -> std::span<const edge_id> { return in_.at(u); }

    auto out_degree(node_id u) const -> std::size_t { return out_.at(u).size(); }
    auto in_degree(node_id u) const -> std::size_t { return in_.at(u).size(); }
    auto tot_degree(node_id u) const -> std::size_t { return out_degree(u) + in_degree(u); }

    // Number of edges of type t with u as source (out) or destination (in),
    // counting parallel edges.
    auto t_degree(node_id u, type_id t, edge_dir dir) const -> std::size_t;

    // Distinct nodes adjacent to u in either direction; contains u itself only
    // when u has a self-loop. Sorted.
    auto neighbours(node_id u) const -> std::vector<node_id>;

    auto has_label(node_id u, label_id l) const -> bool
    {
        const auto & ls = nodes_[u].labels;
        return std::binary_search(ls.begin(), ls.end(), l);
    }

    auto labels_superset(node_id u, const std::vector<label_id> & wanted) const -> bool
    {
        const auto & ls = nodes_[u].labels;
        return std::includes(ls.begin(), ls.end(), wanted.begin(), wanted.end());
    }

    auto label_alphabet() const -> const std::vector<std::string> & { return label_alphabet_; }
    auto type_alphabet() const -> const std::vector<std::string> & { return type_alphabet_; }

    auto label_name(label_id l) const -> const std::string & { return label_alphabet_.at(l); }
    auto type_name(type_id t) const -> const std::string & { return type_alphabet_.at(t); }

    auto find_label(const std::string & name) const -> std::optional<label_id>
    {
        auto it = label_ids_.find(name);
        if (it == label_ids_.end()) return std::nullopt;
        return it->second;
    }

    auto find_type(const std::string & name) const -> std::optional<type_id>
    {
        auto it = type_ids_.find(name);
        if (it == type_ids_.end()) return std::nullopt;
        return it->second;
    }

    // External id for output: the "_orig_id" metadata property when present,
    // otherwise the internal id.
    auto orig_node_id(node_id u) const -> std::int64_t;
    auto orig_edge_id(edge_id e) const -> std::int64_t;

private:
    friend class graph_builder;

    std::vector<graph_node> nodes_;
    std::vector<graph_edge> edges_;
    std::vector<std::vector<edge_id>> out_;
    std::vector<std::vector<edge_id>> in_;
    std::vector<std::string> label_alphabet_;  // lexicographically sorted
    std::vector<std::string> type_alphabet_;   // lexicographically sorted
    std::unordered_map<std::string, label_id> label_ids_;
    std::unordered_map<std::string, type_id> type_ids_;
};

// Accumulates nodes and edges with string labels/types, then freezes them into
// a multigraph with sorted alphabets and adjacency lists.
class graph_builder {
public:
    // Returns the internal id the node will get (insertion order).
    auto add_node(std::vector<std::string> labels, property_map props = {}) -> node_id;
    auto add_edge(node_id src, node_id dst, std::string type, property_map props = {}) -> edge_id;

    auto n_nodes() const -> std::size_t { return node_labels_.size(); }

    auto build() && -> multigraph;

private:
    std::vector<std::vector<std::string>> node_labels_;
    std::vector<property_map> node_props_;
    struct pending_edge {
        node_id src;
        node_id dst;
        std::string type;
        property_map props;
    };
    std::vector<pending_edge> edges_;
};

}

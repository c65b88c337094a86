#pragma once

#include <unordered_map>

#include "mgm/cypher.hpp"
#include "mgm/multigraph.hpp"

namespace mgm {

// A query as a multigraph plus pattern metadata. Undirected pattern edges are
// stored left-to-right with a flag; they match a target edge in either
// direction and are excluded from directional degree counts.
struct query_graph {
    multigraph g;
    std::vector<bool> undirected;
    std::vector<bool> untyped;  // untyped pattern edges match any target type
    std::vector<std::string> node_names;
    std::vector<std::string> edge_names;
    std::unordered_map<std::string, node_id> node_ids;
    std::unordered_map<std::string, edge_id> edge_ids;

    auto n_nodes() const -> std::size_t { return g.n_nodes(); }
    auto n_edges() const -> std::size_t { return g.n_edges(); }

    // t-dependent degree counting directed edges only (local type ids).
    auto directed_t_degree(node_id u, type_id t, edge_dir dir) const -> std::size_t
    {
        auto incident = (dir == edge_dir::out) ? g.out_edges(u) : g.in_edges(u);
        std::size_t count = 0;
        for (edge_id e : incident)
            if (!undirected[e] && g.edge(e).type == t) ++count;
        return count;
    }
};

// A connected query node pair (a <= b; a == b for self-loops) with all its
// edges, ascending by edge id.
struct query_pair {
    node_id a;
    node_id b;
    std::vector<edge_id> edges;
};

// All connected pairs, sorted by (a, b).
auto connected_pairs(const query_graph & q) -> std::vector<query_pair>;

// Node ids follow MATCH first-mention order, edge ids pattern order.
auto build_query_graph(const query_ast & ast) -> query_graph;

// Wraps an ordinary multigraph (all edges directed) as a query; names are
// synthesized as n<i> / e<i>.
auto query_from_multigraph(multigraph g) -> query_graph;

}

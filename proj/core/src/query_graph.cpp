#include "mgm/query_graph.hpp"

#include <map>

namespace mgm {

auto connected_pairs(const query_graph & q) -> std::vector<query_pair>
{
    std::map<std::pair<node_id, node_id>, std::vector<edge_id>> pairs;
    for (edge_id e = 0; e < q.n_edges(); ++e) {
        const auto & ed = q.g.edge(e);
        pairs[{std::min(ed.src, ed.dst), std::max(ed.src, ed.dst)}].push_back(e);
    }
    std::vector<query_pair> out;
    out.reserve(pairs.size());
    for (auto & [key, edges] : pairs) {
        std::sort(edges.begin(), edges.end());
        out.push_back({key.first, key.second, std::move(edges)});
    }
    return out;
}

auto build_query_graph(const query_ast & ast) -> query_graph
{
    query_graph q;
    graph_builder builder;

    for (const auto & np : ast.nodes) {
        q.node_ids.emplace(np.name, builder.add_node(np.labels, np.inline_props));
        q.node_names.push_back(np.name);
    }

    for (const auto & ep : ast.edges) {
        auto left = q.node_ids.at(ep.left);
        auto right = q.node_ids.at(ep.right);
        auto src = (ep.dir == pattern_dir::right_to_left) ? right : left;
        auto dst = (ep.dir == pattern_dir::right_to_left) ? left : right;
        // untyped patterns use a reserved placeholder outside the user alphabet
        auto e = builder.add_edge(src, dst, ep.etype.value_or("#any"), ep.inline_props);
        q.edge_ids.emplace(ep.name, e);
        q.edge_names.push_back(ep.name);
        q.undirected.push_back(ep.dir == pattern_dir::undirected);
        q.untyped.push_back(!ep.etype.has_value());
    }

    q.g = std::move(builder).build();
    return q;
}

auto query_from_multigraph(multigraph g) -> query_graph
{
    query_graph q;
    q.undirected.assign(g.n_edges(), false);
    q.untyped.assign(g.n_edges(), false);
    for (node_id u = 0; u < g.n_nodes(); ++u) {
        q.node_names.push_back("n" + std::to_string(u));
        q.node_ids.emplace(q.node_names.back(), u);
    }
    for (edge_id e = 0; e < g.n_edges(); ++e) {
        q.edge_names.push_back("e" + std::to_string(e));
        q.edge_ids.emplace(q.edge_names.back(), e);
    }
    q.g = std::move(g);
    return q;
}

}

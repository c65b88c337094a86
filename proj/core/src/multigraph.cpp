#include "mgm/multigraph.hpp"

#include <set>
#include <stdexcept>

namespace mgm {

auto multigraph::t_degree(node_id u, type_id t, edge_dir dir) const -> std::size_t
{
    if (u >= nodes_.size())
        throw std::out_of_range("t_degree: unknown node id " + std::to_string(u));
    const auto & incident = (dir == edge_dir::out) ? out_[u] : in_[u];
    std::size_t count = 0;
    for (edge_id e : incident)
        if (edges_[e].type == t) ++count;
    return count;
}

auto multigraph::neighbours(node_id u) const -> std::vector<node_id>
{
    std::set<node_id> seen;
    for (edge_id e : out_.at(u)) seen.insert(edges_[e].dst);
    for (edge_id e : in_.at(u)) seen.insert(edges_[e].src);
    return {seen.begin(), seen.end()};
}

namespace {
    auto orig_id_or(const property_map & props, std::int64_t fallback) -> std::int64_t
    {
        auto it = props.find("_orig_id");
        if (it != props.end() && it->second.which() == property_value::kind::integer)
            return it->second.as_integer();
        return fallback;
    }
}

auto multigraph::orig_node_id(node_id u) const -> std::int64_t
{
    return orig_id_or(nodes_.at(u).props, static_cast<std::int64_t>(u));
}

auto multigraph::orig_edge_id(edge_id e) const -> std::int64_t
{
    return orig_id_or(edges_.at(e).props, static_cast<std::int64_t>(e));
}

auto graph_builder::add_node(std::vector<std::string> labels, property_map props) -> node_id
{
    node_labels_.push_back(std::move(labels));
    node_props_.push_back(std::move(props));
    return static_cast<node_id>(node_labels_.size() - 1);
}

auto graph_builder::add_edge(node_id src, node_id dst, std::string type, property_map props) -> edge_id
{
    if (src >= node_labels_.size() || dst >= node_labels_.size())
        throw std::out_of_range("add_edge: endpoint does not exist");
    edges_.push_back({src, dst, std::move(type), std::move(props)});
    return static_cast<edge_id>(edges_.size() - 1);
}

auto graph_builder::build() && -> multigraph
{
    multigraph g;

    std::set<std::string> labels, types;
    for (const auto & ls : node_labels_) labels.insert(ls.begin(), ls.end());
    for (const auto & e : edges_) types.insert(e.type);

    g.label_alphabet_.assign(labels.begin(), labels.end());
    g.type_alphabet_.assign(types.begin(), types.end());
    for (label_id i = 0; i < g.label_alphabet_.size(); ++i)
        g.label_ids_.emplace(g.label_alphabet_[i], i);
    for (type_id i = 0; i < g.type_alphabet_.size(); ++i)
        g.type_ids_.emplace(g.type_alphabet_[i], i);

    g.nodes_.reserve(node_labels_.size());
    for (std::size_t u = 0; u < node_labels_.size(); ++u) {
        graph_node n;
        n.labels.reserve(node_labels_[u].size());
        for (const auto & l : node_labels_[u]) n.labels.push_back(g.label_ids_.at(l));
        std::sort(n.labels.begin(), n.labels.end());
        n.labels.erase(std::unique(n.labels.begin(), n.labels.end()), n.labels.end());
        n.props = std::move(node_props_[u]);
        g.nodes_.push_back(std::move(n));
    }

    g.out_.resize(g.nodes_.size());
    g.in_.resize(g.nodes_.size());
    g.edges_.reserve(edges_.size());
    for (auto & pe : edges_) {
        auto e = static_cast<edge_id>(g.edges_.size());
        g.edges_.push_back({pe.src, pe.dst, g.type_ids_.at(pe.type), std::move(pe.props)});
        g.out_[pe.src].push_back(e);
        g.in_[pe.dst].push_back(e);
    }

    return g;
}

}

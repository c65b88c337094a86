#include "mgm/index.hpp"

#include <map>
#include <set>

namespace mgm {

namespace {

    auto build_label_graph(const multigraph & g) -> node_label_graph
    {
        std::map<std::vector<label_id>, std::vector<node_id>> groups;
        for (node_id u = 0; u < g.n_nodes(); ++u)
            groups[g.node(u).labels].push_back(u);

        node_label_graph nlg;
        nlg.vertices.reserve(groups.size());
        for (auto & [set, members] : groups)
            nlg.vertices.push_back({set, std::move(members), {}});

        auto strict_subset = [](const std::vector<label_id> & a, const std::vector<label_id> & b) {
            return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
        };

        // covering edges only: i -> j iff i ⊂ j with no k strictly between
        for (std::uint32_t i = 0; i < nlg.vertices.size(); ++i) {
            for (std::uint32_t j = 0; j < nlg.vertices.size(); ++j) {
                if (i == j || !strict_subset(nlg.vertices[i].label_set, nlg.vertices[j].label_set))
                    continue;
                bool covering = true;
                for (std::uint32_t k = 0; k < nlg.vertices.size() && covering; ++k)
                    if (k != i && k != j &&
                        strict_subset(nlg.vertices[i].label_set, nlg.vertices[k].label_set) &&
                        strict_subset(nlg.vertices[k].label_set, nlg.vertices[j].label_set))
                        covering = false;
                if (covering) nlg.vertices[i].covers.push_back(j);
            }
        }
        return nlg;
    }

}

auto build_target_index(const multigraph & g, bool skip_signature_scan) -> target_index
{
    target_index idx;
    idx.layout.n_labels = static_cast<std::uint32_t>(g.label_alphabet().size());
    idx.layout.n_types = static_cast<std::uint32_t>(g.type_alphabet().size());

    idx.label_graph = build_label_graph(g);

    idx.edge_properties.reserve(g.n_edges());
    for (edge_id e = 0; e < g.n_edges(); ++e) {
        const auto & ed = g.edge(e);
        idx.edge_types.outer[pair_key(ed.src, ed.dst)][ed.type].push_back(e);
        idx.edge_properties.push_back(ed.props);
    }

    idx.type_degrees.assign(g.n_nodes() * idx.layout.n_types, {0, 0});
    if (skip_signature_scan) return idx;
    if (idx.layout.n_types > 0) {
        for (edge_id e = 0; e < g.n_edges(); ++e) {
            const auto & ed = g.edge(e);
            ++idx.type_degrees[std::size_t{ed.src} * idx.layout.n_types + ed.type].first;
            ++idx.type_degrees[std::size_t{ed.dst} * idx.layout.n_types + ed.type].second;
        }
    }

    // one row per connected unordered pair; a self-loop sets both direction
    // bits of its type
    std::map<std::pair<node_id, node_id>, std::pair<std::set<type_id>, std::set<type_id>>> pairs;
    for (edge_id e = 0; e < g.n_edges(); ++e) {
        const auto & ed = g.edge(e);
        auto a = std::min(ed.src, ed.dst);
        auto b = std::max(ed.src, ed.dst);
        auto & [types_out, types_in] = pairs[{a, b}];
        if (ed.src == ed.dst) {
            types_out.insert(ed.type);
            types_in.insert(ed.type);
        }
        else if (ed.src == a)
            types_out.insert(ed.type);
        else
            types_in.insert(ed.type);
    }

    idx.rows.reserve(pairs.size());
    for (const auto & [pr, types] : pairs) {
        std::vector<type_id> out(types.first.begin(), types.first.end());
        std::vector<type_id> in(types.second.begin(), types.second.end());
        idx.rows.push_back({pr.first, pr.second,
                            make_signature(idx.layout, g.node(pr.first).labels,
                                           g.node(pr.second).labels, out, in)});
    }

    return idx;
}

auto nodes_with_label_superset(const target_index & idx, const std::vector<label_id> & wanted)
    -> std::vector<node_id>
{
    std::vector<node_id> out;
    for (const auto & v : idx.label_graph.vertices) {
        if (std::includes(v.label_set.begin(), v.label_set.end(), wanted.begin(), wanted.end()))
            out.insert(out.end(), v.members.begin(), v.members.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

}

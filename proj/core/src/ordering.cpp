#include "mgm/ordering.hpp"

#include <set>

#include "mgm/errors.hpp"
#include "mgm/rng.hpp"

namespace mgm {

auto ordering_kind_from_name(const std::string & name) -> ordering_kind
{
    if (name == "full") return ordering_kind::full;
    if (name == "random") return ordering_kind::random;
    if (name == "domain") return ordering_kind::domain_cardinality;
    if (name == "edgelabel") return ordering_kind::edge_label_frequency;
    if (name == "degree") return ordering_kind::degree_only;
    throw config_error("unknown ordering kind '" + name +
                       "' (expected full|random|domain|edgelabel|degree)");
}

auto ordering_kind_name(ordering_kind kind) -> const char *
{
    switch (kind) {
        case ordering_kind::full: return "full";
        case ordering_kind::random: return "random";
        case ordering_kind::domain_cardinality: return "domain";
        case ordering_kind::edge_label_frequency: return "edgelabel";
        case ordering_kind::degree_only: return "degree";
    }
    return "?";
}

auto jaccard(const query_graph & q, node_id a, node_id b) -> double
{
    auto na = q.g.neighbours(a);
    auto nb = q.g.neighbours(b);
    std::vector<node_id> inter, uni;
    std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(inter));
    std::set_union(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(uni));
    if (uni.empty()) return 0.0;
    return static_cast<double>(inter.size()) / static_cast<double>(uni.size());
}

auto pair_score(const query_graph & q, node_id a, node_id b, int cf, node_id free_node,
                std::size_t domain_size) -> double
{
    auto dom = static_cast<double>(domain_size);
    switch (cf) {
        case 0:
            return static_cast<double>(q.g.tot_degree(a)) * static_cast<double>(q.g.tot_degree(b)) *
                   jaccard(q, a, b) / dom;
        case 1: return static_cast<double>(q.g.tot_degree(free_node)) * jaccard(q, a, b) / dom;
        default: return 1.0 / dom;
    }
}

namespace {

    auto append_pair(edge_ordering & order, const query_pair & pair) -> void
    {
        // pair edges are already ascending
        order.sequence.insert(order.sequence.end(), pair.edges.begin(), pair.edges.end());
    }

    auto by_fixed_rank(const query_graph & q, const domain_map & domains,
                       const std::vector<std::pair<double, std::size_t>> & ranked) -> edge_ordering
    {
        edge_ordering order;
        for (const auto & [rank, i] : ranked) append_pair(order, domains.pairs[i]);
        (void)q;
        return order;
    }

}

auto build_ordering(const query_graph & q, const domain_map & domains) -> edge_ordering
{
    edge_ordering order;
    std::set<node_id> covered;
    std::vector<bool> taken(domains.pairs.size(), false);

    for (std::size_t step = 0; step < domains.pairs.size(); ++step) {
        std::size_t best = domains.pairs.size();
        int best_cf = -1;
        double best_sc = 0.0;
        for (std::size_t i = 0; i < domains.pairs.size(); ++i) {
            if (taken[i]) continue;
            const auto & pr = domains.pairs[i];
            int cf = (covered.count(pr.a) ? 1 : 0) + (covered.count(pr.b) ? 1 : 0);
            if (pr.a == pr.b) cf = covered.count(pr.a) ? 2 : 0;
            auto free_node = covered.count(pr.a) ? pr.b : pr.a;
            auto sc = pair_score(q, pr.a, pr.b, cf, free_node, domains.domains[i].size());
            if (cf > best_cf || (cf == best_cf && sc > best_sc)) {
                best = i;
                best_cf = cf;
                best_sc = sc;
            }
            // remaining ties fall to the smallest (a, b), which is the
            // iteration order of the sorted pair list
        }
        taken[best] = true;
        covered.insert(domains.pairs[best].a);
        covered.insert(domains.pairs[best].b);
        append_pair(order, domains.pairs[best]);
    }
    return order;
}

auto ablation_ordering(ordering_kind kind, const query_graph & q, const domain_map & domains,
                       const multigraph & target, const target_index & idx, std::uint64_t seed)
    -> edge_ordering
{
    if (kind == ordering_kind::full) return build_ordering(q, domains);

    const auto n = domains.pairs.size();

    if (kind == ordering_kind::random) {
        std::vector<std::size_t> perm(n);
        for (std::size_t i = 0; i < n; ++i) perm[i] = i;
        rng r(seed);
        r.shuffle(perm);
        edge_ordering order;
        for (auto i : perm) append_pair(order, domains.pairs[i]);
        return order;
    }

    // target edge count per type, from the degree cache
    std::vector<double> type_freq(idx.layout.n_types, 0.0);
    if (kind == ordering_kind::edge_label_frequency)
        for (node_id u = 0; u < target.n_nodes(); ++u)
            for (type_id t = 0; t < idx.layout.n_types; ++t)
                type_freq[t] += idx.t_degree(u, t, edge_dir::out);

    std::vector<std::pair<double, std::size_t>> ranked(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto & pr = domains.pairs[i];
        double rank = 0.0;
        switch (kind) {
            case ordering_kind::domain_cardinality:
                rank = static_cast<double>(domains.domains[i].size());
                break;
            case ordering_kind::edge_label_frequency: {
                // the pair's least frequent edge type; untyped edges are as
                // frequent as the whole edge set
                double least = static_cast<double>(target.n_edges());
                for (edge_id e : pr.edges) {
                    if (q.untyped[e]) continue;
                    auto tt = target.find_type(q.g.type_name(q.g.edge(e).type));
                    if (tt) least = std::min(least, type_freq[*tt]);
                }
                rank = least;
                break;
            }
            case ordering_kind::degree_only:
                rank = -(static_cast<double>(q.g.tot_degree(pr.a)) *
                         static_cast<double>(q.g.tot_degree(pr.b)) * jaccard(q, pr.a, pr.b));
                break;
            default: throw config_error("unhandled ordering kind");
        }
        ranked[i] = {rank, i};
    }
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const auto & x, const auto & y) { return x.first < y.first; });
    return by_fixed_rank(q, domains, ranked);
}

}

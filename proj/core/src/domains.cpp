#include "mgm/domains.hpp"

#include <set>

#include "mgm/eval.hpp"

namespace mgm {

namespace {

    // Query labels and types translated to target alphabet ids; nullopt when
    // something has no target column, which makes the query unsatisfiable.
    struct translation {
        std::vector<std::vector<label_id>> node_labels;        // per node, sorted target ids
        std::vector<std::optional<type_id>> edge_types;        // per edge; nullopt = untyped
        std::vector<type_id> checked_types;                    // target types used by degree checks
    };

    auto translate(const query_graph & q, const multigraph & target)
        -> std::optional<translation>
    {
        translation tr;
        tr.node_labels.resize(q.n_nodes());
        for (node_id u = 0; u < q.n_nodes(); ++u) {
            for (label_id l : q.g.node(u).labels) {
                auto t = target.find_label(q.g.label_name(l));
                if (!t) return std::nullopt;
                tr.node_labels[u].push_back(*t);
            }
            std::sort(tr.node_labels[u].begin(), tr.node_labels[u].end());
        }
        tr.edge_types.resize(q.n_edges());
        std::set<type_id> used;
        for (edge_id e = 0; e < q.n_edges(); ++e) {
            if (q.untyped[e]) continue;
            auto t = target.find_type(q.g.type_name(q.g.edge(e).type));
            if (!t) return std::nullopt;
            tr.edge_types[e] = *t;
            if (!q.undirected[e]) used.insert(*t);
        }
        tr.checked_types.assign(used.begin(), used.end());
        return tr;
    }

    // directed typed query degrees on target type columns
    struct query_degrees {
        std::size_t n_types = 0;
        std::vector<std::pair<std::uint32_t, std::uint32_t>> cells;  // [node*n_types+t]

        auto out(node_id u, type_id t) const -> std::uint32_t
        {
            return cells[std::size_t{u} * n_types + t].first;
        }
        auto in(node_id u, type_id t) const -> std::uint32_t
        {
            return cells[std::size_t{u} * n_types + t].second;
        }
    };

    auto compute_query_degrees(const query_graph & q, const translation & tr,
                               std::size_t n_target_types) -> query_degrees
    {
        query_degrees qd;
        qd.n_types = n_target_types;
        qd.cells.assign(q.n_nodes() * n_target_types, {0, 0});
        for (edge_id e = 0; e < q.n_edges(); ++e) {
            if (q.undirected[e] || !tr.edge_types[e]) continue;
            const auto & ed = q.g.edge(e);
            ++qd.cells[std::size_t{ed.src} * n_target_types + *tr.edge_types[e]].first;
            ++qd.cells[std::size_t{ed.dst} * n_target_types + *tr.edge_types[e]].second;
        }
        return qd;
    }

}

auto build_query_bit_matrix(const query_graph & q, const multigraph & target)
    -> std::optional<bit_signature_matrix>
{
    auto tr = translate(q, target);
    if (!tr) return std::nullopt;

    bit_signature_matrix bm;
    bm.layout.n_labels = static_cast<std::uint32_t>(target.label_alphabet().size());
    bm.layout.n_types = static_cast<std::uint32_t>(target.type_alphabet().size());

    for (const auto & pair : connected_pairs(q)) {
        // undirected and untyped edges contribute no type bits: absence of
        // constraint and absence of bits coincide
        std::set<type_id> out_types, in_types;
        for (edge_id e : pair.edges) {
            if (q.undirected[e] || !tr->edge_types[e]) continue;
            const auto & ed = q.g.edge(e);
            if (ed.src == ed.dst) {
                out_types.insert(*tr->edge_types[e]);
                in_types.insert(*tr->edge_types[e]);
            }
            else if (ed.src == pair.a)
                out_types.insert(*tr->edge_types[e]);
            else
                in_types.insert(*tr->edge_types[e]);
        }
        std::vector<type_id> out_v(out_types.begin(), out_types.end());
        std::vector<type_id> in_v(in_types.begin(), in_types.end());
        auto fwd = make_signature(bm.layout, tr->node_labels[pair.a], tr->node_labels[pair.b],
                                  out_v, in_v);
        bm.rows.push_back({pair.a, pair.b, fwd});
        bm.rows.push_back({pair.b, pair.a, swap_signature(fwd, bm.layout)});
    }
    return bm;
}

auto degree_check(const query_graph & q, const multigraph & target, const target_index & idx,
                  node_id q_first, node_id q_second, node_id t_first, node_id t_second) -> bool
{
    auto tr = translate(q, target);
    if (!tr) return false;
    auto qd = compute_query_degrees(q, *tr, target.type_alphabet().size());
    for (type_id t : tr->checked_types) {
        if (qd.out(q_first, t) > idx.t_degree(t_first, t, edge_dir::out)) return false;
        if (qd.in(q_first, t) > idx.t_degree(t_first, t, edge_dir::in)) return false;
        if (qd.out(q_second, t) > idx.t_degree(t_second, t, edge_dir::out)) return false;
        if (qd.in(q_second, t) > idx.t_degree(t_second, t, edge_dir::in)) return false;
    }
    return true;
}

auto compute_domains(const query_graph & q, const multigraph & target, const target_index & idx,
                     const node_conditions & conds, const domain_options & opts)
    -> std::optional<domain_map>
{
    auto tr = translate(q, target);
    if (!tr) return std::nullopt;
    auto qm = build_query_bit_matrix(q, target);
    auto qd = compute_query_degrees(q, *tr, target.type_alphabet().size());

    domain_map dm;
    dm.pairs = connected_pairs(q);
    dm.domains.resize(dm.pairs.size());
    dm.edge_target_types = tr->edge_types;
    for (std::size_t i = 0; i < dm.pairs.size(); ++i)
        dm.pair_index.emplace(pair_key(dm.pairs[i].a, dm.pairs[i].b), i);

    auto degrees_fit = [&](node_id qa, node_id qb, node_id ta, node_id tb) {
        for (type_id t : tr->checked_types) {
            if (qd.out(qa, t) > idx.t_degree(ta, t, edge_dir::out)) return false;
            if (qd.in(qa, t) > idx.t_degree(ta, t, edge_dir::in)) return false;
            if (qd.out(qb, t) > idx.t_degree(tb, t, edge_dir::out)) return false;
            if (qd.in(qb, t) > idx.t_degree(tb, t, edge_dir::in)) return false;
        }
        return true;
    };

    std::vector<node_id> no_f(q.n_nodes(), unbound);
    std::vector<edge_id> no_g(q.n_edges(), unbound);
    auto node_ok = [&](node_id qn, node_id tn) {
        if (!opts.paper_strict &&
            !properties_contain(target.node(tn).props, q.g.node(qn).props))
            return false;
        if (qn < conds.size() && !conds[qn].empty()) {
            auto f = no_f;
            f[qn] = tn;
            binding_view bv{q, target, f, no_g};
            if (eval_conjunction(conds[qn], bv) != std::optional<bool>(true)) return false;
        }
        return true;
    };

    // without the bit matrix, orientation compatibility falls back to label
    // superset tests; type and direction presence is left to the matcher
    auto labels_fit = [&](node_id qa, node_id qb, node_id ta, node_id tb) {
        return target.labels_superset(ta, tr->node_labels[qa]) &&
               target.labels_superset(tb, tr->node_labels[qb]);
    };

    for (const auto & row : idx.rows) {
        auto ta = row.first, tb = row.second;
        for (std::size_t i = 0; i < dm.pairs.size(); ++i) {
            auto qa = dm.pairs[i].a, qb = dm.pairs[i].b;
            if ((qa == qb) != (ta == tb)) continue;  // loops pair only with loops

            const auto & fwd = qm->rows[2 * i].bits;
            const auto & bwd = qm->rows[2 * i + 1].bits;

            bool fwd_ok = opts.use_bitmatrix ? signature_contains(row.bits, fwd)
                                             : labels_fit(qa, qb, ta, tb);
            if (fwd_ok && degrees_fit(qa, qb, ta, tb) && node_ok(qa, ta) && node_ok(qb, tb))
                dm.domains[i].entries.emplace_back(ta, tb);

            if (ta == tb) continue;  // a loop row has one orientation
            bool bwd_ok = opts.use_bitmatrix ? signature_contains(row.bits, bwd)
                                             : labels_fit(qa, qb, tb, ta);
            if (bwd_ok && degrees_fit(qa, qb, tb, ta) && node_ok(qa, tb) && node_ok(qb, ta))
                dm.domains[i].entries.emplace_back(tb, ta);
        }
    }

    for (auto & dom : dm.domains) {
        std::sort(dom.entries.begin(), dom.entries.end());
        dom.by_second.resize(dom.entries.size());
        for (std::uint32_t j = 0; j < dom.by_second.size(); ++j) dom.by_second[j] = j;
        std::sort(dom.by_second.begin(), dom.by_second.end(),
                  [&](std::uint32_t x, std::uint32_t y) {
                      const auto & ex = dom.entries[x];
                      const auto & ey = dom.entries[y];
                      return std::pair(ex.second, ex.first) < std::pair(ey.second, ey.first);
                  });
    }

    return dm;
}

}

#include "mgm/matcher.hpp"

#include "mgm/eval.hpp"

namespace mgm {

auto check_node_break_cond(const breaking_conditions & conds, node_id q_node, node_id t_node,
                           std::span<const node_id> f) -> bool
{
    for (const auto & [a, b] : conds.node_conds) {
        if (a == q_node && f[b] != unbound && !(t_node < f[b])) return false;
        if (b == q_node && f[a] != unbound && !(f[a] < t_node)) return false;
    }
    return true;
}

auto check_edge_break_cond(const breaking_conditions & conds, edge_id q_edge, edge_id t_edge,
                           std::span<const edge_id> g) -> bool
{
    for (const auto & [a, b] : conds.edge_conds) {
        if (a == q_edge && g[b] != unbound && !(t_edge < g[b])) return false;
        if (b == q_edge && g[a] != unbound && !(g[a] < t_edge)) return false;
    }
    return true;
}

namespace {

    struct candidate {
        edge_id et;
        node_id tu;  // image of the stored source endpoint
        node_id tv;  // image of the stored destination endpoint
    };

    struct depth_info {
        edge_id e;
        node_id u, v;            // stored endpoints of e
        std::size_t pair_idx;
        bool u_is_first;         // u == pairs[pair_idx].a
        std::vector<const atomic_condition *> node_atoms;  // triggered here, no edge ref
        std::vector<const atomic_condition *> edge_atoms;  // triggered here, reference e
    };

    struct search {
        const query_graph & q;
        const multigraph & target;
        const target_index & idx;
        const breaking_conditions & conds;
        const domain_map & domains;
        const match_options & opts;
        const occurrence_sink & sink;

        std::vector<depth_info> depths;
        std::vector<node_id> f;
        std::vector<edge_id> g;
        std::vector<bool> t_node_used;
        std::vector<std::vector<candidate>> cand;
        std::vector<std::size_t> cursor;
        std::vector<std::array<node_id, 2>> fresh;  // query nodes bound at depth
        std::vector<bool> bound;

        std::uint64_t emitted = 0;
        bool stop_requested = false;
        std::uint64_t steps = 0;

        search(const query_graph & q_, const multigraph & t_, const target_index & idx_,
               const breaking_conditions & conds_, const domain_map & domains_,
               const edge_ordering & order, const std::vector<atomic_condition> & where_atoms,
               const match_options & opts_, const occurrence_sink & sink_) :
            q(q_), target(t_), idx(idx_), conds(conds_), domains(domains_), opts(opts_),
            sink(sink_)
        {
            auto n = q.n_nodes();
            auto m = order.sequence.size();
            f.assign(n, unbound);
            g.assign(q.n_edges(), unbound);
            t_node_used.assign(target.n_nodes(), false);
            cand.resize(m);
            cursor.assign(m, 0);
            fresh.assign(m, {unbound, unbound});
            bound.assign(m, false);

            // first depth that binds each node / edge, from the ordering alone
            std::vector<std::size_t> node_depth(n, m), edge_depth(q.n_edges(), m);
            depths.resize(m);
            for (std::size_t d = 0; d < m; ++d) {
                auto e = order.sequence[d];
                const auto & ed = q.g.edge(e);
                depths[d].e = e;
                depths[d].u = ed.src;
                depths[d].v = ed.dst;
                depths[d].pair_idx = domains.index_of(ed.src, ed.dst);
                depths[d].u_is_first = ed.src == domains.pairs[depths[d].pair_idx].a;
                edge_depth[e] = d;
                if (node_depth[ed.src] == m) node_depth[ed.src] = d;
                if (node_depth[ed.dst] == m) node_depth[ed.dst] = d;
            }

            for (const auto & atom : where_atoms) {
                std::size_t trigger = 0;
                bool has_edge_ref = false;
                auto visit = [&](const entity_ref & ref) {
                    if (auto it = q.node_ids.find(ref.name); it != q.node_ids.end()) {
                        trigger = std::max(trigger, node_depth[it->second]);
                    }
                    else {
                        auto e = q.edge_ids.at(ref.name);
                        trigger = std::max(trigger, edge_depth[e]);
                        has_edge_ref = true;
                    }
                };
                visit(atom.lhs);
                if (atom.rhs.entity) visit(*atom.rhs.entity);
                if (trigger >= m) continue;  // entity never bound; cannot happen on valid input
                auto & slot = has_edge_ref && edge_depth[depths[trigger].e] == trigger &&
                                      references_edge(atom, depths[trigger].e)
                                  ? depths[trigger].edge_atoms
                                  : depths[trigger].node_atoms;
                slot.push_back(&atom);
            }
        }

        auto references_edge(const atomic_condition & atom, edge_id e) const -> bool
        {
            auto is_e = [&](const entity_ref & ref) {
                auto it = q.edge_ids.find(ref.name);
                return it != q.edge_ids.end() && it->second == e;
            };
            return is_e(atom.lhs) || (atom.rhs.entity && is_e(*atom.rhs.entity));
        }

        auto atoms_hold(const std::vector<const atomic_condition *> & atoms) -> bool
        {
            if (atoms.empty()) return true;
            binding_view bv{q, target, f, g};
            for (const auto * atom : atoms)
                if (eval_atom(*atom, bv) != std::optional<bool>(true)) return false;
            return true;
        }

        // ---- candidate generation (the four cases) ---------------------

        auto edge_matches(edge_id e, edge_id et) const -> bool
        {
            const auto & want = domains.edge_target_types[e];
            if (want && target.edge(et).type != *want) return false;
            return properties_contain(idx.edge_properties[et], q.g.edge(e).props);
        }

        auto collect_parallel(std::size_t d, node_id a, node_id b, edge_id e,
                              std::vector<candidate> & out, node_id tu, node_id tv) -> void
        {
            // all target edges a -> b compatible with e, break conditions and
            // edge-level WHERE atoms included
            auto push_checked = [&](edge_id et) {
                if (!edge_matches(e, et)) return;
                if (!check_edge_break_cond(conds, e, et, g)) return;
                bool ok;
                g[e] = et;
                ok = atoms_hold(depths[d].edge_atoms);
                g[e] = unbound;
                if (ok) out.push_back({et, tu, tv});
            };

            if (const auto & want = domains.edge_target_types[depths[d].e]; want) {
                if (const auto * lst = idx.edge_types.find(a, b, *want))
                    for (edge_id et : *lst) push_checked(et);
            }
            else if (const auto * buckets = idx.edge_types.find_pair(a, b)) {
                for (const auto & [tt, lst] : *buckets)
                    for (edge_id et : lst) push_checked(et);
            }
        }

        // target edges for query edge e given endpoint images (tu, tv);
        // undirected pattern edges admit the reversed direction too
        auto collect_edges(std::size_t d, node_id tu, node_id tv, std::vector<candidate> & out)
            -> void
        {
            auto e = depths[d].e;
            collect_parallel(d, tu, tv, e, out, tu, tv);
            if (q.undirected[e] && tu != tv) collect_parallel(d, tv, tu, e, out, tu, tv);
        }

        auto node_fits(node_id qn, node_id tn) const -> bool
        {
            return properties_contain(target.node(tn).props, q.g.node(qn).props) &&
                   check_node_break_cond(conds, qn, tn, f);
        }

        auto try_pair(std::size_t d, node_id tu, node_id tv, std::vector<candidate> & out) -> void
        {
            auto u = depths[d].u, v = depths[d].v;
            bool fresh_u = f[u] == unbound;
            bool fresh_v = v != u && f[v] == unbound;

            if (fresh_u) {
                if (t_node_used[tu]) return;
                if (u == v && tu != tv) return;
                if (!node_fits(u, tu)) return;
            }
            else if (f[u] != tu)
                return;

            auto saved_fu = f[u];
            f[u] = tu;
            bool ok = true;
            if (fresh_v) {
                ok = !t_node_used[tv] && tv != tu && node_fits(v, tv);
            }
            else if (f[v] != tv)
                ok = false;
            if (ok && fresh_u) ok = check_node_break_cond(conds, u, tu, f);

            if (ok) {
                auto saved_fv = f[v];
                f[v] = tv;
                if (atoms_hold(depths[d].node_atoms)) collect_edges(d, tu, tv, out);
                f[v] = saved_fv;
                if (u == v) f[u] = tv == tu ? saved_fu : f[u];  // loop safety; no-op
            }
            f[u] = saved_fu;
        }

        auto find_candidates(std::size_t d) -> void
        {
            auto & out = cand[d];
            out.clear();
            const auto & info = depths[d];
            const auto & dom = domains.domains[info.pair_idx];
            bool bu = f[info.u] != unbound;
            bool bv = f[info.v] != unbound;

            auto oriented = [&](const std::pair<node_id, node_id> & entry)
                -> std::pair<node_id, node_id> {
                // entry = (image of pair.a, image of pair.b) -> (tu, tv)
                return info.u_is_first ? entry : std::pair{entry.second, entry.first};
            };

            if (bu && bv) {
                // both endpoints mapped: scan edges between the images, after
                // a domain membership test on the pair
                auto first_img = info.u_is_first ? f[info.u] : f[info.v];
                auto second_img = info.u_is_first ? f[info.v] : f[info.u];
                if (dom.contains(first_img, second_img))
                    collect_edges(d, f[info.u], f[info.v], out);
                return;
            }

            if (!bu && !bv) {
                for (const auto & entry : dom.entries) {
                    auto [tu, tv] = oriented(entry);
                    try_pair(d, tu, tv, out);
                }
                return;
            }

            // one endpoint mapped: walk the domain slice anchored at its image
            bool anchor_is_first = (bu && info.u_is_first) || (bv && !info.u_is_first);
            auto anchor = bu ? f[info.u] : f[info.v];
            if (anchor_is_first) {
                auto lo = std::lower_bound(dom.entries.begin(), dom.entries.end(),
                                           std::pair{anchor, node_id{0}});
                for (auto it = lo; it != dom.entries.end() && it->first == anchor; ++it) {
                    auto [tu, tv] = oriented(*it);
                    try_pair(d, tu, tv, out);
                }
            }
            else {
                auto key = [&](std::uint32_t i) { return dom.entries[i].second; };
                auto lo = std::lower_bound(dom.by_second.begin(), dom.by_second.end(), anchor,
                                           [&](std::uint32_t i, node_id val) { return key(i) < val; });
                for (auto it = lo; it != dom.by_second.end() && key(*it) == anchor; ++it) {
                    auto [tu, tv] = oriented(dom.entries[*it]);
                    try_pair(d, tu, tv, out);
                }
            }
        }

        // ---- the search loop --------------------------------------------

        auto apply(std::size_t d, const candidate & c) -> void
        {
            const auto & info = depths[d];
            fresh[d] = {unbound, unbound};
            if (f[info.u] == unbound) {
                f[info.u] = c.tu;
                t_node_used[c.tu] = true;
                fresh[d][0] = info.u;
            }
            if (f[info.v] == unbound) {
                f[info.v] = c.tv;
                t_node_used[c.tv] = true;
                fresh[d][1] = info.v;
            }
            g[info.e] = c.et;
            bound[d] = true;
        }

        auto undo(std::size_t d) -> void
        {
            g[depths[d].e] = unbound;
            for (auto qn : fresh[d])
                if (qn != unbound) {
                    t_node_used[f[qn]] = false;
                    f[qn] = unbound;
                }
            fresh[d] = {unbound, unbound};
            bound[d] = false;
        }

        auto deadline_hit() -> bool
        {
            if (!opts.deadline) return false;
            if ((++steps & 0xFFF) != 0) return false;
            return std::chrono::steady_clock::now() >= *opts.deadline;
        }

        auto run() -> match_status
        {
            const auto last = depths.size() - 1;
            std::size_t d = 0;
            find_candidates(0);

            while (true) {
                if (deadline_hit()) return match_status::timeout;
                if (bound[d]) undo(d);

                if (cursor[d] >= cand[d].size()) {
                    cursor[d] = 0;
                    if (d == 0) return match_status::completed;
                    --d;
                    continue;
                }

                const auto & c = cand[d][cursor[d]++];
                // edge-injectivity against ancestors (a target edge maps at
                // most one query edge)
                bool used = false;
                for (auto et : g)
                    if (et == c.et) {
                        used = true;
                        break;
                    }
                if (used) continue;

                apply(d, c);

                if (d == last) {
                    ++emitted;
                    if (!sink({f, g})) return match_status::completed;
                    if (opts.limit && emitted >= *opts.limit) return match_status::completed;
                    continue;  // loop head undoes and advances
                }

                ++d;
                find_candidates(d);
            }
        }
    };

}

auto match_all(const query_graph & q, const multigraph & target, const target_index & idx,
               const breaking_conditions & conds, const domain_map & domains,
               const edge_ordering & order, const std::vector<atomic_condition> & where_atoms,
               const match_options & opts, const occurrence_sink & sink) -> match_status
{
    if (order.sequence.empty()) return match_status::completed;
    search s(q, target, idx, conds, domains, order, where_atoms, opts, sink);
    return s.run();
}

}

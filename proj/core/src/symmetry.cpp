#include "mgm/symmetry.hpp"

#include <map>

#include "mgm/errors.hpp"

namespace mgm {

auto compose(const automorphism & a, const automorphism & b) -> automorphism
{
    automorphism out;
    out.node_perm.resize(a.node_perm.size());
    out.edge_perm.resize(a.edge_perm.size());
    for (std::size_t i = 0; i < a.node_perm.size(); ++i)
        out.node_perm[i] = a.node_perm[b.node_perm[i]];
    for (std::size_t i = 0; i < a.edge_perm.size(); ++i)
        out.edge_perm[i] = a.edge_perm[b.edge_perm[i]];
    return out;
}

auto inverse(const automorphism & a) -> automorphism
{
    automorphism out;
    out.node_perm.resize(a.node_perm.size());
    out.edge_perm.resize(a.edge_perm.size());
    for (std::size_t i = 0; i < a.node_perm.size(); ++i)
        out.node_perm[a.node_perm[i]] = static_cast<node_id>(i);
    for (std::size_t i = 0; i < a.edge_perm.size(); ++i)
        out.edge_perm[a.edge_perm[i]] = static_cast<edge_id>(i);
    return out;
}

namespace {

    auto matchable_props_equal(const property_map & a, const property_map & b) -> bool
    {
        return properties_contain(a, b) && properties_contain(b, a);
    }

    auto props_key(const property_map & props) -> std::string
    {
        return property_map_to_json(props, false).dump();
    }

    using group_key = std::pair<type_id, std::string>;

    // Edge content between an ordered node pair: forward edges x->y, backward
    // edges y->x and undirected edges, grouped by (type, matchable props).
    struct pair_profile {
        std::map<group_key, std::vector<edge_id>> fwd, bwd, undir;
    };

    struct enumerator {
        const query_graph & q;
        std::size_t n, m;
        std::vector<node_id> node_perm;
        std::vector<bool> image_used;
        std::vector<bool> placed;
        std::vector<std::string> node_keys;  // cheap per-node invariant
        std::vector<automorphism> found;

        struct parallel_group {
            std::vector<edge_id> from;
            std::vector<edge_id> to;
        };

        explicit enumerator(const query_graph & q_) :
            q(q_), n(q_.n_nodes()), m(q_.n_edges()), node_perm(n, 0), image_used(n, false),
            placed(n, false)
        {
            node_keys.resize(n);
            for (node_id u = 0; u < n; ++u) {
                std::map<std::tuple<type_id, int>, int> degree;  // (type, dir class) -> count
                for (edge_id e : q.g.out_edges(u))
                    ++degree[{q.g.edge(e).type, q.undirected[e] ? 2 : 0}];
                for (edge_id e : q.g.in_edges(u)) {
                    const auto & ed = q.g.edge(e);
                    if (ed.src == ed.dst) continue;  // loops counted once via out
                    ++degree[{ed.type, q.undirected[e] ? 2 : 1}];
                }
                std::string key;
                for (const auto & [k, c] : degree)
                    key += std::to_string(std::get<0>(k)) + "/" + std::to_string(std::get<1>(k)) +
                           ":" + std::to_string(c) + ";";
                node_keys[u] = key;
            }
        }

        auto profile(node_id x, node_id y) const -> pair_profile
        {
            pair_profile p;
            for (edge_id e : q.g.out_edges(x)) {
                const auto & ed = q.g.edge(e);
                if (ed.dst != y) continue;
                auto & bucket = q.undirected[e] ? p.undir : p.fwd;
                bucket[{ed.type, props_key(ed.props)}].push_back(e);
            }
            for (edge_id e : q.g.in_edges(x)) {
                const auto & ed = q.g.edge(e);
                if (ed.src != y || ed.src == ed.dst) continue;
                auto & bucket = q.undirected[e] ? p.undir : p.bwd;
                bucket[{ed.type, props_key(ed.props)}].push_back(e);
            }
            return p;
        }

        auto shapes_match(const pair_profile & a, const pair_profile & b) const -> bool
        {
            auto sizes = [](const std::map<group_key, std::vector<edge_id>> & groups) {
                std::map<group_key, std::size_t> out;
                for (const auto & [k, v] : groups) out[k] = v.size();
                return out;
            };
            return sizes(a.fwd) == sizes(b.fwd) && sizes(a.bwd) == sizes(b.bwd) &&
                   sizes(a.undir) == sizes(b.undir);
        }

        auto compatible(node_id u, node_id v) const -> bool
        {
            if (node_keys[u] != node_keys[v]) return false;
            if (q.g.node(u).labels != q.g.node(v).labels) return false;
            if (!matchable_props_equal(q.g.node(u).props, q.g.node(v).props)) return false;
            for (node_id w = 0; w < n; ++w) {
                if (w != u && !placed[w]) continue;
                auto z = (w == u) ? v : node_perm[w];
                if (!shapes_match(profile(u, w), profile(v, z))) return false;
            }
            return true;
        }

        auto run() -> void { place(0); }

        auto place(node_id u) -> void
        {
            if (u == n) {
                emit_edge_perms();
                return;
            }
            for (node_id v = 0; v < n; ++v) {
                if (image_used[v] || !compatible(u, v)) continue;
                node_perm[u] = v;
                image_used[v] = true;
                placed[u] = true;
                place(u + 1);
                image_used[v] = false;
                placed[u] = false;
            }
        }

        // Every consistent way of matching parallel edge groups of equal
        // (type, properties) content is a distinct automorphism.
        auto emit_edge_perms() -> void
        {
            std::vector<parallel_group> groups;
            std::map<std::pair<node_id, node_id>, bool> seen;
            for (edge_id e = 0; e < m; ++e) {
                const auto & ed = q.g.edge(e);
                auto x = std::min(ed.src, ed.dst);
                auto y = std::max(ed.src, ed.dst);
                if (std::exchange(seen[{x, y}], true)) continue;
                auto src = profile(x, y);
                auto img = profile(node_perm[x], node_perm[y]);
                for (auto & [key, from] : src.fwd) groups.push_back({from, img.fwd.at(key)});
                for (auto & [key, from] : src.bwd) groups.push_back({from, img.bwd.at(key)});
                for (auto & [key, from] : src.undir) groups.push_back({from, img.undir.at(key)});
            }
            std::vector<edge_id> edge_perm(m, 0);
            assign_group(groups, 0, edge_perm);
        }

        auto assign_group(const std::vector<parallel_group> & groups, std::size_t gi,
                          std::vector<edge_id> & edge_perm) -> void
        {
            if (gi == groups.size()) {
                found.push_back({node_perm, edge_perm});
                return;
            }
            const auto & g = groups[gi];
            std::vector<bool> taken(g.to.size(), false);
            auto rec = [&](auto && self, std::size_t i) -> void {
                if (i == g.from.size()) {
                    assign_group(groups, gi + 1, edge_perm);
                    return;
                }
                for (std::size_t j = 0; j < g.to.size(); ++j) {
                    if (taken[j]) continue;
                    taken[j] = true;
                    edge_perm[g.from[i]] = g.to[j];
                    self(self, i + 1);
                    taken[j] = false;
                }
            };
            rec(rec, 0);
        }
    };

}

auto enumerate_automorphisms(const query_graph & q, unsigned max_query_nodes)
    -> std::vector<automorphism>
{
    if (q.n_nodes() > max_query_nodes)
        throw config_error("query has " + std::to_string(q.n_nodes()) +
                           " nodes, above the automorphism cap of " +
                           std::to_string(max_query_nodes) + "; raise the cap explicitly");
    enumerator en(q);
    en.run();
    return std::move(en.found);
}

namespace {

    auto orbits_of(const std::vector<const std::vector<std::uint32_t> *> & perms, std::size_t n)
        -> std::vector<std::vector<std::uint32_t>>
    {
        std::vector<std::uint32_t> parent(n);
        for (std::uint32_t i = 0; i < n; ++i) parent[i] = i;
        auto find = [&](std::uint32_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto * p : perms)
            for (std::uint32_t i = 0; i < n; ++i) {
                auto a = find(i), b = find((*p)[i]);
                if (a != b) parent[a] = b;
            }
        std::vector<std::vector<std::uint32_t>> members(n);
        for (std::uint32_t i = 0; i < n; ++i) members[find(i)].push_back(i);
        std::vector<std::vector<std::uint32_t>> out;
        for (auto & mem : members)
            if (!mem.empty()) out.push_back(std::move(mem));
        return out;
    }

}

auto derive_conditions(const std::vector<automorphism> & auts) -> breaking_conditions
{
    breaking_conditions out;
    if (auts.empty()) return out;
    auto n = auts.front().node_perm.size();
    auto m = auts.front().edge_perm.size();

    std::vector<const automorphism *> work;
    for (const auto & a : auts) work.push_back(&a);

    auto phase = [&](auto member_perm, std::size_t count, auto & conds) {
        while (true) {
            std::vector<const std::vector<std::uint32_t> *> perms;
            perms.reserve(work.size());
            for (const auto * a : work) perms.push_back(member_perm(a));
            auto orbits = orbits_of(perms, count);

            // the orbit holding the smallest id among orbits of size >= 2
            const std::vector<std::uint32_t> * chosen = nullptr;
            std::uint32_t base = 0;
            for (const auto & orbit : orbits) {
                if (orbit.size() < 2) continue;
                auto mn = *std::min_element(orbit.begin(), orbit.end());
                if (!chosen || mn < base) {
                    chosen = &orbit;
                    base = mn;
                }
            }
            if (!chosen) break;

            std::vector<std::uint32_t> members(*chosen);
            std::sort(members.begin(), members.end());
            for (auto x : members)
                if (x != base) conds.emplace_back(base, x);

            std::vector<const automorphism *> next;
            for (const auto * a : work)
                if ((*member_perm(a))[base] == base) next.push_back(a);
            work = std::move(next);
        }
    };

    phase([](const automorphism * a) { return &a->node_perm; }, n, out.node_conds);
    // what survives fixes every node and can only shuffle parallel edges
    phase([](const automorphism * a) { return &a->edge_perm; }, m, out.edge_conds);

    return out;
}

}
